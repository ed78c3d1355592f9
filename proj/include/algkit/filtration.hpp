// algkit — NS-algebra filtrations and the graded quotient construction.

#ifndef ALGKIT_FILTRATION_HPP
#define ALGKIT_FILTRATION_HPP

#include <vector>

#include "algkit/linalg.hpp"
#include "algkit/presentation.hpp"

namespace algkit {

// Increasing chain A_0 <= A_1 <= ... <= A_L given by spanning sets; the
// top level must span the whole space. Levels stabilize above L.
struct Filtration {
  SpaceDescriptor space;
  std::vector<std::vector<Vector>> levels;
};

// Echelonised level bases; validates monotonicity and the spanning top.
std::vector<Echelon> echelonize_filtration(const Filtration& f);

// Filtration closure (A_n op A_m inside A_{n+m} for prec, succ, vee) and
// the NS-Lie conditions (x succ y - y prec x and x vee y land one level
// deeper for x in A_{n+1}, y in A_{m+1}), checked by membership against
// echelon bases. The presentation must be ns-associative.
VerificationReport verify_ns_lie_filtration(const AlgebraPresentation& a,
                                            const Filtration& f);

// Gr(A) = direct sum of A_{n+1}/A_n with the induced star/vee (one level
// up) and diamond/blackdiamond (skew parts, same level) operations,
// returned as an ns-poisson presentation. Representative independence is
// rechecked with perturbed coset representatives.
AlgebraPresentation graded_from_filtration(const AlgebraPresentation& a,
                                           const Filtration& f);

}  // namespace algkit

#endif
