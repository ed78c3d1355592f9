// algkit — structure-level constructions: subadjacent structures,
// embeddings, Hertling-Manin defects, and compatibility sums.

#ifndef ALGKIT_CONSTRUCTIONS_HPP
#define ALGKIT_CONSTRUCTIONS_HPP

#include <tuple>
#include <utility>

#include "algkit/presentation.hpp"
#include "algkit/verify.hpp"

namespace algkit {

// The underlying one-operation-per-symbol structure recovered from an
// NS-type presentation: ns-commutative -> commutative-associative,
// ns-lie -> lie, ns-poisson -> poisson, ns-f-manifold -> f-manifold,
// ns-associative -> associative, ns-pre-lie -> ns-lie,
// pre-poisson -> poisson. Other kinds are unsupported.
AlgebraPresentation subadjacent(const AlgebraPresentation& a);
bool has_subadjacent(AlgebraKind k);

// Supported retags/embeddings between kinds (zinbiel -> ns-commutative
// with trivial vee, poisson -> ns-poisson, ns-commutative ->
// ns-associative, ns-associative -> ns-pre-lie, zinbiel -> l-dendriform,
// pre-lie -> ns-lie, pre-poisson -> ns-poisson, poisson -> f-manifold).
AlgebraPresentation embed(const AlgebraPresentation& a, AlgebraKind target);

// P_x(y,z) = {x, y.z} - {x,y}.z - y.{x,z} for presentations carrying the
// dot and bracket slots.
Vector hertling_manin_P(const AlgebraPresentation& a, const Vector& x, const Vector& y,
                        const Vector& z);

// (F_1, F_2, F_3) of an NS-F-manifold-shaped presentation (the four NS
// slots; ns-poisson presentations qualify).
std::tuple<Vector, Vector, Vector> f_defects(const AlgebraPresentation& a, const Vector& x,
                                             const Vector& y, const Vector& z);

// Slotwise sum of two same-kind presentations over one space, plus its
// verification report.
std::pair<AlgebraPresentation, VerificationReport> sum_and_check_compatible(
    const AlgebraPresentation& a, const AlgebraPresentation& b);

}  // namespace algkit

#endif
