// algkit — Poisson 2-cocycles, twisted Rota-Baxter operators, the induced
// NS-Poisson structure on the module, and the canonical converse
// factorization through the identity map.

#ifndef ALGKIT_TWISTED_HPP
#define ALGKIT_TWISTED_HPP

#include <tuple>

#include "algkit/linalg.hpp"
#include "algkit/representation.hpp"

namespace algkit {

// h symmetric, H skew, both A x A -> V.
struct CocyclePair {
  SpaceDescriptor algebra_space;  // A
  SpaceDescriptor module_space;   // V
  BilinearProduct h;
  BilinearProduct H;
};

CocyclePair make_cocycle_pair(SpaceDescriptor algebra_space, SpaceDescriptor module_space,
                              BilinearProduct h, BilinearProduct H);

// Harrison 2-cocycle condition for h, the Chevalley-Eilenberg condition
// for H, and the mixed compatibility, over basis triples of A. The
// representation is verified first; a failing representation raises
// precondition_error carrying its report.
VerificationReport verify_poisson_2cocycle(const AlgebraPresentation& a,
                                           const RepresentationPresentation& rep,
                                           const CocyclePair& c);

// Both twisted Rota-Baxter equations for R : V -> A over basis pairs of
// V. The 2-cocycle (and hence the representation) is verified first.
VerificationReport verify_twisted_rb(const AlgebraPresentation& a,
                                     const RepresentationPresentation& rep,
                                     const CocyclePair& c, const ModuleMap& r);

// u*v = mu_{R(u)} v, u v v = h(Ru, Rv), u<>v = rho_{R(u)} v,
// u#v = H(Ru, Rv): an NS-Poisson presentation on V.
AlgebraPresentation induce_from_twisted_rb(const AlgebraPresentation& a,
                                           const RepresentationPresentation& rep,
                                           const CocyclePair& c, const ModuleMap& r);

// For a verified NS-Poisson presentation: its subadjacent algebra, the
// induced representation, the cocycle pair (vee, blackdiamond), and the
// identity module map. Feeding the tuple back through
// induce_from_twisted_rb reproduces the input exactly.
std::tuple<AlgebraPresentation, RepresentationPresentation, CocyclePair, ModuleMap>
canonical_twisted_factorization(const AlgebraPresentation& a);

}  // namespace algkit

#endif
