// algkit — representations of Poisson and F-manifold algebras.

#ifndef ALGKIT_REPRESENTATION_HPP
#define ALGKIT_REPRESENTATION_HPP

#include <utility>

#include "algkit/presentation.hpp"

namespace algkit {

// Action constants: mu.at(x, v, w) is the f_w coefficient of mu_{e_x}(f_v),
// stored as bilinear products A x V -> V.
struct RepresentationPresentation {
  SpaceDescriptor algebra_space;  // A
  SpaceDescriptor module_space;   // V
  BilinearProduct mu;
  BilinearProduct rho;
};

RepresentationPresentation make_representation(SpaceDescriptor algebra_space,
                                               SpaceDescriptor module_space,
                                               BilinearProduct mu, BilinearProduct rho);

// Module axioms for (V, mu) over the commutative product, the Lie module
// axiom for (V, rho), and the poisson (or f-manifold) compatibility
// conditions, all over basis tuples. Kinds: poisson, f-manifold.
VerificationReport verify_representation(const AlgebraPresentation& a,
                                         const RepresentationPresentation& v);

// (A, mu, rho) with mu_x y = x.y and rho_x y = {x,y}.
RepresentationPresentation adjoint_representation(const AlgebraPresentation& a);

// For an NS-Poisson / NS-F-manifold presentation: the subadjacent
// structure together with mu_x y = x*y, rho_x y = x<>y on V = A.
std::pair<AlgebraPresentation, RepresentationPresentation> induced_representation(
    const AlgebraPresentation& a);

}  // namespace algkit

#endif
