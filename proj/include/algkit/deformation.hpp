// algkit — truncated formal deformations over k[t]/(t^{m+1}) and their
// semi-classical limits.

#ifndef ALGKIT_DEFORMATION_HPP
#define ALGKIT_DEFORMATION_HPP

#include <map>
#include <string>
#include <vector>

#include "algkit/presentation.hpp"

namespace algkit {

// Coefficient tables per slot, indexed by t-power 0..order. The t^0
// layer is the base structure.
struct TruncatedDeformation {
  AlgebraKind base_kind{};  // commutative-associative (associative base),
                            // ns-associative, ns-pre-lie, l-dendriform, pre-lie
  SpaceDescriptor space;
  int order = 1;  // m >= 1
  std::map<std::string, std::vector<BilinearProduct>> slots;

  const std::vector<BilinearProduct>& slot(const std::string& name) const;
};

const std::vector<std::string>& deformation_slot_names(AlgebraKind base_kind);
bool deformable_kind(AlgebraKind k);

TruncatedDeformation make_truncated_deformation(
    AlgebraKind base_kind, SpaceDescriptor space, int order,
    std::map<std::string, std::vector<BilinearProduct>> slots);

// All identities of the base kind, checked coefficientwise: for every
// total t-power n <= order the convolution sums must balance. A failure
// cites (identity, t-power, basis tuple).
VerificationReport verify_deformation(const TruncatedDeformation& d);

// The structure on the base extracted from the t^0 and t^1 layers:
// associative -> poisson, ns-associative -> ns-poisson, ns-pre-lie ->
// ns-f-manifold, l-dendriform -> ns-f-manifold (trivial vee and
// blackdiamond), pre-lie -> f-manifold. Requires order >= 2, a verified
// deformation and the base symmetry of each kind.
AlgebraPresentation semiclassical_limit(const TruncatedDeformation& d);

}  // namespace algkit

#endif
