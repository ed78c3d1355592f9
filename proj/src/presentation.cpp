#include "algkit/presentation.hpp"

#include <algorithm>

namespace algkit {

namespace {

struct KindNames {
  AlgebraKind kind;
  const char* name;
};

constexpr KindNames kKinds[] = {
    {AlgebraKind::commutative_associative, "commutative-associative"},
    {AlgebraKind::associative, "associative"},
    {AlgebraKind::lie, "lie"},
    {AlgebraKind::poisson, "poisson"},
    {AlgebraKind::zinbiel, "zinbiel"},
    {AlgebraKind::pre_lie, "pre-lie"},
    {AlgebraKind::pre_poisson, "pre-poisson"},
    {AlgebraKind::ns_associative, "ns-associative"},
    {AlgebraKind::ns_commutative, "ns-commutative"},
    {AlgebraKind::ns_lie, "ns-lie"},
    {AlgebraKind::ns_poisson, "ns-poisson"},
    {AlgebraKind::l_dendriform, "l-dendriform"},
    {AlgebraKind::ns_pre_lie, "ns-pre-lie"},
    {AlgebraKind::f_manifold, "f-manifold"},
    {AlgebraKind::ns_f_manifold, "ns-f-manifold"},
};

}  // namespace

std::string kind_name(AlgebraKind k) {
  for (const auto& e : kKinds)
    if (e.kind == k) return e.name;
  throw structural_error("bad algebra kind value");
}

AlgebraKind kind_from_name(const std::string& name) {
  for (const auto& e : kKinds)
    if (name == e.name) return e.kind;
  throw structural_error("unknown algebra kind '" + name + "'");
}

const std::vector<AlgebraKind>& all_kinds() {
  static const std::vector<AlgebraKind> kinds = [] {
    std::vector<AlgebraKind> v;
    for (const auto& e : kKinds) v.push_back(e.kind);
    return v;
  }();
  return kinds;
}

const std::vector<std::string>& kind_slots(AlgebraKind k) {
  static const std::map<AlgebraKind, std::vector<std::string>> slots = {
      {AlgebraKind::commutative_associative, {"dot"}},
      {AlgebraKind::associative, {"dot"}},
      {AlgebraKind::lie, {"bracket"}},
      {AlgebraKind::poisson, {"dot", "bracket"}},
      {AlgebraKind::zinbiel, {"star"}},
      {AlgebraKind::pre_lie, {"diamond"}},
      {AlgebraKind::pre_poisson, {"star", "diamond"}},
      {AlgebraKind::ns_associative, {"prec", "succ", "vee"}},
      {AlgebraKind::ns_commutative, {"star", "vee"}},
      {AlgebraKind::ns_lie, {"diamond", "blackdiamond"}},
      {AlgebraKind::ns_poisson, {"star", "vee", "diamond", "blackdiamond"}},
      {AlgebraKind::l_dendriform, {"rtri", "ltri"}},
      {AlgebraKind::ns_pre_lie, {"rtri", "ltri", "circ"}},
      {AlgebraKind::f_manifold, {"dot", "bracket"}},
      {AlgebraKind::ns_f_manifold, {"star", "vee", "diamond", "blackdiamond"}},
  };
  return slots.at(k);
}

const BilinearProduct& AlgebraPresentation::slot(const std::string& name) const {
  const auto it = products.find(name);
  if (it == products.end())
    throw structural_error("presentation has no product slot '" + name + "'");
  return it->second;
}

void validate_presentation(const AlgebraPresentation& p) {
  const auto& required = kind_slots(p.kind);
  if (p.products.size() != required.size())
    throw structural_error("presentation of kind '" + kind_name(p.kind) +
                           "' must have exactly the slots it requires");
  for (const auto& slot : required) {
    const auto it = p.products.find(slot);
    if (it == p.products.end())
      throw structural_error("presentation of kind '" + kind_name(p.kind) +
                             "' is missing product slot '" + slot + "'");
    const auto& prod = it->second;
    if (prod.left != p.space || prod.right != p.space || prod.out != p.space)
      throw structural_error("product slot '" + slot +
                             "' is not an algebra product over the presentation space");
    if (!flag_consistent(prod))
      throw structural_error("product slot '" + slot +
                             "' declares symmetry '" + symmetry_name(prod.sym) +
                             "' but its entries disagree");
  }
}

AlgebraPresentation make_presentation(AlgebraKind kind, const SpaceDescriptor& space,
                                      std::map<std::string, BilinearProduct> products,
                                      std::string metadata) {
  AlgebraPresentation p{kind, space, std::move(products), std::move(metadata)};
  validate_presentation(p);
  return p;
}

bool VerificationReport::holds() const {
  return std::all_of(identities.begin(), identities.end(),
                     [](const IdentityResult& r) { return r.holds; });
}

const IdentityResult* VerificationReport::find(const std::string& name) const {
  for (const auto& r : identities)
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace algkit
