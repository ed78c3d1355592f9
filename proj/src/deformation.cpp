#include "algkit/deformation.hpp"

#include "algkit/parallel.hpp"

namespace algkit {

namespace {

// One term of a depth-two identity: coeff * Outer(Inner(va,vb), vc) when
// inner_left, else coeff * Outer(va, Inner(vb,vc)); variables listed in
// leaf order.
struct ConvTerm {
  Rational coeff;
  std::string outer, inner;
  bool inner_left = true;
  std::array<int, 3> vars{0, 1, 2};
};

struct ConvIdentity {
  std::string name;
  std::vector<ConvTerm> lhs, rhs;
};

ConvTerm tL(Rational c, std::string outer, std::string inner, int a, int b, int v) {
  return ConvTerm{std::move(c), std::move(outer), std::move(inner), true, {a, b, v}};
}
ConvTerm tR(Rational c, std::string outer, std::string inner, int a, int b, int v) {
  return ConvTerm{std::move(c), std::move(outer), std::move(inner), false, {a, b, v}};
}

std::vector<ConvIdentity> deformation_identities(AlgebraKind base_kind) {
  switch (base_kind) {
    case AlgebraKind::commutative_associative:
      // Associativity of the deformed product; the base alone is
      // required to be commutative.
      return {{"associativity(dot)",
               {tL(1, "dot", "dot", 0, 1, 2)},
               {tR(1, "dot", "dot", 0, 1, 2)}}};
    case AlgebraKind::pre_lie:
      return {{"pre-lie(diamond)",
               {tR(1, "diamond", "diamond", 0, 1, 2), tL(-1, "diamond", "diamond", 0, 1, 2)},
               {tR(1, "diamond", "diamond", 1, 0, 2), tL(-1, "diamond", "diamond", 1, 0, 2)}}};
    case AlgebraKind::ns_associative:
      return {
          {"ns-assoc-1",
           {tL(1, "prec", "prec", 0, 1, 2)},
           {tR(1, "prec", "odot", 0, 1, 2)}},
          {"ns-assoc-2",
           {tL(1, "prec", "succ", 0, 1, 2)},
           {tR(1, "succ", "prec", 0, 1, 2)}},
          {"ns-assoc-3",
           {tL(1, "succ", "odot", 0, 1, 2)},
           {tR(1, "succ", "succ", 0, 1, 2)}},
          {"ns-assoc-4",
           {tL(1, "prec", "vee", 0, 1, 2), tL(1, "vee", "odot", 0, 1, 2)},
           {tR(1, "succ", "vee", 0, 1, 2), tR(1, "vee", "odot", 0, 1, 2)}},
      };
    case AlgebraKind::ns_pre_lie:
    case AlgebraKind::l_dendriform: {
      std::vector<ConvIdentity> ids = {
          {"ns-pre-lie-1",
           {tL(1, "rtri", "odot", 0, 1, 2), tR(-1, "rtri", "rtri", 0, 1, 2)},
           {tL(1, "rtri", "odot", 1, 0, 2), tR(-1, "rtri", "rtri", 1, 0, 2)}},
          {"ns-pre-lie-2",
           {tR(1, "rtri", "ltri", 0, 1, 2), tL(-1, "ltri", "rtri", 0, 1, 2)},
           {tR(1, "ltri", "odot", 1, 0, 2), tL(-1, "ltri", "ltri", 1, 0, 2)}},
      };
      if (base_kind == AlgebraKind::ns_pre_lie)
        ids.push_back({"ns-pre-lie-3",
                       {tL(1, "circ", "odot", 0, 1, 2), tR(-1, "circ", "odot", 0, 1, 2),
                        tL(1, "ltri", "circ", 0, 1, 2), tR(-1, "rtri", "circ", 0, 1, 2)},
                       {tL(1, "circ", "odot", 1, 0, 2), tR(-1, "circ", "odot", 1, 0, 2),
                        tL(1, "ltri", "circ", 1, 0, 2), tR(-1, "rtri", "circ", 1, 0, 2)}});
      return ids;
    }
    default:
      throw structural_error("kind '" + kind_name(base_kind) +
                             "' does not support deformations");
  }
}

// Per-power layers including the derived subadjacent-sum slot.
using LayerTable = std::map<std::string, std::vector<BilinearProduct>>;

LayerTable build_layers(const TruncatedDeformation& d) {
  LayerTable layers = d.slots;
  const auto& names = deformation_slot_names(d.base_kind);
  if (names.size() > 1) {
    std::vector<BilinearProduct> odot;
    for (int p = 0; p <= d.order; ++p) {
      std::vector<std::pair<Rational, BilinearProduct>> terms;
      for (const auto& name : names)
        terms.emplace_back(1, d.slot(name)[static_cast<std::size_t>(p)]);
      odot.push_back(combine(terms));
    }
    layers.emplace("odot", std::move(odot));
  }
  return layers;
}

}  // namespace

const std::vector<BilinearProduct>& TruncatedDeformation::slot(
    const std::string& name) const {
  const auto it = slots.find(name);
  if (it == slots.end())
    throw structural_error("deformation has no slot '" + name + "'");
  return it->second;
}

bool deformable_kind(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::commutative_associative:
    case AlgebraKind::ns_associative:
    case AlgebraKind::ns_pre_lie:
    case AlgebraKind::l_dendriform:
    case AlgebraKind::pre_lie:
      return true;
    default:
      return false;
  }
}

const std::vector<std::string>& deformation_slot_names(AlgebraKind base_kind) {
  static const std::map<AlgebraKind, std::vector<std::string>> names = {
      {AlgebraKind::commutative_associative, {"dot"}},
      {AlgebraKind::ns_associative, {"prec", "succ", "vee"}},
      {AlgebraKind::ns_pre_lie, {"rtri", "ltri", "circ"}},
      {AlgebraKind::l_dendriform, {"rtri", "ltri"}},
      {AlgebraKind::pre_lie, {"diamond"}},
  };
  const auto it = names.find(base_kind);
  if (it == names.end())
    throw structural_error("kind '" + kind_name(base_kind) +
                           "' does not support deformations");
  return it->second;
}

TruncatedDeformation make_truncated_deformation(
    AlgebraKind base_kind, SpaceDescriptor space, int order,
    std::map<std::string, std::vector<BilinearProduct>> slots) {
  if (!deformable_kind(base_kind))
    throw structural_error("kind '" + kind_name(base_kind) +
                           "' does not support deformations");
  if (order < 1) throw structural_error("deformation order must be at least 1");
  const auto& names = deformation_slot_names(base_kind);
  if (slots.size() != names.size())
    throw structural_error("deformation must carry exactly its base kind's slots");
  for (const auto& name : names) {
    auto it = slots.find(name);
    if (it == slots.end())
      throw structural_error("deformation is missing slot '" + name + "'");
    auto& layers = it->second;
    if (layers.size() > static_cast<std::size_t>(order) + 1)
      throw structural_error("slot '" + name + "' has more layers than order+1");
    while (layers.size() < static_cast<std::size_t>(order) + 1)
      layers.push_back(zero_product(space));
    for (const auto& p : layers)
      if (p.left != space || p.right != space || p.out != space)
        throw structural_error("slot '" + name + "' has a layer over the wrong space");
  }
  return TruncatedDeformation{base_kind, std::move(space), order, std::move(slots)};
}

VerificationReport verify_deformation(const TruncatedDeformation& d) {
  const LayerTable layers = build_layers(d);
  const std::size_t n = d.space.dimension();
  VerificationReport report;
  for (const auto& id : deformation_identities(d.base_kind)) {
    IdentityResult result{id.name, true, std::nullopt};
    // t-power outer, basis tuple inner; first failure wins.
    const std::size_t tuples = n * n * n;
    auto eval_side = [&](const std::vector<ConvTerm>& terms, int power,
                         const std::array<std::size_t, 3>& t) {
      Vector acc = zero_vector(n);
      for (const auto& term : terms) {
        const auto& outer = layers.at(term.outer);
        const auto& inner = layers.at(term.inner);
        const std::size_t a = t[static_cast<std::size_t>(term.vars[0])];
        const std::size_t b = t[static_cast<std::size_t>(term.vars[1])];
        const std::size_t c = t[static_cast<std::size_t>(term.vars[2])];
        for (int i = 0; i <= power; ++i) {
          const int j = power - i;
          const auto& po = outer[static_cast<std::size_t>(i)];
          const auto& pi = inner[static_cast<std::size_t>(j)];
          Vector val = term.inner_left
                           ? eval_product(po, eval_basis(pi, a, b), basis_vector(n, c))
                           : eval_product(po, basis_vector(n, a), eval_basis(pi, b, c));
          if (term.coeff != 1) val *= term.coeff;
          acc += val;
        }
      }
      return acc;
    };
    for (int power = 0; power <= d.order && result.holds; ++power) {
      auto check = [&](std::size_t index) -> std::optional<Counterexample> {
        const std::array<std::size_t, 3> t{index / (n * n), (index / n) % n, index % n};
        Vector lhs = eval_side(id.lhs, power, t);
        Vector rhs = eval_side(id.rhs, power, t);
        if (lhs == rhs) return std::nullopt;
        return Counterexample{{d.space.basis[t[0]], d.space.basis[t[1]], d.space.basis[t[2]]},
                              std::move(lhs), std::move(rhs), d.space.basis, power};
      };
      if (auto cex = scan_first(tuples, check)) {
        result.holds = false;
        result.counterexample = std::move(cex);
      }
    }
    report.identities.push_back(std::move(result));
  }
  return report;
}

namespace {

BilinearProduct skew_of(const BilinearProduct& a, const BilinearProduct& b) {
  // a - flip(b)
  return combine({{1, a}, {-1, flip(b)}});
}

void require_symmetric(const BilinearProduct& p, const char* what) {
  if (symmetry_of(p) != Symmetry::symmetric)
    throw structural_error(std::string("semiclassical limit needs a symmetric ") + what +
                           " at t^0");
}

}  // namespace

AlgebraPresentation semiclassical_limit(const TruncatedDeformation& d) {
  if (d.order < 2)
    throw structural_error("semiclassical limit needs order >= 2");
  {
    VerificationReport rep = verify_deformation(d);
    if (!rep.holds())
      throw precondition_error("deformation check failed", std::move(rep));
  }
  const auto layer = [&](const char* slot, int p) -> const BilinearProduct& {
    return d.slot(slot)[static_cast<std::size_t>(p)];
  };
  std::map<std::string, BilinearProduct> prods;
  AlgebraKind kind;
  switch (d.base_kind) {
    case AlgebraKind::commutative_associative: {
      require_symmetric(layer("dot", 0), "product");
      kind = AlgebraKind::poisson;
      prods["dot"] = layer("dot", 0);
      prods["bracket"] = skew_of(layer("dot", 1), layer("dot", 1));
      break;
    }
    case AlgebraKind::ns_associative: {
      if (!layer("succ", 0).same_entries(flip(layer("prec", 0))))
        throw structural_error(
            "semiclassical limit needs an NS-commutative base: succ_0 must equal the flip "
            "of prec_0");
      require_symmetric(layer("vee", 0), "vee product");
      kind = AlgebraKind::ns_poisson;
      prods["star"] = layer("succ", 0);
      prods["vee"] = layer("vee", 0);
      prods["diamond"] = skew_of(layer("succ", 1), layer("prec", 1));
      prods["blackdiamond"] = skew_of(layer("vee", 1), layer("vee", 1));
      break;
    }
    case AlgebraKind::ns_pre_lie: {
      if (!layer("ltri", 0).same_entries(flip(layer("rtri", 0))))
        throw structural_error(
            "semiclassical limit needs an NS-commutative base: ltri_0 must equal the flip "
            "of rtri_0");
      require_symmetric(layer("circ", 0), "circ product");
      kind = AlgebraKind::ns_f_manifold;
      prods["star"] = layer("rtri", 0);
      prods["vee"] = layer("circ", 0);
      prods["diamond"] = skew_of(layer("rtri", 1), layer("ltri", 1));
      prods["blackdiamond"] = skew_of(layer("circ", 1), layer("circ", 1));
      break;
    }
    case AlgebraKind::l_dendriform: {
      if (!layer("ltri", 0).same_entries(flip(layer("rtri", 0))))
        throw structural_error(
            "semiclassical limit needs a zinbiel base: ltri_0 must equal the flip of rtri_0");
      kind = AlgebraKind::ns_f_manifold;
      prods["star"] = layer("rtri", 0);
      prods["vee"] = zero_product(d.space);
      prods["diamond"] = skew_of(layer("rtri", 1), layer("ltri", 1));
      prods["blackdiamond"] = zero_product(d.space);
      break;
    }
    case AlgebraKind::pre_lie: {
      require_symmetric(layer("diamond", 0), "product");
      kind = AlgebraKind::f_manifold;
      prods["dot"] = layer("diamond", 0);
      prods["bracket"] = skew_of(layer("diamond", 1), layer("diamond", 1));
      break;
    }
    default:
      throw structural_error("kind does not support deformations");
  }
  for (auto& [name, p] : prods) p.sym = symmetry_of(p);
  return make_presentation(kind, d.space, std::move(prods),
                           "semi-classical limit of a " + kind_name(d.base_kind) +
                               " deformation");
}

}  // namespace algkit
