#include "algkit/graded.hpp"

#include <array>

#include "algkit/identities.hpp"
#include "algkit/parallel.hpp"

namespace algkit {

namespace {

struct GradedKindNames {
  GradedKind kind;
  const char* name;
};

constexpr GradedKindNames kGradedKinds[] = {
    {GradedKind::gerstenhaber, "gerstenhaber"},
    {GradedKind::graded_ns_commutative, "graded-ns-commutative"},
    {GradedKind::graded_ns_lie, "graded-ns-lie"},
    {GradedKind::ns_gerstenhaber, "ns-gerstenhaber"},
};

// Exponent of (-1) as a function of plain degrees d[] and shifted degrees
// s[] of the tuple entries.
using ExpFn = long (*)(const std::array<long, 4>& d, const std::array<long, 4>& s);

long exp_zero(const std::array<long, 4>&, const std::array<long, 4>&) { return 0; }

struct GradedTerm {
  Rational coeff;
  ExpFn exponent = exp_zero;
  Expr expr;
};
using GradedTerms = std::vector<GradedTerm>;

struct GradedIdentity {
  std::string name;
  int arity = 3;
  GradedTerms lhs, rhs;
};

GradedTerm gterm(Rational c, ExpFn e, Expr x) { return GradedTerm{std::move(c), e, std::move(x)}; }
GradedTerm gterm(Rational c, Expr x) { return GradedTerm{std::move(c), exp_zero, std::move(x)}; }

bool commutative_type(const std::string& slot) {
  return slot == "dot" || slot == "star" || slot == "vee" || slot == "odot";
}

// Identity tables. Exponent shorthands follow the printed formulas with
// s = degree + bracket shift standing in for the |x|-1 patterns.

std::vector<GradedIdentity> gerstenhaber_identities() {
  const Expr x = V(0), y = V(1), z = V(2);
  GradedIdentity comm{"g-commutativity(dot)", 2,
                      {gterm(1, P("dot", x, y))},
                      {gterm(1, [](const auto& d, const auto&) { return d[0] * d[1]; },
                             P("dot", V(1), V(0)))}};
  GradedIdentity assoc{"g-associativity(dot)", 3,
                       {gterm(1, P("dot", P("dot", x, y), z))},
                       {gterm(1, P("dot", x, P("dot", y, z)))}};
  GradedIdentity skew{"g-skew-symmetry(bracket)", 2,
                      {gterm(1, P("bracket", x, y))},
                      {gterm(-1, [](const auto&, const auto& s) { return s[0] * s[1]; },
                             P("bracket", V(1), V(0)))}};
  GradedIdentity jac{"g-jacobi(bracket)", 3,
                     {gterm(1, [](const auto&, const auto& s) { return s[0] * s[2]; },
                            P("bracket", P("bracket", x, y), z)),
                      gterm(1, [](const auto&, const auto& s) { return s[1] * s[0]; },
                            P("bracket", P("bracket", y, z), x)),
                      gterm(1, [](const auto&, const auto& s) { return s[2] * s[1]; },
                            P("bracket", P("bracket", z, x), y))},
                     {}};
  GradedIdentity leib{"g-leibniz", 3,
                      {gterm(1, P("bracket", x, P("dot", y, z)))},
                      {gterm(1, P("dot", P("bracket", x, y), z)),
                       gterm(1, [](const auto& d, const auto& s) { return s[0] * d[1]; },
                             P("dot", y, P("bracket", x, z)))}};
  return {comm, assoc, skew, jac, leib};
}

std::vector<GradedIdentity> graded_ns_commutative_identities() {
  const Expr x = V(0), y = V(1), z = V(2);
  GradedIdentity comm{"g-commutativity(vee)", 2,
                      {gterm(1, P("vee", x, y))},
                      {gterm(1, [](const auto& d, const auto&) { return d[0] * d[1]; },
                             P("vee", V(1), V(0)))}};
  GradedIdentity c1{"gns-comm-1", 3,
                    {gterm(1, P("star", x, P("star", y, z)))},
                    {gterm(1, P("star", P("odot", x, y), z))}};
  GradedIdentity c2{"gns-comm-2", 3,
                    {gterm(1, P("star", x, P("vee", y, z))),
                     gterm(1, P("vee", x, P("odot", y, z)))},
                    {gterm(1, [](const auto& d, const auto&) { return d[0] * d[1]; },
                           P("star", y, P("vee", x, z))),
                     gterm(1, [](const auto& d, const auto&) { return d[0] * d[1]; },
                           P("vee", y, P("odot", x, z)))}};
  return {comm, c1, c2};
}

std::vector<GradedIdentity> graded_ns_lie_identities() {
  const Expr x = V(0), y = V(1), z = V(2);
  GradedIdentity skew{"g-skew-symmetry(blackdiamond)", 2,
                      {gterm(1, P("blackdiamond", x, y))},
                      {gterm(-1, [](const auto&, const auto& s) { return s[0] * s[1]; },
                             P("blackdiamond", V(1), V(0)))}};
  GradedIdentity l1{
      "gns-lie-1", 3,
      {gterm(1, P("diamond", x, P("diamond", y, z))),
       gterm(-1, P("diamond", P("diamond", x, y), z)),
       gterm(-1, [](const auto&, const auto& s) { return s[0] * s[1]; },
             P("diamond", y, P("diamond", x, z))),
       gterm(1, [](const auto&, const auto& s) { return s[0] * s[1]; },
             P("diamond", P("diamond", y, x), z))},
      {gterm(1, P("diamond", P("blackdiamond", x, y), z))}};
  GradedIdentity l2{
      "gns-lie-2", 3,
      {gterm(1, P("diamond", x, P("blackdiamond", y, z))),
       gterm(1, P("blackdiamond", x, P("dcb", y, z))),
       gterm(1, [](const auto&, const auto& s) { return s[0] * (s[1] + s[2]); },
             P("diamond", y, P("blackdiamond", z, x))),
       gterm(1, [](const auto&, const auto& s) { return s[0] * (s[1] + s[2]); },
             P("blackdiamond", y, P("dcb", z, x))),
       gterm(1, [](const auto&, const auto& s) { return s[2] * (s[0] + s[1]); },
             P("diamond", z, P("blackdiamond", x, y))),
       gterm(1, [](const auto&, const auto& s) { return s[2] * (s[0] + s[1]); },
             P("blackdiamond", z, P("dcb", x, y)))},
      {}};
  return {skew, l1, l2};
}

std::vector<GradedIdentity> ns_gerstenhaber_compat_identities() {
  const Expr x = V(0), y = V(1), z = V(2);
  GradedIdentity p1{"gns-poisson-1", 3,
                    {gterm(1, P("star", P("dcb", x, y), z))},
                    {gterm(1, P("diamond", x, P("star", y, z))),
                     gterm(-1, [](const auto& d, const auto& s) { return s[0] * d[1]; },
                           P("star", y, P("diamond", x, z)))}};
  GradedIdentity p2{"gns-poisson-2", 3,
                    {gterm(1, P("diamond", P("odot", x, y), z))},
                    {gterm(1, P("star", x, P("diamond", y, z))),
                     gterm(1, [](const auto& d, const auto&) { return d[0] * d[1]; },
                           P("star", y, P("diamond", x, z)))}};
  GradedIdentity p3{"gns-poisson-3", 3,
                    {gterm(1, P("blackdiamond", x, P("odot", y, z))),
                     gterm(1, P("diamond", x, P("vee", y, z)))},
                    {gterm(1, P("vee", P("dcb", x, y), z)),
                     gterm(1, [](const auto& d, const auto& s) { return d[2] * (d[0] + s[1]); },
                           P("star", z, P("blackdiamond", x, y))),
                     gterm(1, [](const auto& d, const auto& s) { return s[0] * d[1]; },
                           P("vee", y, P("dcb", x, z))),
                     gterm(1, [](const auto& d, const auto& s) { return s[0] * d[1]; },
                           P("star", y, P("blackdiamond", x, z)))},
  };
  return {p1, p2, p3};
}

std::vector<GradedIdentity> graded_identities_for(GradedKind kind) {
  switch (kind) {
    case GradedKind::gerstenhaber:
      return gerstenhaber_identities();
    case GradedKind::graded_ns_commutative:
      return graded_ns_commutative_identities();
    case GradedKind::graded_ns_lie:
      return graded_ns_lie_identities();
    case GradedKind::ns_gerstenhaber: {
      auto ids = graded_ns_commutative_identities();
      for (auto& id : graded_ns_lie_identities()) ids.push_back(std::move(id));
      for (auto& id : ns_gerstenhaber_compat_identities()) ids.push_back(std::move(id));
      return ids;
    }
  }
  throw structural_error("bad graded kind value");
}

// Materialized slot table: base products plus the graded subadjacent
// operations where the kind defines them.
SlotTable graded_slot_table(const GradedPresentation& g) {
  SlotTable table;
  for (const auto& [name, gp] : g.products) table.emplace(name, gp.p);
  if (g.kind == GradedKind::graded_ns_commutative || g.kind == GradedKind::ns_gerstenhaber) {
    const auto& star = g.slot("star").p;
    table.emplace("odot", combine({{1, star},
                                   {1, signed_flip(star, g.degrees, 0)},
                                   {1, g.slot("vee").p}}));
  }
  if (g.kind == GradedKind::graded_ns_lie || g.kind == GradedKind::ns_gerstenhaber) {
    const auto& dia = g.slot("diamond").p;
    table.emplace("dcb", combine({{1, dia},
                                  {-1, signed_flip(dia, g.degrees, g.lie_shift())},
                                  {1, g.slot("blackdiamond").p}}));
  }
  return table;
}

std::optional<Counterexample> scan_graded_identity(const GradedPresentation& g,
                                                   const SlotTable& slots,
                                                   const GradedIdentity& id) {
  const std::size_t n = g.space.dimension();
  if (n == 0) return std::nullopt;
  std::size_t total = 1;
  for (int i = 0; i < id.arity; ++i) total *= n;
  const long shift = g.lie_shift();
  auto check = [&](std::size_t index) -> std::optional<Counterexample> {
    std::vector<std::size_t> tuple(static_cast<std::size_t>(id.arity));
    std::size_t rem = index;
    for (int v = id.arity - 1; v >= 0; --v) {
      tuple[static_cast<std::size_t>(v)] = rem % n;
      rem /= n;
    }
    std::array<long, 4> d{0, 0, 0, 0}, s{0, 0, 0, 0};
    for (int v = 0; v < id.arity; ++v) {
      d[static_cast<std::size_t>(v)] = g.degrees[tuple[static_cast<std::size_t>(v)]];
      s[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(v)] + shift;
    }
    const auto eval_side = [&](const GradedTerms& terms) {
      Vector acc = zero_vector(n);
      for (const auto& t : terms) {
        Vector v = eval_expr(slots, t.expr, tuple, n);
        Rational coeff = t.coeff;
        if (t.exponent(d, s) % 2 != 0) coeff = -coeff;
        if (coeff != 1) v *= coeff;
        acc += v;
      }
      return acc;
    };
    Vector lhs = eval_side(id.lhs);
    Vector rhs = eval_side(id.rhs);
    if (lhs == rhs) return std::nullopt;
    Counterexample cex;
    for (const std::size_t i : tuple) cex.tuple.push_back(g.space.basis[i]);
    cex.lhs = std::move(lhs);
    cex.rhs = std::move(rhs);
    cex.value_basis = g.space.basis;
    return cex;
  };
  return scan_first(total, check);
}

}  // namespace

std::string graded_kind_name(GradedKind k) {
  for (const auto& e : kGradedKinds)
    if (e.kind == k) return e.name;
  throw structural_error("bad graded kind value");
}

GradedKind graded_kind_from_name(const std::string& name) {
  for (const auto& e : kGradedKinds)
    if (name == e.name) return e.kind;
  throw structural_error("unknown graded kind '" + name + "'");
}

const std::vector<std::string>& graded_kind_slots(GradedKind k) {
  static const std::map<GradedKind, std::vector<std::string>> slots = {
      {GradedKind::gerstenhaber, {"dot", "bracket"}},
      {GradedKind::graded_ns_commutative, {"star", "vee"}},
      {GradedKind::graded_ns_lie, {"diamond", "blackdiamond"}},
      {GradedKind::ns_gerstenhaber, {"star", "vee", "diamond", "blackdiamond"}},
  };
  return slots.at(k);
}

const GradedProduct& GradedPresentation::slot(const std::string& name) const {
  const auto it = products.find(name);
  if (it == products.end())
    throw structural_error("graded presentation has no product slot '" + name + "'");
  return it->second;
}

long GradedPresentation::lie_shift() const {
  for (const char* name : {"bracket", "diamond", "blackdiamond"}) {
    const auto it = products.find(name);
    if (it != products.end()) return it->second.shift;
  }
  return 0;
}

void validate_graded_presentation(const GradedPresentation& g) {
  if (g.degrees.size() != g.space.dimension())
    throw structural_error("graded presentation needs one degree per basis element");
  const auto& required = graded_kind_slots(g.kind);
  if (g.products.size() != required.size())
    throw structural_error("graded presentation must carry exactly its kind's slots");
  std::optional<long> lie_shift;
  for (const auto& slot : required) {
    const auto it = g.products.find(slot);
    if (it == g.products.end())
      throw structural_error("graded presentation is missing product slot '" + slot + "'");
    const auto& gp = it->second;
    if (gp.p.left != g.space || gp.p.right != g.space || gp.p.out != g.space)
      throw structural_error("graded product '" + slot + "' is not over the presentation space");
    if (commutative_type(slot)) {
      if (gp.shift != 0)
        throw structural_error("graded product '" + slot + "' must have degree shift 0");
    } else {
      if (lie_shift && *lie_shift != gp.shift)
        throw structural_error("bracket-type products must share one degree shift");
      lie_shift = gp.shift;
    }
    const std::size_t n = g.space.dimension();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (gp.p.at(i, j, k) != 0 &&
              g.degrees[k] != g.degrees[i] + g.degrees[j] + gp.shift)
            throw structural_error("graded product '" + slot +
                                   "' violates degree homogeneity at (" + g.space.basis[i] +
                                   ", " + g.space.basis[j] + ") -> " + g.space.basis[k]);
  }
}

GradedPresentation make_graded_presentation(GradedKind kind, SpaceDescriptor space,
                                            std::vector<long> degrees,
                                            std::map<std::string, GradedProduct> products,
                                            std::string metadata) {
  GradedPresentation g{kind, std::move(space), std::move(degrees), std::move(products),
                       std::move(metadata)};
  validate_graded_presentation(g);
  return g;
}

BilinearProduct signed_flip(const BilinearProduct& p, const std::vector<long>& degrees,
                            long shift) {
  if (!p.square()) throw structural_error("signed_flip: product inputs are not square");
  BilinearProduct out = p;
  const std::size_t n = p.left.dimension();
  const std::size_t m = p.out.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long e = (degrees[i] + shift) * (degrees[j] + shift);
      for (std::size_t k = 0; k < m; ++k) {
        Rational v = p.at(j, i, k);
        if (e % 2 != 0) v = -v;
        out.at(i, j, k) = v;
      }
    }
  out.sym = Symmetry::none;
  return out;
}

VerificationReport verify_graded(const GradedPresentation& g) {
  validate_graded_presentation(g);
  const SlotTable slots = graded_slot_table(g);
  VerificationReport report;
  for (const auto& id : graded_identities_for(g.kind)) {
    IdentityResult result{id.name, true, std::nullopt};
    if (auto cex = scan_graded_identity(g, slots, id)) {
      result.holds = false;
      result.counterexample = std::move(cex);
    }
    report.identities.push_back(std::move(result));
  }
  return report;
}

GradedPresentation graded_subadjacent(const GradedPresentation& g) {
  if (g.kind != GradedKind::ns_gerstenhaber)
    throw structural_error("graded_subadjacent expects an ns-gerstenhaber presentation");
  {
    VerificationReport rep = verify_graded(g);
    if (!rep.holds())
      throw precondition_error("graded structure check failed", std::move(rep));
  }
  const SlotTable slots = graded_slot_table(g);
  std::map<std::string, GradedProduct> prods;
  prods["dot"] = GradedProduct{slots.at("odot"), 0};
  prods["bracket"] = GradedProduct{slots.at("dcb"), g.lie_shift()};
  return make_graded_presentation(GradedKind::gerstenhaber, g.space, g.degrees,
                                  std::move(prods), g.metadata);
}

VerificationReport verify_graded_nijenhuis(const GradedPresentation& g,
                                           const OperatorMatrix& n) {
  validate_graded_presentation(g);
  if (g.kind != GradedKind::gerstenhaber)
    throw structural_error("verify_graded_nijenhuis expects a gerstenhaber presentation");
  if (g.space != n.space)
    throw structural_error("operator space does not match the presentation space");
  const std::size_t dim = g.space.dimension();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (n.at(i, j) != 0 && g.degrees[i] != g.degrees[j])
        throw structural_error("operator is not degree-preserving");
  VerificationReport report;
  for (const auto& slot : graded_kind_slots(g.kind)) {
    const auto& p = g.slot(slot).p;
    IdentityResult result{"graded-nijenhuis(" + slot + ")", true, std::nullopt};
    auto check = [&](std::size_t index) -> std::optional<Counterexample> {
      const std::size_t i = index / dim, j = index % dim;
      Vector lhs = eval_product(p, n.column(i), n.column(j));
      Vector inner = eval_product(p, n.column(i), basis_vector(dim, j)) +
                     eval_product(p, basis_vector(dim, i), n.column(j)) -
                     n.apply(eval_basis(p, i, j));
      Vector rhs = n.apply(inner);
      if (lhs == rhs) return std::nullopt;
      return Counterexample{{g.space.basis[i], g.space.basis[j]}, std::move(lhs),
                            std::move(rhs), g.space.basis, std::nullopt};
    };
    if (auto cex = scan_first(dim * dim, check)) {
      result.holds = false;
      result.counterexample = std::move(cex);
    }
    report.identities.push_back(std::move(result));
  }
  return report;
}

GradedPresentation graded_induce_from_nijenhuis(const GradedPresentation& g,
                                                const OperatorMatrix& n,
                                                Strictness strictness) {
  if (g.kind != GradedKind::gerstenhaber)
    throw structural_error("graded_induce_from_nijenhuis expects a gerstenhaber presentation");
  if (strictness == Strictness::strict) {
    VerificationReport rep = verify_graded_nijenhuis(g, n);
    if (!rep.holds())
      throw precondition_error("operator is not graded Nijenhuis", std::move(rep));
  }
  const std::size_t dim = g.space.dimension();
  const auto split = [&](const BilinearProduct& p) {
    BilinearProduct acted = zero_product(g.space), wrapped = zero_product(g.space);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        const Vector lhs = eval_product(p, n.column(i), basis_vector(dim, j));
        const Vector neg = n.apply(eval_basis(p, i, j));
        for (std::size_t k = 0; k < dim; ++k) {
          acted.at(i, j, k) = lhs.coords[k];
          wrapped.at(i, j, k) = -neg.coords[k];
        }
      }
    acted.sym = Symmetry::none;
    wrapped.sym = Symmetry::none;
    return std::make_pair(std::move(acted), std::move(wrapped));
  };
  auto [star, vee] = split(g.slot("dot").p);
  auto [dia, bdia] = split(g.slot("bracket").p);
  const long lshift = g.slot("bracket").shift;
  std::map<std::string, GradedProduct> prods;
  prods["star"] = GradedProduct{std::move(star), 0};
  prods["vee"] = GradedProduct{std::move(vee), 0};
  prods["diamond"] = GradedProduct{std::move(dia), lshift};
  prods["blackdiamond"] = GradedProduct{std::move(bdia), lshift};
  return make_graded_presentation(GradedKind::ns_gerstenhaber, g.space, g.degrees,
                                  std::move(prods), g.metadata);
}

}  // namespace algkit
