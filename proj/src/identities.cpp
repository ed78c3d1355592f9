#include "algkit/identities.hpp"

namespace algkit {

Expr V(int var) {
  Expr e;
  e.var = var;
  return e;
}

Expr P(std::string slot, Expr a, Expr b) {
  Expr e;
  e.slot = std::move(slot);
  e.args = {std::move(a), std::move(b)};
  return e;
}

Terms term(const Rational& coeff, Expr e) { return {Term{coeff, std::move(e)}}; }

Terms operator+(Terms a, const Terms& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Terms scaled(const Rational& c, Terms ts) {
  for (auto& t : ts) t.coeff *= c;
  return ts;
}

Terms apply_left(const std::string& slot, const Expr& a, const Terms& ts) {
  Terms out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(Term{t.coeff, P(slot, a, t.expr)});
  return out;
}

Terms apply_right(const std::string& slot, const Terms& ts, const Expr& b) {
  Terms out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(Term{t.coeff, P(slot, t.expr, b)});
  return out;
}

namespace {

const Rational kOne = 1;
const Rational kMinusOne = -1;

Identity symmetry_identity(const std::string& slot, Symmetry s) {
  Identity id;
  id.name = (s == Symmetry::symmetric ? "commutativity(" : "skew-symmetry(") + slot + ")";
  id.arity = 2;
  id.lhs = term(kOne, P(slot, V(0), V(1)));
  id.rhs = term(s == Symmetry::symmetric ? kOne : kMinusOne, P(slot, V(1), V(0)));
  return id;
}

Identity associativity(const std::string& slot) {
  Identity id;
  id.name = "associativity(" + slot + ")";
  id.lhs = term(kOne, P(slot, P(slot, V(0), V(1)), V(2)));
  id.rhs = term(kOne, P(slot, V(0), P(slot, V(1), V(2))));
  return id;
}

Identity jacobi(const std::string& slot) {
  Identity id;
  id.name = "jacobi(" + slot + ")";
  const Expr x = V(0), y = V(1), z = V(2);
  id.lhs = term(kOne, P(slot, P(slot, x, y), z)) +
           term(kOne, P(slot, P(slot, y, z), x)) +
           term(kOne, P(slot, P(slot, z, x), y));
  return id;  // rhs = 0
}

Identity zinbiel_identity() {
  Identity id;
  id.name = "zinbiel(star)";
  const Expr x = V(0), y = V(1), z = V(2);
  id.lhs = term(kOne, P("star", x, P("star", y, z)));
  id.rhs = term(kOne, P("star", P("star", x, y), z)) +
           term(kOne, P("star", P("star", y, x), z));
  return id;
}

Identity pre_lie_identity() {
  Identity id;
  id.name = "pre-lie(diamond)";
  const Expr x = V(0), y = V(1), z = V(2);
  id.lhs = term(kOne, P("diamond", x, P("diamond", y, z))) +
           term(kMinusOne, P("diamond", P("diamond", x, y), z));
  id.rhs = term(kOne, P("diamond", y, P("diamond", x, z))) +
           term(kMinusOne, P("diamond", P("diamond", y, x), z));
  return id;
}

Identity leibniz_identity() {
  Identity id;
  id.name = "leibniz";
  const Expr x = V(0), y = V(1), z = V(2);
  id.lhs = term(kOne, P("bracket", x, P("dot", y, z)));
  id.rhs = term(kOne, P("dot", P("bracket", x, y), z)) +
           term(kOne, P("dot", y, P("bracket", x, z)));
  return id;
}

// P_a(b,c) = {a, b.c} - {a,b}.c - b.{a,c}
Terms hm_defect(const Expr& a, const Expr& b, const Expr& c) {
  return term(kOne, P("bracket", a, P("dot", b, c))) +
         term(kMinusOne, P("dot", P("bracket", a, b), c)) +
         term(kMinusOne, P("dot", b, P("bracket", a, c)));
}

Identity hertling_manin_identity() {
  Identity id;
  id.name = "hertling-manin";
  id.arity = 4;
  const Expr x = V(0), y = V(1), z = V(2), w = V(3);
  id.lhs = hm_defect(P("dot", x, y), z, w);
  id.rhs = apply_left("dot", x, hm_defect(y, z, w)) +
           apply_left("dot", y, hm_defect(x, z, w));
  return id;
}

std::vector<Identity> ns_associative_identities() {
  const Expr x = V(0), y = V(1), z = V(2);
  Identity a1{"ns-assoc-1", 3,
              term(kOne, P("prec", P("prec", x, y), z)),
              term(kOne, P("prec", x, P("odot", y, z)))};
  Identity a2{"ns-assoc-2", 3,
              term(kOne, P("prec", P("succ", x, y), z)),
              term(kOne, P("succ", x, P("prec", y, z)))};
  Identity a3{"ns-assoc-3", 3,
              term(kOne, P("succ", P("odot", x, y), z)),
              term(kOne, P("succ", x, P("succ", y, z)))};
  Identity a4{"ns-assoc-4", 3,
              term(kOne, P("prec", P("vee", x, y), z)) +
                  term(kOne, P("vee", P("odot", x, y), z)),
              term(kOne, P("succ", x, P("vee", y, z))) +
                  term(kOne, P("vee", x, P("odot", y, z)))};
  return {a1, a2, a3, a4};
}

std::vector<Identity> ns_commutative_identities() {
  const Expr x = V(0), y = V(1), z = V(2);
  Identity c1{"ns-comm-1", 3,
              term(kOne, P("star", x, P("star", y, z))),
              term(kOne, P("star", P("odot", x, y), z))};
  Identity c2{"ns-comm-2", 3,
              term(kOne, P("star", x, P("vee", y, z))) +
                  term(kOne, P("vee", x, P("odot", y, z))),
              term(kOne, P("star", y, P("vee", x, z))) +
                  term(kOne, P("vee", y, P("odot", x, z)))};
  return {symmetry_identity("vee", Symmetry::symmetric), c1, c2};
}

std::vector<Identity> ns_lie_identities() {
  const Expr x = V(0), y = V(1), z = V(2);
  Identity l1{"ns-lie-1", 3,
              term(kOne, P("diamond", x, P("diamond", y, z))) +
                  term(kMinusOne, P("diamond", P("diamond", x, y), z)) +
                  term(kMinusOne, P("diamond", y, P("diamond", x, z))) +
                  term(kOne, P("diamond", P("diamond", y, x), z)),
              term(kOne, P("diamond", P("blackdiamond", x, y), z))};
  Identity l2{"ns-lie-2", 3,
              term(kOne, P("blackdiamond", x, P("dcb", y, z))) +
                  term(kOne, P("blackdiamond", y, P("dcb", z, x))) +
                  term(kOne, P("blackdiamond", z, P("dcb", x, y))) +
                  term(kOne, P("diamond", x, P("blackdiamond", y, z))) +
                  term(kOne, P("diamond", y, P("blackdiamond", z, x))) +
                  term(kOne, P("diamond", z, P("blackdiamond", x, y))),
              {}};
  return {symmetry_identity("blackdiamond", Symmetry::skew), l1, l2};
}

std::vector<Identity> ns_poisson_compat_identities() {
  const Expr x = V(0), y = V(1), z = V(2);
  Identity p1{"ns-poisson-1", 3,
              term(kOne, P("star", P("dcb", x, y), z)),
              term(kOne, P("diamond", x, P("star", y, z))) +
                  term(kMinusOne, P("star", y, P("diamond", x, z)))};
  Identity p2{"ns-poisson-2", 3,
              term(kOne, P("diamond", P("odot", x, y), z)),
              term(kOne, P("star", x, P("diamond", y, z))) +
                  term(kOne, P("star", y, P("diamond", x, z)))};
  Identity p3{"ns-poisson-3", 3,
              term(kOne, P("blackdiamond", x, P("odot", y, z))) +
                  term(kOne, P("diamond", x, P("vee", y, z))),
              term(kOne, P("vee", P("dcb", x, y), z)) +
                  term(kOne, P("star", z, P("blackdiamond", x, y))) +
                  term(kOne, P("vee", y, P("dcb", x, z))) +
                  term(kOne, P("star", y, P("blackdiamond", x, z)))};
  return {p1, p2, p3};
}

std::vector<Identity> ns_pre_lie_identities(bool with_circ) {
  const Expr x = V(0), y = V(1), z = V(2);
  Identity n1{"ns-pre-lie-1", 3,
              term(kOne, P("rtri", P("odot", x, y), z)) +
                  term(kMinusOne, P("rtri", x, P("rtri", y, z))),
              term(kOne, P("rtri", P("odot", y, x), z)) +
                  term(kMinusOne, P("rtri", y, P("rtri", x, z)))};
  Identity n2{"ns-pre-lie-2", 3,
              term(kOne, P("rtri", x, P("ltri", y, z))) +
                  term(kMinusOne, P("ltri", P("rtri", x, y), z)),
              term(kOne, P("ltri", y, P("odot", x, z))) +
                  term(kMinusOne, P("ltri", P("ltri", y, x), z))};
  if (!with_circ) return {n1, n2};
  Identity n3{"ns-pre-lie-3", 3,
              term(kOne, P("circ", P("odot", x, y), z)) +
                  term(kMinusOne, P("circ", x, P("odot", y, z))) +
                  term(kOne, P("ltri", P("circ", x, y), z)) +
                  term(kMinusOne, P("rtri", x, P("circ", y, z))),
              term(kOne, P("circ", P("odot", y, x), z)) +
                  term(kMinusOne, P("circ", y, P("odot", x, z))) +
                  term(kOne, P("ltri", P("circ", y, x), z)) +
                  term(kMinusOne, P("rtri", y, P("circ", x, z)))};
  return {n1, n2, n3};
}

// F_1(a,b,c) = a<>(b*c) - b*(a<>c) - [[a,b]]*c
Terms f1_defect(const Expr& a, const Expr& b, const Expr& c) {
  return term(kOne, P("diamond", a, P("star", b, c))) +
         term(kMinusOne, P("star", b, P("diamond", a, c))) +
         term(kMinusOne, P("star", P("dcb", a, b), c));
}

// F_2(a,b,c) = a*(b<>c) + b*(a<>c) - (a.b)<>c
Terms f2_defect(const Expr& a, const Expr& b, const Expr& c) {
  return term(kOne, P("star", a, P("diamond", b, c))) +
         term(kOne, P("star", b, P("diamond", a, c))) +
         term(kMinusOne, P("diamond", P("odot", a, b), c));
}

// F_3(a,b,c) = a#(b.c) + a<>(b v c) - c*(a#b) - b*(a#c) - b v [[a,c]] - [[a,b]] v c
Terms f3_defect(const Expr& a, const Expr& b, const Expr& c) {
  return term(kOne, P("blackdiamond", a, P("odot", b, c))) +
         term(kOne, P("diamond", a, P("vee", b, c))) +
         term(kMinusOne, P("star", c, P("blackdiamond", a, b))) +
         term(kMinusOne, P("star", b, P("blackdiamond", a, c))) +
         term(kMinusOne, P("vee", b, P("dcb", a, c))) +
         term(kMinusOne, P("vee", P("dcb", a, b), c));
}

std::vector<Identity> ns_f_manifold_compat_identities() {
  const Expr x = V(0), y = V(1), z = V(2), w = V(3);
  Identity f1{"ns-fman-1", 4,
              f1_defect(P("odot", x, y), z, w),
              apply_left("star", x, f1_defect(y, z, w)) +
                  apply_left("star", y, f1_defect(x, z, w))};
  Identity f2{"ns-fman-2", 4,
              apply_right("star",
                          f1_defect(x, y, z) + f1_defect(x, z, y) +
                              f2_defect(y, z, x) + f3_defect(x, y, z),
                          w),
              f2_defect(y, z, P("star", x, w)) +
                  scaled(kMinusOne, apply_left("star", x, f2_defect(y, z, w)))};
  Identity f3{"ns-fman-3", 4,
              f3_defect(P("odot", x, y), z, w) + f2_defect(z, w, P("vee", y, x)),
              apply_left("star", x, f3_defect(y, z, w)) +
                  apply_left("star", y, f3_defect(x, z, w)) +
                  apply_left("vee", x,
                             f1_defect(y, z, w) + f1_defect(y, w, z) +
                                 f2_defect(z, w, y) + f3_defect(y, z, w)) +
                  apply_left("vee", y,
                             f1_defect(x, z, w) + f1_defect(x, w, z) +
                                 f2_defect(z, w, x) + f3_defect(x, z, w))};
  return {f1, f2, f3};
}

DerivedSlotDef odot_commutative() {
  // x.y = x*y + y*x + x v y
  return {"odot", {{1, "star", false}, {1, "star", true}, {1, "vee", false}}};
}

DerivedSlotDef dcb_def() {
  // [[x,y]] = x<>y - y<>x + x#y
  return {"dcb", {{1, "diamond", false}, {-1, "diamond", true}, {1, "blackdiamond", false}}};
}

std::vector<Identity> cat(std::vector<Identity> a, const std::vector<Identity>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::map<AlgebraKind, KindCatalog> build_catalogs() {
  std::map<AlgebraKind, KindCatalog> cats;

  cats[AlgebraKind::commutative_associative] = {
      {}, {symmetry_identity("dot", Symmetry::symmetric), associativity("dot")}};
  cats[AlgebraKind::associative] = {{}, {associativity("dot")}};
  cats[AlgebraKind::lie] = {{}, {symmetry_identity("bracket", Symmetry::skew),
                                 jacobi("bracket")}};
  cats[AlgebraKind::poisson] = {
      {},
      {symmetry_identity("dot", Symmetry::symmetric), associativity("dot"),
       symmetry_identity("bracket", Symmetry::skew), jacobi("bracket"),
       leibniz_identity()}};
  cats[AlgebraKind::zinbiel] = {{}, {zinbiel_identity()}};
  cats[AlgebraKind::pre_lie] = {{}, {pre_lie_identity()}};

  {
    const Expr x = V(0), y = V(1), z = V(2);
    Identity pp1{"pre-poisson-1", 3,
                 term(kOne, P("star", P("diamond", x, y), z)) +
                     term(kMinusOne, P("star", P("diamond", y, x), z)),
                 term(kOne, P("diamond", x, P("star", y, z))) +
                     term(kMinusOne, P("star", y, P("diamond", x, z)))};
    Identity pp2{"pre-poisson-2", 3,
                 term(kOne, P("diamond", P("star", x, y), z)) +
                     term(kOne, P("diamond", P("star", y, x), z)),
                 term(kOne, P("star", x, P("diamond", y, z))) +
                     term(kOne, P("star", y, P("diamond", x, z)))};
    cats[AlgebraKind::pre_poisson] = {
        {}, {zinbiel_identity(), pre_lie_identity(), pp1, pp2}};
  }

  cats[AlgebraKind::ns_associative] = {
      {{"odot", {{1, "prec", false}, {1, "succ", false}, {1, "vee", false}}}},
      ns_associative_identities()};
  cats[AlgebraKind::ns_commutative] = {{odot_commutative()},
                                       ns_commutative_identities()};
  cats[AlgebraKind::ns_lie] = {{dcb_def()}, ns_lie_identities()};
  cats[AlgebraKind::ns_poisson] = {
      {odot_commutative(), dcb_def()},
      cat(cat(ns_commutative_identities(), ns_lie_identities()),
          ns_poisson_compat_identities())};
  cats[AlgebraKind::l_dendriform] = {
      {{"odot", {{1, "rtri", false}, {1, "ltri", false}}}},
      ns_pre_lie_identities(false)};
  cats[AlgebraKind::ns_pre_lie] = {
      {{"odot", {{1, "rtri", false}, {1, "ltri", false}, {1, "circ", false}}}},
      ns_pre_lie_identities(true)};
  cats[AlgebraKind::f_manifold] = {
      {},
      {symmetry_identity("dot", Symmetry::symmetric), associativity("dot"),
       symmetry_identity("bracket", Symmetry::skew), jacobi("bracket"),
       hertling_manin_identity()}};
  cats[AlgebraKind::ns_f_manifold] = {
      {odot_commutative(), dcb_def()},
      cat(cat(ns_commutative_identities(), ns_lie_identities()),
          ns_f_manifold_compat_identities())};
  return cats;
}

}  // namespace

const KindCatalog& kind_catalog(AlgebraKind kind) {
  static const std::map<AlgebraKind, KindCatalog> catalogs = build_catalogs();
  return catalogs.at(kind);
}

BilinearProduct materialize_derived(const SlotTable& base, const DerivedSlotDef& def) {
  std::vector<std::pair<Rational, BilinearProduct>> terms;
  for (const auto& part : def.parts) {
    const auto it = base.find(part.base);
    if (it == base.end())
      throw structural_error("derived slot '" + def.name + "' references missing slot '" +
                             part.base + "'");
    terms.emplace_back(part.coeff, part.flipped ? flip(it->second) : it->second);
  }
  return combine(terms);
}

SlotTable build_slot_table(const AlgebraPresentation& p) {
  SlotTable table(p.products.begin(), p.products.end());
  for (const auto& def : kind_catalog(p.kind).derived)
    table.emplace(def.name, materialize_derived(table, def));
  return table;
}

Vector eval_expr(const SlotTable& slots, const Expr& e,
                 const std::vector<std::size_t>& tuple, std::size_t dim) {
  if (e.var >= 0) return basis_vector(dim, tuple.at(static_cast<std::size_t>(e.var)));
  const auto it = slots.find(e.slot);
  if (it == slots.end()) throw structural_error("unknown slot '" + e.slot + "' in identity");
  const auto& p = it->second;
  const Expr& a = e.args[0];
  const Expr& b = e.args[1];
  if (a.var >= 0 && b.var >= 0)
    return eval_basis(p, tuple.at(static_cast<std::size_t>(a.var)),
                      tuple.at(static_cast<std::size_t>(b.var)));
  return eval_product(p, eval_expr(slots, a, tuple, dim), eval_expr(slots, b, tuple, dim));
}

Vector eval_terms(const SlotTable& slots, const Terms& terms,
                  const std::vector<std::size_t>& tuple, std::size_t dim) {
  Vector acc = zero_vector(dim);
  for (const auto& t : terms) {
    Vector v = eval_expr(slots, t.expr, tuple, dim);
    if (t.coeff != 1) v *= t.coeff;
    acc += v;
  }
  return acc;
}

}  // namespace algkit
