#include "algkit/operators.hpp"

#include <algorithm>

#include "algkit/parallel.hpp"

namespace algkit {

namespace {

bool operator_kind(AlgebraKind k) {
  return k == AlgebraKind::commutative_associative || k == AlgebraKind::lie ||
         k == AlgebraKind::poisson || k == AlgebraKind::f_manifold;
}

void require_operator_kind(const AlgebraPresentation& a, const char* what) {
  if (!operator_kind(a.kind))
    throw structural_error(std::string(what) + " is not defined for kind '" +
                           kind_name(a.kind) + "'");
}

void require_same_space(const AlgebraPresentation& a, const OperatorMatrix& m) {
  if (a.space != m.space)
    throw structural_error("operator space does not match the presentation space");
}

// Scans basis pairs of one product slot for a failed operator identity.
template <class LhsFn, class RhsFn>
IdentityResult scan_pairs(const std::string& name, const SpaceDescriptor& space,
                          LhsFn&& lhs_fn, RhsFn&& rhs_fn) {
  const std::size_t n = space.dimension();
  auto check = [&](std::size_t index) -> std::optional<Counterexample> {
    const std::size_t i = index / n, j = index % n;
    Vector lhs = lhs_fn(i, j);
    Vector rhs = rhs_fn(i, j);
    if (lhs == rhs) return std::nullopt;
    return Counterexample{{space.basis[i], space.basis[j]}, std::move(lhs), std::move(rhs),
                          space.basis, std::nullopt};
  };
  IdentityResult result{name, true, std::nullopt};
  if (auto cex = scan_first(n * n, check)) {
    result.holds = false;
    result.counterexample = std::move(cex);
  }
  return result;
}

}  // namespace

VerificationReport verify_nijenhuis(const AlgebraPresentation& a, const OperatorMatrix& n) {
  validate_presentation(a);
  require_operator_kind(a, "verify_nijenhuis");
  require_same_space(a, n);
  VerificationReport report;
  for (const auto& slot : kind_slots(a.kind)) {
    const auto& p = a.slot(slot);
    report.identities.push_back(scan_pairs(
        "nijenhuis(" + slot + ")", a.space,
        [&](std::size_t i, std::size_t j) {
          return eval_product(p, n.column(i), n.column(j));
        },
        [&](std::size_t i, std::size_t j) {
          Vector inner = eval_product(p, n.column(i), basis_vector(n.dim(), j)) +
                         eval_product(p, basis_vector(n.dim(), i), n.column(j)) -
                         n.apply(eval_basis(p, i, j));
          return n.apply(inner);
        }));
  }
  return report;
}

VerificationReport verify_reynolds(const AlgebraPresentation& a, const OperatorMatrix& r) {
  validate_presentation(a);
  require_operator_kind(a, "verify_reynolds");
  require_same_space(a, r);
  VerificationReport report;
  for (const auto& slot : kind_slots(a.kind)) {
    const auto& p = a.slot(slot);
    report.identities.push_back(scan_pairs(
        "reynolds(" + slot + ")", a.space,
        [&](std::size_t i, std::size_t j) {
          return eval_product(p, r.column(i), r.column(j));
        },
        [&](std::size_t i, std::size_t j) {
          Vector inner = eval_product(p, r.column(i), basis_vector(r.dim(), j)) +
                         eval_product(p, basis_vector(r.dim(), i), r.column(j)) -
                         eval_product(p, r.column(i), r.column(j));
          return r.apply(inner);
        }));
  }
  return report;
}

VerificationReport verify_derivation(const AlgebraPresentation& a, const OperatorMatrix& d) {
  validate_presentation(a);
  if (a.kind != AlgebraKind::commutative_associative)
    throw structural_error("verify_derivation expects a commutative-associative presentation");
  require_same_space(a, d);
  const auto& dot = a.slot("dot");
  VerificationReport report;
  report.identities.push_back(scan_pairs(
      "derivation(dot)", a.space,
      [&](std::size_t i, std::size_t j) { return d.apply(eval_basis(dot, i, j)); },
      [&](std::size_t i, std::size_t j) {
        return eval_product(dot, d.column(i), basis_vector(d.dim(), j)) +
               eval_product(dot, basis_vector(d.dim(), i), d.column(j));
      }));
  return report;
}

namespace {

// star[i][j] = N(e_i) o e_j ; vee[i][j] = -N(e_i o e_j)
std::pair<BilinearProduct, BilinearProduct> split_by_operator(const BilinearProduct& p,
                                                              const OperatorMatrix& n) {
  const std::size_t dim = p.left.dimension();
  BilinearProduct acted = zero_product(p.left, p.right, p.out);
  BilinearProduct wrapped = zero_product(p.left, p.right, p.out);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Vector lhs = eval_product(p, n.column(i), basis_vector(dim, j));
      const Vector neg = n.apply(eval_basis(p, i, j));
      for (std::size_t k = 0; k < dim; ++k) {
        acted.at(i, j, k) = lhs.coords[k];
        wrapped.at(i, j, k) = -neg.coords[k];
      }
    }
  acted.sym = symmetry_of(acted);
  wrapped.sym = symmetry_of(wrapped);
  return {std::move(acted), std::move(wrapped)};
}

AlgebraKind ns_counterpart(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::commutative_associative: return AlgebraKind::ns_commutative;
    case AlgebraKind::lie: return AlgebraKind::ns_lie;
    case AlgebraKind::poisson: return AlgebraKind::ns_poisson;
    case AlgebraKind::f_manifold: return AlgebraKind::ns_f_manifold;
    default: throw structural_error("kind has no NS counterpart");
  }
}

}  // namespace

AlgebraPresentation induce_from_nijenhuis(const AlgebraPresentation& a,
                                          const OperatorMatrix& n, Strictness strictness) {
  validate_presentation(a);
  require_operator_kind(a, "induce_from_nijenhuis");
  require_same_space(a, n);
  if (strictness == Strictness::strict) {
    VerificationReport rep = verify_nijenhuis(a, n);
    if (!rep.holds())
      throw precondition_error("operator is not Nijenhuis on the given structure",
                               std::move(rep));
  }
  std::map<std::string, BilinearProduct> prods;
  if (a.products.count("dot")) {
    auto [star, vee] = split_by_operator(a.slot("dot"), n);
    prods["star"] = std::move(star);
    prods["vee"] = std::move(vee);
  }
  if (a.products.count("bracket")) {
    auto [dia, bdia] = split_by_operator(a.slot("bracket"), n);
    prods["diamond"] = std::move(dia);
    prods["blackdiamond"] = std::move(bdia);
  }
  return make_presentation(ns_counterpart(a.kind), a.space, std::move(prods), a.metadata);
}

AlgebraPresentation deform_by_nijenhuis(const AlgebraPresentation& a,
                                        const OperatorMatrix& n) {
  validate_presentation(a);
  require_operator_kind(a, "deform_by_nijenhuis");
  require_same_space(a, n);
  const std::size_t dim = a.space.dimension();
  std::map<std::string, BilinearProduct> prods;
  VerificationReport intertwine;
  for (const auto& slot : kind_slots(a.kind)) {
    const auto& p = a.slot(slot);
    BilinearProduct deformed = zero_product(a.space);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        const Vector v = eval_product(p, n.column(i), basis_vector(dim, j)) +
                         eval_product(p, basis_vector(dim, i), n.column(j)) -
                         n.apply(eval_basis(p, i, j));
        for (std::size_t k = 0; k < dim; ++k) deformed.at(i, j, k) = v.coords[k];
      }
    deformed.sym = symmetry_of(deformed);
    // N(x o_N y) = N(x) o N(y); this is the Nijenhuis condition itself.
    intertwine.identities.push_back(scan_pairs(
        "intertwining(" + slot + ")", a.space,
        [&](std::size_t i, std::size_t j) { return n.apply(eval_basis(deformed, i, j)); },
        [&](std::size_t i, std::size_t j) {
          return eval_product(p, n.column(i), n.column(j));
        }));
    prods[slot] = std::move(deformed);
  }
  if (!intertwine.holds())
    throw precondition_error(
        "operator does not intertwine its deformation (not a Nijenhuis operator)",
        std::move(intertwine));
  return make_presentation(a.kind, a.space, std::move(prods), a.metadata);
}

AlgebraPresentation induce_from_reynolds(const AlgebraPresentation& a,
                                         const OperatorMatrix& r, Strictness strictness) {
  validate_presentation(a);
  if (a.kind != AlgebraKind::poisson && a.kind != AlgebraKind::f_manifold)
    throw structural_error("induce_from_reynolds expects a poisson or f-manifold presentation");
  require_same_space(a, r);
  if (strictness == Strictness::strict) {
    VerificationReport rep = verify_reynolds(a, r);
    if (!rep.holds())
      throw precondition_error("operator is not Reynolds on the given structure",
                               std::move(rep));
  }
  const std::size_t dim = a.space.dimension();
  const auto& dot = a.slot("dot");
  const auto& br = a.slot("bracket");
  BilinearProduct star = zero_product(a.space), vee = zero_product(a.space);
  BilinearProduct dia = zero_product(a.space), bdia = zero_product(a.space);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Vector s = eval_product(dot, r.column(i), basis_vector(dim, j));
      const Vector v = eval_product(dot, r.column(i), r.column(j));
      const Vector d = eval_product(br, r.column(i), basis_vector(dim, j));
      const Vector b = eval_product(br, r.column(i), r.column(j));
      for (std::size_t k = 0; k < dim; ++k) {
        star.at(i, j, k) = s.coords[k];
        vee.at(i, j, k) = -v.coords[k];
        dia.at(i, j, k) = d.coords[k];
        bdia.at(i, j, k) = -b.coords[k];
      }
    }
  for (BilinearProduct* p : {&star, &vee, &dia, &bdia}) p->sym = symmetry_of(*p);
  std::map<std::string, BilinearProduct> prods{{"star", std::move(star)},
                                               {"vee", std::move(vee)},
                                               {"diamond", std::move(dia)},
                                               {"blackdiamond", std::move(bdia)}};
  const AlgebraKind target = a.kind == AlgebraKind::poisson ? AlgebraKind::ns_poisson
                                                            : AlgebraKind::ns_f_manifold;
  return make_presentation(target, a.space, std::move(prods), a.metadata);
}

AlgebraPresentation derivation_bracket(const AlgebraPresentation& a,
                                       const OperatorMatrix& d) {
  VerificationReport rep = verify_derivation(a, d);
  if (!rep.holds())
    throw precondition_error("operator is not a derivation", std::move(rep));
  const std::size_t dim = a.space.dimension();
  const auto& dot = a.slot("dot");
  BilinearProduct bracket = zero_product(a.space);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Vector v = eval_product(dot, basis_vector(dim, i), d.column(j)) -
                       eval_product(dot, basis_vector(dim, j), d.column(i));
      for (std::size_t k = 0; k < dim; ++k) bracket.at(i, j, k) = v.coords[k];
    }
  bracket.sym = symmetry_of(bracket);
  std::map<std::string, BilinearProduct> prods{{"dot", a.slot("dot")},
                                               {"bracket", std::move(bracket)}};
  return make_presentation(AlgebraKind::f_manifold, a.space, std::move(prods), a.metadata);
}

bool HierarchyReport::holds() const {
  const auto entry_ok = [](const PowerEntry& e) {
    return e.nijenhuis.holds() && e.structure.holds();
  };
  return std::all_of(powers.begin(), powers.end(), entry_ok) &&
         std::all_of(pairs.begin(), pairs.end(),
                     [](const PairEntry& p) { return p.sum.holds(); });
}

HierarchyReport nijenhuis_hierarchy(const AlgebraPresentation& a, const OperatorMatrix& n,
                                    const std::vector<unsigned>& powers) {
  VerificationReport base = verify_nijenhuis(a, n);
  if (!base.holds())
    throw precondition_error("operator is not Nijenhuis on the given structure",
                             std::move(base));
  HierarchyReport report;
  std::vector<AlgebraPresentation> induced;
  for (const unsigned k : powers) {
    const OperatorMatrix nk = operator_power(n, k);
    HierarchyReport::PowerEntry entry;
    entry.power = k;
    entry.nijenhuis = verify_nijenhuis(a, nk);
    AlgebraPresentation structure = induce_from_nijenhuis(a, nk, Strictness::permissive);
    entry.structure = verify_structure(structure);
    induced.push_back(std::move(structure));
    report.powers.push_back(std::move(entry));
  }
  for (std::size_t i = 0; i < powers.size(); ++i)
    for (std::size_t j = i + 1; j < powers.size(); ++j) {
      auto [sum, sum_report] = sum_and_check_compatible(induced[i], induced[j]);
      (void)sum;
      report.pairs.push_back({powers[i], powers[j], std::move(sum_report)});
    }
  return report;
}

}  // namespace algkit
