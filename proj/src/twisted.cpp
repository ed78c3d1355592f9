#include "algkit/twisted.hpp"

#include "algkit/constructions.hpp"
#include "algkit/parallel.hpp"

namespace algkit {

namespace {

const char* kLieCocycleNote =
    "lie-2co applied in the cyclic Chevalley-Eilenberg form; the printed term "
    "H(y,{z,z}) is read as H(y,{z,x})";
const char* kCompCocycleNote =
    "comp-2co right side grouped as h({x,y},z) + mu_z H(x,y) + h(y,{x,z}) + mu_y H(x,z)";

template <class LhsFn, class RhsFn>
IdentityResult scan_triples(const std::string& name, const SpaceDescriptor& space,
                            const SpaceDescriptor& out_space, LhsFn&& lhs_fn,
                            RhsFn&& rhs_fn) {
  const std::size_t n = space.dimension();
  auto check = [&](std::size_t index) -> std::optional<Counterexample> {
    const std::size_t z = index % n;
    const std::size_t y = (index / n) % n;
    const std::size_t x = index / (n * n);
    Vector lhs = lhs_fn(x, y, z);
    Vector rhs = rhs_fn(x, y, z);
    if (lhs == rhs) return std::nullopt;
    return Counterexample{{space.basis[x], space.basis[y], space.basis[z]}, std::move(lhs),
                          std::move(rhs), out_space.basis, std::nullopt};
  };
  IdentityResult result{name, true, std::nullopt};
  if (auto cex = scan_first(n * n * n, check)) {
    result.holds = false;
    result.counterexample = std::move(cex);
  }
  return result;
}

template <class LhsFn, class RhsFn>
IdentityResult scan_pairs(const std::string& name, const SpaceDescriptor& space,
                          const SpaceDescriptor& out_space, LhsFn&& lhs_fn, RhsFn&& rhs_fn) {
  const std::size_t n = space.dimension();
  auto check = [&](std::size_t index) -> std::optional<Counterexample> {
    const std::size_t j = index % n;
    const std::size_t i = index / n;
    Vector lhs = lhs_fn(i, j);
    Vector rhs = rhs_fn(i, j);
    if (lhs == rhs) return std::nullopt;
    return Counterexample{{space.basis[i], space.basis[j]}, std::move(lhs), std::move(rhs),
                          out_space.basis, std::nullopt};
  };
  IdentityResult result{name, true, std::nullopt};
  if (auto cex = scan_first(n * n, check)) {
    result.holds = false;
    result.counterexample = std::move(cex);
  }
  return result;
}

}  // namespace

CocyclePair make_cocycle_pair(SpaceDescriptor algebra_space, SpaceDescriptor module_space,
                              BilinearProduct h, BilinearProduct H) {
  for (const BilinearProduct* p : {&h, &H}) {
    if (p->left != algebra_space || p->right != algebra_space || p->out != module_space)
      throw structural_error("cocycle components must have shape A x A -> V");
    if (!flag_consistent(*p))
      throw structural_error("cocycle component declares a symmetry its entries violate");
  }
  return CocyclePair{std::move(algebra_space), std::move(module_space), std::move(h),
                     std::move(H)};
}

VerificationReport verify_poisson_2cocycle(const AlgebraPresentation& a,
                                           const RepresentationPresentation& rep,
                                           const CocyclePair& c) {
  if (a.kind != AlgebraKind::poisson)
    throw structural_error("verify_poisson_2cocycle expects a poisson presentation");
  if (c.algebra_space != a.space || c.module_space != rep.module_space)
    throw structural_error("cocycle spaces do not match the algebra/representation");
  {
    VerificationReport rep_report = verify_representation(a, rep);
    if (!rep_report.holds())
      throw precondition_error("representation check failed", std::move(rep_report));
  }
  const auto& dot = a.slot("dot");
  const auto& br = a.slot("bracket");
  const auto& mu = rep.mu;
  const auto& rho = rep.rho;
  const std::size_t na = a.space.dimension();
  const std::size_t nv = rep.module_space.dimension();
  const auto basisA = [&](std::size_t i) { return basis_vector(na, i); };

  VerificationReport report;
  report.conventions = {kLieCocycleNote, kCompCocycleNote};
  report.identities.push_back(scan_pairs(
      "cocycle-h-symmetric", a.space, rep.module_space,
      [&](std::size_t x, std::size_t y) { return eval_basis(c.h, x, y); },
      [&](std::size_t x, std::size_t y) { return eval_basis(c.h, y, x); }));
  report.identities.push_back(scan_triples(
      "cocycle-harrison", a.space, rep.module_space,
      [&](std::size_t x, std::size_t y, std::size_t z) {
        return eval_product(mu, basisA(x), eval_basis(c.h, y, z)) +
               eval_product(c.h, basisA(x), eval_basis(dot, y, z));
      },
      [&](std::size_t x, std::size_t y, std::size_t z) {
        return eval_product(mu, basisA(y), eval_basis(c.h, x, z)) +
               eval_product(c.h, basisA(y), eval_basis(dot, x, z));
      }));
  report.identities.push_back(scan_pairs(
      "cocycle-H-skew", a.space, rep.module_space,
      [&](std::size_t x, std::size_t y) { return eval_basis(c.H, x, y); },
      [&](std::size_t x, std::size_t y) {
        Vector v = eval_basis(c.H, y, x);
        v *= Rational(-1);
        return v;
      }));
  report.identities.push_back(scan_triples(
      "cocycle-chevalley-eilenberg", a.space, rep.module_space,
      [&](std::size_t x, std::size_t y, std::size_t z) {
        return eval_product(rho, basisA(x), eval_basis(c.H, y, z)) +
               eval_product(rho, basisA(y), eval_basis(c.H, z, x)) +
               eval_product(rho, basisA(z), eval_basis(c.H, x, y)) +
               eval_product(c.H, basisA(x), eval_basis(br, y, z)) +
               eval_product(c.H, basisA(y), eval_basis(br, z, x)) +
               eval_product(c.H, basisA(z), eval_basis(br, x, y));
      },
      [&](std::size_t, std::size_t, std::size_t) { return zero_vector(nv); }));
  report.identities.push_back(scan_triples(
      "cocycle-compatibility", a.space, rep.module_space,
      [&](std::size_t x, std::size_t y, std::size_t z) {
        return eval_product(c.H, basisA(x), eval_basis(dot, y, z)) +
               eval_product(rho, basisA(x), eval_basis(c.h, y, z));
      },
      [&](std::size_t x, std::size_t y, std::size_t z) {
        return eval_product(c.h, eval_basis(br, x, y), basisA(z)) +
               eval_product(mu, basisA(z), eval_basis(c.H, x, y)) +
               eval_product(c.h, basisA(y), eval_basis(br, x, z)) +
               eval_product(mu, basisA(y), eval_basis(c.H, x, z));
      }));
  return report;
}

VerificationReport verify_twisted_rb(const AlgebraPresentation& a,
                                     const RepresentationPresentation& rep,
                                     const CocyclePair& c, const ModuleMap& r) {
  if (r.source != rep.module_space || r.target != a.space)
    throw structural_error("module map must go from the module space to the algebra");
  {
    VerificationReport coc = verify_poisson_2cocycle(a, rep, c);
    if (!coc.holds())
      throw precondition_error("2-cocycle check failed", std::move(coc));
  }
  const auto& dot = a.slot("dot");
  const auto& br = a.slot("bracket");
  const std::size_t nv = rep.module_space.dimension();
  const auto Rcol = [&](std::size_t u) { return r.apply(basis_vector(nv, u)); };

  VerificationReport report;
  report.conventions = {kLieCocycleNote, kCompCocycleNote};
  report.identities.push_back(scan_pairs(
      "twisted-rb-1", rep.module_space, a.space,
      [&](std::size_t u, std::size_t v) { return eval_product(dot, Rcol(u), Rcol(v)); },
      [&](std::size_t u, std::size_t v) {
        Vector inner = eval_product(rep.mu, Rcol(u), basis_vector(nv, v)) +
                       eval_product(rep.mu, Rcol(v), basis_vector(nv, u)) +
                       eval_product(c.h, Rcol(u), Rcol(v));
        return r.apply(inner);
      }));
  report.identities.push_back(scan_pairs(
      "twisted-rb-2", rep.module_space, a.space,
      [&](std::size_t u, std::size_t v) { return eval_product(br, Rcol(u), Rcol(v)); },
      [&](std::size_t u, std::size_t v) {
        Vector inner = eval_product(rep.rho, Rcol(u), basis_vector(nv, v)) -
                       eval_product(rep.rho, Rcol(v), basis_vector(nv, u)) +
                       eval_product(c.H, Rcol(u), Rcol(v));
        return r.apply(inner);
      }));
  return report;
}

AlgebraPresentation induce_from_twisted_rb(const AlgebraPresentation& a,
                                           const RepresentationPresentation& rep,
                                           const CocyclePair& c, const ModuleMap& r) {
  {
    VerificationReport tw = verify_twisted_rb(a, rep, c, r);
    if (!tw.holds())
      throw precondition_error("twisted Rota-Baxter check failed", std::move(tw));
  }
  const std::size_t nv = rep.module_space.dimension();
  const auto Rcol = [&](std::size_t u) { return r.apply(basis_vector(nv, u)); };
  BilinearProduct star = zero_product(rep.module_space);
  BilinearProduct vee = zero_product(rep.module_space);
  BilinearProduct dia = zero_product(rep.module_space);
  BilinearProduct bdia = zero_product(rep.module_space);
  for (std::size_t u = 0; u < nv; ++u)
    for (std::size_t v = 0; v < nv; ++v) {
      const Vector s = eval_product(rep.mu, Rcol(u), basis_vector(nv, v));
      const Vector ve = eval_product(c.h, Rcol(u), Rcol(v));
      const Vector d = eval_product(rep.rho, Rcol(u), basis_vector(nv, v));
      const Vector b = eval_product(c.H, Rcol(u), Rcol(v));
      for (std::size_t k = 0; k < nv; ++k) {
        star.at(u, v, k) = s.coords[k];
        vee.at(u, v, k) = ve.coords[k];
        dia.at(u, v, k) = d.coords[k];
        bdia.at(u, v, k) = b.coords[k];
      }
    }
  for (BilinearProduct* p : {&star, &vee, &dia, &bdia}) p->sym = symmetry_of(*p);
  std::map<std::string, BilinearProduct> prods{{"star", std::move(star)},
                                               {"vee", std::move(vee)},
                                               {"diamond", std::move(dia)},
                                               {"blackdiamond", std::move(bdia)}};
  return make_presentation(AlgebraKind::ns_poisson, rep.module_space, std::move(prods),
                           a.metadata);
}

std::tuple<AlgebraPresentation, RepresentationPresentation, CocyclePair, ModuleMap>
canonical_twisted_factorization(const AlgebraPresentation& a) {
  if (a.kind != AlgebraKind::ns_poisson)
    throw structural_error("canonical factorization expects an ns-poisson presentation");
  {
    VerificationReport rep = verify_structure(a);
    if (!rep.holds())
      throw precondition_error("structure check failed", std::move(rep));
  }
  auto [sub, rep] = induced_representation(a);
  BilinearProduct h = a.slot("vee");
  BilinearProduct H = a.slot("blackdiamond");
  CocyclePair cocycle = make_cocycle_pair(a.space, a.space, std::move(h), std::move(H));
  ModuleMap id = identity_module_map(a.space);
  return {std::move(sub), std::move(rep), std::move(cocycle), std::move(id)};
}

}  // namespace algkit
