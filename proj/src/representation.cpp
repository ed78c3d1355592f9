#include "algkit/representation.hpp"

#include "algkit/constructions.hpp"
#include "algkit/parallel.hpp"

namespace algkit {

RepresentationPresentation make_representation(SpaceDescriptor algebra_space,
                                               SpaceDescriptor module_space,
                                               BilinearProduct mu, BilinearProduct rho) {
  for (const BilinearProduct* p : {&mu, &rho}) {
    if (p->left != algebra_space || p->right != module_space || p->out != module_space)
      throw structural_error("action constants must have shape A x V -> V");
  }
  return RepresentationPresentation{std::move(algebra_space), std::move(module_space),
                                    std::move(mu), std::move(rho)};
}

namespace {

// Scans (x, y, v) in A x A x V.
template <class LhsFn, class RhsFn>
IdentityResult scan_aav(const std::string& name, const SpaceDescriptor& aspace,
                        const SpaceDescriptor& vspace, LhsFn&& lhs_fn, RhsFn&& rhs_fn) {
  const std::size_t na = aspace.dimension(), nv = vspace.dimension();
  auto check = [&](std::size_t index) -> std::optional<Counterexample> {
    const std::size_t v = index % nv;
    const std::size_t y = (index / nv) % na;
    const std::size_t x = index / (nv * na);
    Vector lhs = lhs_fn(x, y, v);
    Vector rhs = rhs_fn(x, y, v);
    if (lhs == rhs) return std::nullopt;
    return Counterexample{{aspace.basis[x], aspace.basis[y], vspace.basis[v]},
                          std::move(lhs), std::move(rhs), vspace.basis, std::nullopt};
  };
  IdentityResult result{name, true, std::nullopt};
  if (auto cex = scan_first(na * na * nv, check)) {
    result.holds = false;
    result.counterexample = std::move(cex);
  }
  return result;
}

// Scans (x, y, z, v) in A^3 x V.
template <class LhsFn, class RhsFn>
IdentityResult scan_aaav(const std::string& name, const SpaceDescriptor& aspace,
                         const SpaceDescriptor& vspace, LhsFn&& lhs_fn, RhsFn&& rhs_fn) {
  const std::size_t na = aspace.dimension(), nv = vspace.dimension();
  auto check = [&](std::size_t index) -> std::optional<Counterexample> {
    const std::size_t v = index % nv;
    const std::size_t z = (index / nv) % na;
    const std::size_t y = (index / (nv * na)) % na;
    const std::size_t x = index / (nv * na * na);
    Vector lhs = lhs_fn(x, y, z, v);
    Vector rhs = rhs_fn(x, y, z, v);
    if (lhs == rhs) return std::nullopt;
    return Counterexample{
        {aspace.basis[x], aspace.basis[y], aspace.basis[z], vspace.basis[v]},
        std::move(lhs), std::move(rhs), vspace.basis, std::nullopt};
  };
  IdentityResult result{name, true, std::nullopt};
  if (auto cex = scan_first(na * na * na * nv, check)) {
    result.holds = false;
    result.counterexample = std::move(cex);
  }
  return result;
}

}  // namespace

VerificationReport verify_representation(const AlgebraPresentation& a,
                                         const RepresentationPresentation& rep) {
  validate_presentation(a);
  if (a.kind != AlgebraKind::poisson && a.kind != AlgebraKind::f_manifold)
    throw structural_error("verify_representation expects a poisson or f-manifold algebra");
  if (a.space != rep.algebra_space)
    throw structural_error("representation is over a different algebra space");
  const auto& dot = a.slot("dot");
  const auto& br = a.slot("bracket");
  const auto& mu = rep.mu;
  const auto& rho = rep.rho;
  const std::size_t nv = rep.module_space.dimension();

  const auto basisV = [&](std::size_t v) { return basis_vector(nv, v); };
  // mu_w for a general algebra element w, applied to a module vector.
  const auto act = [&](const BilinearProduct& action, const Vector& w, const Vector& vec) {
    return eval_product(action, w, vec);
  };

  VerificationReport report;
  report.identities.push_back(scan_aav(
      "module(mu)", a.space, rep.module_space,
      [&](std::size_t x, std::size_t y, std::size_t v) {
        return act(mu, eval_basis(dot, x, y), basisV(v));
      },
      [&](std::size_t x, std::size_t y, std::size_t v) {
        return act(mu, basis_vector(a.space.dimension(), x), eval_basis(mu, y, v));
      }));
  report.identities.push_back(scan_aav(
      "module-commute(mu)", a.space, rep.module_space,
      [&](std::size_t x, std::size_t y, std::size_t v) {
        return act(mu, basis_vector(a.space.dimension(), x), eval_basis(mu, y, v));
      },
      [&](std::size_t x, std::size_t y, std::size_t v) {
        return act(mu, basis_vector(a.space.dimension(), y), eval_basis(mu, x, v));
      }));
  report.identities.push_back(scan_aav(
      "lie-module(rho)", a.space, rep.module_space,
      [&](std::size_t x, std::size_t y, std::size_t v) {
        return act(rho, eval_basis(br, x, y), basisV(v));
      },
      [&](std::size_t x, std::size_t y, std::size_t v) {
        return act(rho, basis_vector(a.space.dimension(), x), eval_basis(rho, y, v)) -
               act(rho, basis_vector(a.space.dimension(), y), eval_basis(rho, x, v));
      }));

  if (a.kind == AlgebraKind::poisson) {
    report.identities.push_back(scan_aav(
        "poisson-rep-1", a.space, rep.module_space,
        [&](std::size_t x, std::size_t y, std::size_t v) {
          return act(rho, basis_vector(a.space.dimension(), x), eval_basis(mu, y, v)) -
                 act(mu, basis_vector(a.space.dimension(), y), eval_basis(rho, x, v)) -
                 act(mu, eval_basis(br, x, y), basisV(v));
        },
        [&](std::size_t, std::size_t, std::size_t) { return zero_vector(nv); }));
    report.identities.push_back(scan_aav(
        "poisson-rep-2", a.space, rep.module_space,
        [&](std::size_t x, std::size_t y, std::size_t v) {
          return act(mu, basis_vector(a.space.dimension(), x), eval_basis(rho, y, v)) +
                 act(mu, basis_vector(a.space.dimension(), y), eval_basis(rho, x, v)) -
                 act(rho, eval_basis(dot, x, y), basisV(v));
        },
        [&](std::size_t, std::size_t, std::size_t) { return zero_vector(nv); }));
    return report;
  }

  // F-manifold case. R(x,y) = rho_x mu_y - mu_y rho_x - mu_{x,y} and
  // S(x,y) = mu_x rho_y + mu_y rho_x - rho_{x.y}, as operators on V.
  const std::size_t na = a.space.dimension();
  const auto basisA = [&](std::size_t x) { return basis_vector(na, x); };
  const auto R_op = [&](const Vector& x, const Vector& y, const Vector& vec) {
    return act(rho, x, act(mu, y, vec)) - act(mu, y, act(rho, x, vec)) -
           act(mu, eval_product(br, x, y), vec);
  };
  const auto S_op = [&](const Vector& x, const Vector& y, const Vector& vec) {
    return act(mu, x, act(rho, y, vec)) + act(mu, y, act(rho, x, vec)) -
           act(rho, eval_product(dot, x, y), vec);
  };
  report.identities.push_back(scan_aaav(
      "fman-rep-R", a.space, rep.module_space,
      [&](std::size_t x, std::size_t y, std::size_t z, std::size_t v) {
        return R_op(eval_basis(dot, x, y), basisA(z), basisV(v));
      },
      [&](std::size_t x, std::size_t y, std::size_t z, std::size_t v) {
        return act(mu, basisA(x), R_op(basisA(y), basisA(z), basisV(v))) +
               act(mu, basisA(y), R_op(basisA(x), basisA(z), basisV(v)));
      }));
  report.identities.push_back(scan_aaav(
      "fman-rep-S", a.space, rep.module_space,
      [&](std::size_t x, std::size_t y, std::size_t z, std::size_t v) {
        return act(mu, hertling_manin_P(a, basisA(x), basisA(y), basisA(z)), basisV(v));
      },
      [&](std::size_t x, std::size_t y, std::size_t z, std::size_t v) {
        return S_op(basisA(y), basisA(z), act(mu, basisA(x), basisV(v))) -
               act(mu, basisA(x), S_op(basisA(y), basisA(z), basisV(v)));
      }));
  return report;
}

RepresentationPresentation adjoint_representation(const AlgebraPresentation& a) {
  validate_presentation(a);
  if (a.kind != AlgebraKind::poisson && a.kind != AlgebraKind::f_manifold)
    throw structural_error("adjoint representation needs a poisson or f-manifold algebra");
  BilinearProduct mu = a.slot("dot");
  BilinearProduct rho = a.slot("bracket");
  return RepresentationPresentation{a.space, a.space, std::move(mu), std::move(rho)};
}

std::pair<AlgebraPresentation, RepresentationPresentation> induced_representation(
    const AlgebraPresentation& a) {
  validate_presentation(a);
  if (a.kind != AlgebraKind::ns_poisson && a.kind != AlgebraKind::ns_f_manifold)
    throw structural_error(
        "induced_representation expects an ns-poisson or ns-f-manifold presentation");
  AlgebraPresentation sub = subadjacent(a);
  RepresentationPresentation rep{a.space, a.space, a.slot("star"), a.slot("diamond")};
  return {std::move(sub), std::move(rep)};
}

}  // namespace algkit
