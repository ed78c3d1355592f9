#include "algkit/filtration.hpp"

#include <algorithm>

namespace algkit {

namespace {

std::string level_label(std::size_t level, std::size_t row) {
  return "A" + std::to_string(level) + "#" + std::to_string(row);
}

Vector to_vector(std::vector<Rational> coords) { return Vector{std::move(coords)}; }

// Solves sum_i c_i basis[i] = w for an independent basis list; throws if
// w is outside the span.
std::vector<Rational> solve_in_basis(const std::vector<std::vector<Rational>>& basis,
                                     const std::vector<Rational>& w) {
  const std::size_t ambient = w.size();
  const std::size_t cols = basis.size();
  // Augmented matrix [basis^T | w], eliminated by exact Gauss.
  std::vector<std::vector<Rational>> m(ambient, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < ambient; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = basis[c][r];
    m[r][cols] = w[r];
  }
  std::vector<std::ptrdiff_t> pivot_of_col(cols, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < ambient; ++col) {
    std::size_t pr = row;
    while (pr < ambient && m[pr][col] == 0) ++pr;
    if (pr == ambient) continue;
    std::swap(m[row], m[pr]);
    const Rational inv = m[row][col];
    for (auto& v : m[row]) v /= inv;
    for (std::size_t r = 0; r < ambient; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c <= cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_of_col[col] = static_cast<std::ptrdiff_t>(row);
    ++row;
  }
  for (std::size_t r = row; r < ambient; ++r)
    if (m[r][cols] != 0)
      throw structural_error("vector is outside the expected subspace");
  std::vector<Rational> coef(cols);
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_of_col[c] >= 0) coef[c] = m[static_cast<std::size_t>(pivot_of_col[c])][cols];
  return coef;
}

}  // namespace

std::vector<Echelon> echelonize_filtration(const Filtration& f) {
  const std::size_t dim = f.space.dimension();
  if (f.levels.empty()) throw structural_error("filtration needs at least one level");
  std::vector<Echelon> echelons;
  for (std::size_t lvl = 0; lvl < f.levels.size(); ++lvl) {
    Echelon e(dim);
    for (const auto& v : f.levels[lvl]) {
      if (v.dimension() != dim)
        throw structural_error("filtration level vector has the wrong dimension");
      e.insert(v.coords);
    }
    if (lvl > 0) {
      for (const auto& prev_row : echelons.back().rows())
        if (!e.contains(prev_row))
          throw structural_error("filtration levels are not increasing at level " +
                                 std::to_string(lvl));
    }
    echelons.push_back(std::move(e));
  }
  if (echelons.back().rank() != dim)
    throw structural_error("top filtration level must span the whole space");
  return echelons;
}

VerificationReport verify_ns_lie_filtration(const AlgebraPresentation& a,
                                            const Filtration& f) {
  validate_presentation(a);
  if (a.kind != AlgebraKind::ns_associative)
    throw structural_error("verify_ns_lie_filtration expects an ns-associative presentation");
  if (a.space != f.space)
    throw structural_error("filtration space does not match the presentation space");
  const std::vector<Echelon> lv = echelonize_filtration(f);
  const std::size_t top = lv.size() - 1;
  const auto level = [&](std::size_t i) -> const Echelon& {
    return lv[std::min(i, top)];
  };
  const auto& prec = a.slot("prec");
  const auto& succ = a.slot("succ");
  const auto& vee = a.slot("vee");

  VerificationReport report;
  const auto check_membership = [&](const std::string& name, const Vector& value,
                                    const Echelon& target, const std::string& xlabel,
                                    const std::string& ylabel) {
    for (auto& entry : report.identities)
      if (entry.name == name && !entry.holds) return;  // keep the first failure
    const auto residual = target.reduce(value.coords);
    const bool member = std::all_of(residual.begin(), residual.end(),
                                    [](const Rational& c) { return c == 0; });
    IdentityResult* slot = nullptr;
    for (auto& entry : report.identities)
      if (entry.name == name) slot = &entry;
    if (!slot) {
      report.identities.push_back(IdentityResult{name, true, std::nullopt});
      slot = &report.identities.back();
    }
    if (member || !slot->holds) return;
    Vector inside = value;
    for (std::size_t i = 0; i < inside.coords.size(); ++i)
      inside.coords[i] -= residual[i];
    slot->holds = false;
    slot->counterexample = Counterexample{{xlabel, ylabel}, value, std::move(inside),
                                          a.space.basis, std::nullopt};
  };

  // Closure: A_n op A_m inside A_{n+m}.
  for (std::size_t n = 0; n <= top; ++n)
    for (std::size_t m = 0; m <= top; ++m) {
      const Echelon& target = level(n + m);
      const auto tag = "[n=" + std::to_string(n) + ",m=" + std::to_string(m) + "]";
      for (std::size_t xi = 0; xi < lv[n].rows().size(); ++xi)
        for (std::size_t yi = 0; yi < lv[m].rows().size(); ++yi) {
          const Vector x = to_vector(lv[n].rows()[xi]);
          const Vector y = to_vector(lv[m].rows()[yi]);
          check_membership("filtration-closure(prec)" + tag, eval_product(prec, x, y),
                           target, level_label(n, xi), level_label(m, yi));
          check_membership("filtration-closure(succ)" + tag, eval_product(succ, x, y),
                           target, level_label(n, xi), level_label(m, yi));
          check_membership("filtration-closure(vee)" + tag, eval_product(vee, x, y),
                           target, level_label(n, xi), level_label(m, yi));
        }
    }

  // NS-Lie: for x in A_{n+1}, y in A_{m+1}, both the skew combination
  // x succ y - y prec x and x vee y must land in A_{n+m+1}.
  for (std::size_t n = 0; n < top; ++n)
    for (std::size_t m = 0; m < top; ++m) {
      const Echelon& target = level(n + m + 1);
      const auto tag = "[n=" + std::to_string(n) + ",m=" + std::to_string(m) + "]";
      for (std::size_t xi = 0; xi < lv[n + 1].rows().size(); ++xi)
        for (std::size_t yi = 0; yi < lv[m + 1].rows().size(); ++yi) {
          const Vector x = to_vector(lv[n + 1].rows()[xi]);
          const Vector y = to_vector(lv[m + 1].rows()[yi]);
          check_membership("ns-lie-filtration(skew)" + tag,
                           eval_product(succ, x, y) - eval_product(prec, y, x), target,
                           level_label(n + 1, xi), level_label(m + 1, yi));
          check_membership("ns-lie-filtration(vee)" + tag, eval_product(vee, x, y), target,
                           level_label(n + 1, xi), level_label(m + 1, yi));
        }
    }
  return report;
}

AlgebraPresentation graded_from_filtration(const AlgebraPresentation& a,
                                           const Filtration& f) {
  {
    VerificationReport rep = verify_ns_lie_filtration(a, f);
    if (!rep.holds())
      throw precondition_error("NS-Lie filtration check failed", std::move(rep));
  }
  const std::vector<Echelon> lv = echelonize_filtration(f);
  const std::size_t top = lv.size() - 1;
  const std::size_t dim = a.space.dimension();

  // Component k = A_{k+1}/A_k for k = 0..top-1, with representative
  // vectors taken from the pivot completion of level k inside level k+1.
  struct Component {
    std::vector<std::vector<Rational>> reps;
    std::size_t offset = 0;  // first coordinate in the graded space
  };
  std::vector<Component> comps(top);
  std::vector<std::string> graded_names;
  for (std::size_t k = 0; k < top; ++k) {
    comps[k].offset = graded_names.size();
    const auto& small = lv[k].pivots();
    for (std::size_t r = 0; r < lv[k + 1].rows().size(); ++r) {
      const std::size_t piv = lv[k + 1].pivots()[r];
      if (std::find(small.begin(), small.end(), piv) == small.end())
        comps[k].reps.push_back(lv[k + 1].rows()[r]);
    }
    for (std::size_t i = 0; i < comps[k].reps.size(); ++i)
      graded_names.push_back("g" + std::to_string(k) + "_" + std::to_string(i));
  }
  const SpaceDescriptor gr_space = make_space(graded_names);
  const std::size_t gdim = gr_space.dimension();

  // Class of w in component k: basis = [E_k rows | component reps].
  const auto class_coords = [&](const std::vector<Rational>& w, std::size_t k) {
    std::vector<Rational> zero(comps[k].reps.size());
    if (k >= top) {
      // Beyond the top component the quotient is trivial; membership in
      // A_top is already guaranteed by the filtration conditions.
      return zero;
    }
    std::vector<std::vector<Rational>> basis = lv[k].rows();
    for (const auto& rep : comps[k].reps) basis.push_back(rep);
    const auto coef = solve_in_basis(basis, w);
    std::vector<Rational> out(comps[k].reps.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coef[lv[k].rows().size() + i];
    return out;
  };

  const auto& prec = a.slot("prec");
  const auto& succ = a.slot("succ");
  const auto& vee = a.slot("vee");

  // Builds the four graded products from a representative choice.
  const auto build = [&](const std::vector<Component>& cs) {
    std::map<std::string, BilinearProduct> prods{
        {"star", zero_product(gr_space)},
        {"vee", zero_product(gr_space)},
        {"diamond", zero_product(gr_space)},
        {"blackdiamond", zero_product(gr_space)}};
    for (std::size_t k = 0; k < top; ++k)
      for (std::size_t l = 0; l < top; ++l)
        for (std::size_t i = 0; i < cs[k].reps.size(); ++i)
          for (std::size_t j = 0; j < cs[l].reps.size(); ++j) {
            const Vector x = to_vector(cs[k].reps[i]);
            const Vector y = to_vector(cs[l].reps[j]);
            const std::size_t gi = cs[k].offset + i;
            const std::size_t gj = cs[l].offset + j;
            const auto put = [&](const char* slot, std::size_t component,
                                 const Vector& value) {
              if (component >= top) return;  // trivial quotient
              const auto coords = class_coords(value.coords, component);
              for (std::size_t r = 0; r < coords.size(); ++r)
                prods[slot].at(gi, gj, comps[component].offset + r) = coords[r];
            };
            put("star", k + l + 1, eval_product(succ, x, y));
            put("vee", k + l + 1, eval_product(vee, x, y));
            put("diamond", k + l, eval_product(succ, x, y) - eval_product(prec, y, x));
            put("blackdiamond", k + l, eval_product(vee, x, y) - eval_product(vee, y, x));
          }
    for (auto& [name, p] : prods) p.sym = symmetry_of(p);
    return prods;
  };

  auto prods = build(comps);

  // Representative independence: shifting every representative by a
  // vector of the level below must leave all products unchanged.
  std::vector<Component> perturbed = comps;
  bool changed = false;
  for (std::size_t k = 0; k < top; ++k) {
    if (lv[k].rank() == 0) continue;
    for (auto& rep : perturbed[k].reps) {
      for (std::size_t c = 0; c < dim; ++c) rep[c] += lv[k].rows()[0][c];
      changed = true;
    }
  }
  if (changed) {
    const auto again = build(perturbed);
    for (const auto& [name, p] : prods)
      if (!p.same_entries(again.at(name)))
        throw structural_error(
            "graded products depend on the choice of coset representatives");
  }

  std::string meta = "graded space of an NS-Lie filtration; components";
  for (std::size_t k = 0; k < top; ++k)
    meta += " A" + std::to_string(k + 1) + "/A" + std::to_string(k) + "=" +
            std::to_string(comps[k].reps.size());
  return make_presentation(AlgebraKind::ns_poisson, gr_space, std::move(prods), meta);
}

}  // namespace algkit
