#include "algkit/product.hpp"

#include <algorithm>

namespace algkit {

std::string symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::none: return "none";
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::skew: return "skew";
  }
  throw structural_error("bad symmetry value");
}

Symmetry symmetry_from_name(const std::string& name) {
  if (name == "none") return Symmetry::none;
  if (name == "symmetric") return Symmetry::symmetric;
  if (name == "skew") return Symmetry::skew;
  throw structural_error("unknown symmetry '" + name + "'");
}

bool BilinearProduct::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& v) { return v == 0; });
}

bool BilinearProduct::same_entries(const BilinearProduct& o) const {
  return left == o.left && right == o.right && out == o.out && c == o.c;
}

BilinearProduct zero_product(const SpaceDescriptor& left, const SpaceDescriptor& right,
                             const SpaceDescriptor& out) {
  BilinearProduct p{left, right, out, Symmetry::none,
                    std::vector<Rational>(left.dimension() * right.dimension() *
                                          out.dimension())};
  if (p.square()) p.sym = Symmetry::symmetric;
  return p;
}

BilinearProduct zero_product(const SpaceDescriptor& space) {
  return zero_product(space, space, space);
}

Vector eval_product(const BilinearProduct& p, const Vector& x, const Vector& y) {
  if (x.dimension() != p.left.dimension() || y.dimension() != p.right.dimension())
    throw structural_error("eval_product: vector dimension mismatch");
  Vector out = zero_vector(p.out.dimension());
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (x.coords[i] == 0) continue;
    for (std::size_t j = 0; j < y.dimension(); ++j) {
      if (y.coords[j] == 0) continue;
      const Rational w = x.coords[i] * y.coords[j];
      for (std::size_t k = 0; k < out.dimension(); ++k) {
        const Rational& ck = p.at(i, j, k);
        if (ck != 0) out.coords[k] += w * ck;
      }
    }
  }
  return out;
}

Vector eval_basis(const BilinearProduct& p, std::size_t i, std::size_t j) {
  Vector out = zero_vector(p.out.dimension());
  for (std::size_t k = 0; k < out.dimension(); ++k) out.coords[k] = p.at(i, j, k);
  return out;
}

Symmetry symmetry_of(const BilinearProduct& p) {
  if (!p.square()) throw structural_error("symmetry_of: product inputs are not square");
  const std::size_t n = p.left.dimension();
  const std::size_t m = p.out.dimension();
  bool symmetric = true, skew = true;
  for (std::size_t i = 0; i < n && (symmetric || skew); ++i)
    for (std::size_t j = 0; j <= i && (symmetric || skew); ++j)
      for (std::size_t k = 0; k < m; ++k) {
        if (p.at(i, j, k) != p.at(j, i, k)) symmetric = false;
        if (p.at(i, j, k) != -p.at(j, i, k)) skew = false;
        if (!symmetric && !skew) break;
      }
  if (symmetric) return Symmetry::symmetric;
  if (skew) return Symmetry::skew;
  return Symmetry::none;
}

BilinearProduct flip(const BilinearProduct& p) {
  if (!p.square()) throw structural_error("flip: product inputs are not square");
  BilinearProduct out = p;
  const std::size_t n = p.left.dimension();
  const std::size_t m = p.out.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k) out.at(i, j, k) = p.at(j, i, k);
  out.sym = symmetry_of(out);
  return out;
}

BilinearProduct combine(const std::vector<std::pair<Rational, BilinearProduct>>& terms) {
  if (terms.empty()) throw structural_error("combine: empty term list");
  const auto& first = terms.front().second;
  BilinearProduct out = zero_product(first.left, first.right, first.out);
  for (const auto& [coeff, p] : terms) {
    if (p.left != first.left || p.right != first.right || p.out != first.out)
      throw structural_error("combine: products live over different spaces");
    for (std::size_t idx = 0; idx < out.c.size(); ++idx)
      if (p.c[idx] != 0) out.c[idx] += coeff * p.c[idx];
  }
  out.sym = out.square() ? symmetry_of(out) : Symmetry::none;
  return out;
}

bool flag_consistent(const BilinearProduct& p) {
  if (p.sym == Symmetry::none) return true;
  if (!p.square()) return false;
  const Symmetry actual = symmetry_of(p);
  if (actual == Symmetry::symmetric)  // the zero product satisfies both flags
    return p.sym == Symmetry::symmetric || p.is_zero();
  return actual == p.sym;
}

}  // namespace algkit
