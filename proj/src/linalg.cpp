#include "algkit/linalg.hpp"

namespace algkit {

Vector OperatorMatrix::apply(const Vector& v) const {
  const std::size_t n = dim();
  if (v.dimension() != n) throw structural_error("operator/vector dimension mismatch");
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (at(i, j) != 0 && v.coords[j] != 0) out.coords[i] += at(i, j) * v.coords[j];
  return out;
}

Vector OperatorMatrix::column(std::size_t j) const {
  const std::size_t n = dim();
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) out.coords[i] = at(i, j);
  return out;
}

OperatorMatrix zero_operator(const SpaceDescriptor& space) {
  const std::size_t n = space.dimension();
  return OperatorMatrix{space, std::vector<Rational>(n * n)};
}

OperatorMatrix identity_operator(const SpaceDescriptor& space) {
  OperatorMatrix m = zero_operator(space);
  for (std::size_t i = 0; i < space.dimension(); ++i) m.at(i, i) = 1;
  return m;
}

OperatorMatrix scale_operator(const Rational& s, OperatorMatrix m) {
  for (auto& e : m.a) e *= s;
  return m;
}

OperatorMatrix add_operators(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.space != b.space) throw structural_error("operator space mismatch");
  OperatorMatrix out = a;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += b.a[i];
  return out;
}

OperatorMatrix multiply_operators(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.space != b.space) throw structural_error("operator space mismatch");
  const std::size_t n = a.dim();
  OperatorMatrix out = zero_operator(a.space);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b.at(k, j) != 0) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

OperatorMatrix operator_power(const OperatorMatrix& n, unsigned k) {
  OperatorMatrix out = identity_operator(n.space);
  for (unsigned step = 0; step < k; ++step) out = multiply_operators(out, n);
  return out;
}

Vector ModuleMap::apply(const Vector& v) const {
  const std::size_t cols = source.dimension();
  const std::size_t rows = target.dimension();
  if (v.dimension() != cols) throw structural_error("module map/vector dimension mismatch");
  Vector out = zero_vector(rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (at(i, j) != 0 && v.coords[j] != 0) out.coords[i] += at(i, j) * v.coords[j];
  return out;
}

ModuleMap zero_module_map(const SpaceDescriptor& source, const SpaceDescriptor& target) {
  return ModuleMap{source, target,
                   std::vector<Rational>(source.dimension() * target.dimension())};
}

ModuleMap identity_module_map(const SpaceDescriptor& space) {
  ModuleMap m = zero_module_map(space, space);
  for (std::size_t i = 0; i < space.dimension(); ++i) m.at(i, i) = 1;
  return m;
}

bool Echelon::insert(std::vector<Rational> v) {
  if (v.size() != ambient_) throw structural_error("echelon ambient dimension mismatch");
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < ambient_ && v[p] == 0) ++p;
  if (p == ambient_) return false;
  const Rational inv = v[p];
  for (auto& c : v) c /= inv;
  // Back-substitute into existing rows, then place by pivot order.
  for (auto& row : rows_) {
    if (row[p] != 0) {
      const Rational f = row[p];
      for (std::size_t j = 0; j < ambient_; ++j) row[j] -= f * v[j];
    }
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

std::vector<Rational> Echelon::reduce(std::vector<Rational> v) const {
  if (v.size() != ambient_) throw structural_error("echelon ambient dimension mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool Echelon::contains(const std::vector<Rational>& v) const {
  const auto res = reduce(v);
  for (const auto& c : res)
    if (c != 0) return false;
  return true;
}

}  // namespace algkit
