#include "algkit/space.hpp"

#include <algorithm>
#include <set>

namespace algkit {

std::size_t SpaceDescriptor::index_of(const std::string& name) const {
  const auto it = std::find(basis.begin(), basis.end(), name);
  if (it == basis.end())
    throw structural_error("unknown basis element '" + name + "'");
  return static_cast<std::size_t>(it - basis.begin());
}

SpaceDescriptor make_space(std::vector<std::string> basis) {
  if (basis.size() > kMaxDimension)
    throw structural_error("dimension exceeds the supported maximum of 32");
  std::set<std::string> seen;
  for (const auto& name : basis) {
    if (name.empty()) throw structural_error("empty basis name");
    if (!seen.insert(name).second)
      throw structural_error("duplicate basis name '" + name + "'");
  }
  return SpaceDescriptor{std::move(basis)};
}

bool Vector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Rational& c) { return c == 0; });
}

Vector& Vector::operator+=(const Vector& o) {
  if (coords.size() != o.coords.size())
    throw structural_error("vector dimension mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (coords.size() != o.coords.size())
    throw structural_error("vector dimension mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& c : coords) c *= s;
  return *this;
}

Vector zero_vector(std::size_t dim) {
  return Vector{std::vector<Rational>(dim)};
}

Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v = zero_vector(dim);
  v.coords.at(i) = 1;
  return v;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator*(const Rational& s, Vector v) { return v *= s; }

}  // namespace algkit
