// algkit — finite-dimensional spaces with named bases, and exact vectors.

#ifndef ALGKIT_SPACE_HPP
#define ALGKIT_SPACE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "algkit/rational.hpp"

namespace algkit {

// Dense rank-3 storage caps the practical dimension; identity scans are
// O(n^3)/O(n^4) anyway.
inline constexpr std::size_t kMaxDimension = 32;

struct SpaceDescriptor {
  std::vector<std::string> basis;  // ordered, unique, nonempty names

  std::size_t dimension() const { return basis.size(); }
  std::size_t index_of(const std::string& name) const;
  bool operator==(const SpaceDescriptor&) const = default;
};

// Validates name uniqueness and the dimension cap.
SpaceDescriptor make_space(std::vector<std::string> basis);

struct Vector {
  std::vector<Rational> coords;

  std::size_t dimension() const { return coords.size(); }
  bool is_zero() const;
  bool operator==(const Vector&) const = default;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& s);
};

Vector zero_vector(std::size_t dim);
Vector basis_vector(std::size_t dim, std::size_t i);
Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(const Rational& s, Vector v);

}  // namespace algkit

#endif
