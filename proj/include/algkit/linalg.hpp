// algkit — exact linear algebra: operator matrices, module maps, and
// reduced row echelon bases for subspace work.

#ifndef ALGKIT_LINALG_HPP
#define ALGKIT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "algkit/space.hpp"

namespace algkit {

// Square matrix over a space. Column convention: N(e_j) = sum_i a[i][j] e_i.
struct OperatorMatrix {
  SpaceDescriptor space;
  std::vector<Rational> a;  // row-major n*n

  std::size_t dim() const { return space.dimension(); }
  Rational& at(std::size_t i, std::size_t j) { return a[i * dim() + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * dim() + j]; }

  Vector apply(const Vector& v) const;
  Vector column(std::size_t j) const;  // N(e_j)
  bool operator==(const OperatorMatrix&) const = default;
};

OperatorMatrix zero_operator(const SpaceDescriptor& space);
OperatorMatrix identity_operator(const SpaceDescriptor& space);
OperatorMatrix scale_operator(const Rational& s, OperatorMatrix m);
OperatorMatrix add_operators(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix multiply_operators(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator_power(const OperatorMatrix& n, unsigned k);  // k = 0 gives Id

// Rectangular linear map source -> target; R(f_j) = sum_i a[i][j] e_i.
struct ModuleMap {
  SpaceDescriptor source;  // V
  SpaceDescriptor target;  // A
  std::vector<Rational> a;  // row-major target.dim x source.dim

  Rational& at(std::size_t i, std::size_t j) { return a[i * source.dimension() + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return a[i * source.dimension() + j];
  }
  Vector apply(const Vector& v) const;
  bool operator==(const ModuleMap&) const = default;
};

ModuleMap zero_module_map(const SpaceDescriptor& source, const SpaceDescriptor& target);
ModuleMap identity_module_map(const SpaceDescriptor& space);

// Reduced row echelon basis of a subspace of k^ambient. Pivot columns are
// strictly increasing and pivot entries are 1 with zeros above and below.
class Echelon {
 public:
  explicit Echelon(std::size_t ambient) : ambient_(ambient) {}

  // Reduces v against the basis and inserts the residual if nonzero.
  // Returns true when the rank grew.
  bool insert(std::vector<Rational> v);

  // Residual of v after elimination; zero iff v lies in the span.
  std::vector<Rational> reduce(std::vector<Rational> v) const;
  bool contains(const std::vector<Rational>& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t ambient_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace algkit

#endif
