// algkit — bilinear products given by structure constants.
//
// A product holds the rank-3 array c[i][j][k] meaning
//   e_i □ e_j = sum_k c[i][j][k] f_k,
// where e ranges over (left, right) bases and f over the codomain basis.
// Algebra operations have left = right = out; actions and cocycle values
// may target a different codomain.

#ifndef ALGKIT_PRODUCT_HPP
#define ALGKIT_PRODUCT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "algkit/space.hpp"

namespace algkit {

enum class Symmetry { none, symmetric, skew };

std::string symmetry_name(Symmetry s);
Symmetry symmetry_from_name(const std::string& name);

struct BilinearProduct {
  SpaceDescriptor left, right, out;
  Symmetry sym = Symmetry::none;
  std::vector<Rational> c;  // [(i * right.dim + j) * out.dim + k]

  Rational& at(std::size_t i, std::size_t j, std::size_t k) {
    return c[(i * right.dimension() + j) * out.dimension() + k];
  }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return c[(i * right.dimension() + j) * out.dimension() + k];
  }
  bool square() const { return left == right; }
  bool is_zero() const;
  bool same_entries(const BilinearProduct& o) const;  // ignores the symmetry flag
};

BilinearProduct zero_product(const SpaceDescriptor& left, const SpaceDescriptor& right,
                             const SpaceDescriptor& out);
BilinearProduct zero_product(const SpaceDescriptor& space);

// Bilinear extension; exact. Throws on dimension mismatch.
Vector eval_product(const BilinearProduct& p, const Vector& x, const Vector& y);

// e_i □ e_j, copied out of the constants.
Vector eval_basis(const BilinearProduct& p, std::size_t i, std::size_t j);

// Exact classification by entry comparison; the zero product reports
// symmetric (deterministic tie-break for the doubly-symmetric case).
Symmetry symmetry_of(const BilinearProduct& p);

// c'[i][j][k] = c[j][i][k]; requires left = right. Symmetry recomputed.
BilinearProduct flip(const BilinearProduct& p);

// Entrywise linear combination; all terms must share (left, right, out).
// Symmetry recomputed by inspection. Empty list is a structural error.
BilinearProduct combine(const std::vector<std::pair<Rational, BilinearProduct>>& terms);

// True when the declared flag matches the entries (flags other than
// `none` promise an entry-level symmetry).
bool flag_consistent(const BilinearProduct& p);

}  // namespace algkit

#endif
