// algkit — the identity catalog.
//
// Each algebra kind carries a data table of defining identities. An
// identity is a pair of term lists over a small expression language whose
// leaves are bound variables and whose nodes apply named product slots.
// Derived operations (the subadjacent product and bracket) are
// materialized per presentation and referenced by name like any other
// slot, so the catalog stays a faithful transcription of the definitions.

#ifndef ALGKIT_IDENTITIES_HPP
#define ALGKIT_IDENTITIES_HPP

#include <map>
#include <string>
#include <vector>

#include "algkit/presentation.hpp"

namespace algkit {

struct Expr {
  int var = -1;            // leaf when >= 0 (index into the bound tuple)
  std::string slot;        // product slot when a node
  std::vector<Expr> args;  // exactly two when a node
};

Expr V(int var);
Expr P(std::string slot, Expr a, Expr b);

struct Term {
  Rational coeff;
  Expr expr;
};
using Terms = std::vector<Term>;

Terms term(const Rational& coeff, Expr e);
Terms operator+(Terms a, const Terms& b);
Terms scaled(const Rational& c, Terms ts);
// a □ (sum of terms) and (sum of terms) □ b, expanded by bilinearity.
Terms apply_left(const std::string& slot, const Expr& a, const Terms& ts);
Terms apply_right(const std::string& slot, const Terms& ts, const Expr& b);

struct Identity {
  std::string name;
  int arity = 3;  // variables 0..arity-1
  Terms lhs, rhs;
};

// name := sum of coeff * base or coeff * flip(base)
struct DerivedSlotDef {
  struct Part {
    Rational coeff;
    std::string base;
    bool flipped = false;
  };
  std::string name;
  std::vector<Part> parts;
};

struct KindCatalog {
  std::vector<DerivedSlotDef> derived;
  std::vector<Identity> identities;
};

const KindCatalog& kind_catalog(AlgebraKind kind);

// Base products plus materialized derived slots.
using SlotTable = std::map<std::string, BilinearProduct>;
SlotTable build_slot_table(const AlgebraPresentation& p);
BilinearProduct materialize_derived(const SlotTable& base, const DerivedSlotDef& def);

Vector eval_expr(const SlotTable& slots, const Expr& e,
                 const std::vector<std::size_t>& tuple, std::size_t dim);
Vector eval_terms(const SlotTable& slots, const Terms& terms,
                  const std::vector<std::size_t>& tuple, std::size_t dim);

}  // namespace algkit

#endif
