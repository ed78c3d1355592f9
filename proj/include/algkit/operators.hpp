// algkit — linear-operator conditions on algebras and the structures
// they induce.

#ifndef ALGKIT_OPERATORS_HPP
#define ALGKIT_OPERATORS_HPP

#include <vector>

#include "algkit/constructions.hpp"
#include "algkit/linalg.hpp"
#include "algkit/presentation.hpp"

namespace algkit {

enum class Strictness { strict, permissive };

// N(x) o N(y) = N( N(x) o y + x o N(y) - N(x o y) ) for every product
// slot the kind carries. Kinds: commutative-associative, lie, poisson,
// f-manifold.
VerificationReport verify_nijenhuis(const AlgebraPresentation& a, const OperatorMatrix& n);

// R(x) o R(y) = R( R(x) o y + x o R(y) - R(x) o R(y) ), same kinds.
VerificationReport verify_reynolds(const AlgebraPresentation& a, const OperatorMatrix& r);

// D(x.y) = D(x).y + x.D(y) on a commutative-associative presentation.
VerificationReport verify_derivation(const AlgebraPresentation& a, const OperatorMatrix& d);

// x*y = N(x).y, x v y = -N(x.y), x<>y = {N(x),y}, x#y = -N{x,y}.
// Strict mode verifies the operator first and rejects with that report.
AlgebraPresentation induce_from_nijenhuis(const AlgebraPresentation& a,
                                          const OperatorMatrix& n,
                                          Strictness strictness = Strictness::strict);

// x o_N y = N(x) o y + x o N(y) - N(x o y) slotwise; the construction
// asserts N(x o_N y) = N(x) o N(y) on all basis pairs and rejects
// otherwise (that assertion is exactly the Nijenhuis condition).
AlgebraPresentation deform_by_nijenhuis(const AlgebraPresentation& a,
                                        const OperatorMatrix& n);

// x*y = R(x).y, x v y = -R(x).R(y), x<>y = {R(x),y}, x#y = -{R(x),R(y)}.
// Kinds: poisson, f-manifold.
AlgebraPresentation induce_from_reynolds(const AlgebraPresentation& a,
                                         const OperatorMatrix& r,
                                         Strictness strictness = Strictness::strict);

// {x,y} := x.D(y) - y.D(x) on a commutative-associative presentation with
// a verified derivation; returns an f-manifold presentation.
AlgebraPresentation derivation_bracket(const AlgebraPresentation& a,
                                       const OperatorMatrix& d);

struct HierarchyReport {
  struct PowerEntry {
    unsigned power = 0;
    VerificationReport nijenhuis;
    VerificationReport structure;  // induced NS structure
  };
  struct PairEntry {
    unsigned power_k = 0, power_l = 0;
    VerificationReport sum;  // slotwise sum of the two induced structures
  };
  std::vector<PowerEntry> powers;
  std::vector<PairEntry> pairs;
  bool holds() const;
};

// For each k: N^k is checked as a Nijenhuis operator (N^0 = Id) and the
// induced structure is verified; for each pair k < l the slotwise sum of
// the induced structures is verified. Requires verify_nijenhuis(a, n).
HierarchyReport nijenhuis_hierarchy(const AlgebraPresentation& a, const OperatorMatrix& n,
                                    const std::vector<unsigned>& powers);

}  // namespace algkit

#endif
