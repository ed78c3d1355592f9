// algkit — Z-graded presentations and the Gerstenhaber suite.
//
// Degrees live on basis elements; each product declares a degree shift
// (0 for the commutative-type operations, typically -1 for the
// bracket-type ones). Koszul signs are computed from stored degrees at
// evaluation time. Exponents involving a bracket-type argument use the
// shifted degree |x| + shift, which reproduces the printed (|x|-1)
// patterns at shift -1 and degenerates to the ungraded identities when
// all degrees and shifts are zero.

#ifndef ALGKIT_GRADED_HPP
#define ALGKIT_GRADED_HPP

#include <map>
#include <string>
#include <vector>

#include "algkit/linalg.hpp"
#include "algkit/operators.hpp"
#include "algkit/presentation.hpp"

namespace algkit {

enum class GradedKind {
  gerstenhaber,
  graded_ns_commutative,
  graded_ns_lie,
  ns_gerstenhaber,
};

std::string graded_kind_name(GradedKind k);
GradedKind graded_kind_from_name(const std::string& name);
const std::vector<std::string>& graded_kind_slots(GradedKind k);

struct GradedProduct {
  BilinearProduct p;
  long shift = 0;
};

struct GradedPresentation {
  GradedKind kind{};
  SpaceDescriptor space;
  std::vector<long> degrees;  // one per basis element
  std::map<std::string, GradedProduct> products;
  std::string metadata;

  const GradedProduct& slot(const std::string& name) const;
  long lie_shift() const;  // shift of the bracket-type slots (0 if none)
};

// Validates slots, shift conventions (commutative-type slots have shift
// 0; bracket-type slots share one shift) and degree homogeneity:
// c[i][j][k] != 0 requires deg k = deg i + deg j + shift.
GradedPresentation make_graded_presentation(GradedKind kind, SpaceDescriptor space,
                                            std::vector<long> degrees,
                                            std::map<std::string, GradedProduct> products,
                                            std::string metadata = {});
void validate_graded_presentation(const GradedPresentation& g);

// (-1)^{(d_i+shift)(d_j+shift)} c[j][i][k]; an involution.
BilinearProduct signed_flip(const BilinearProduct& p, const std::vector<long>& degrees,
                            long shift);

// All identities of the kind on homogeneous basis tuples with exact
// Koszul signs.
VerificationReport verify_graded(const GradedPresentation& g);

// ns-gerstenhaber -> gerstenhaber via the graded subadjacent product and
// bracket.
GradedPresentation graded_subadjacent(const GradedPresentation& g);

// Degree-0 operator, graded Nijenhuis identity per product (no signs).
VerificationReport verify_graded_nijenhuis(const GradedPresentation& g,
                                           const OperatorMatrix& n);

// gerstenhaber -> ns-gerstenhaber by x*y = N(x).y, x v y = -N(x.y),
// x<>y = {N(x),y}, x#y = -N{x,y}.
GradedPresentation graded_induce_from_nijenhuis(const GradedPresentation& g,
                                                const OperatorMatrix& n,
                                                Strictness strictness = Strictness::strict);

}  // namespace algkit

#endif
