// algkit — algebra-class presentations and verification reports.

#ifndef ALGKIT_PRESENTATION_HPP
#define ALGKIT_PRESENTATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algkit/product.hpp"

namespace algkit {

enum class AlgebraKind {
  commutative_associative,
  associative,  // verification target of subadjacent(ns-associative)
  lie,
  poisson,
  zinbiel,
  pre_lie,
  pre_poisson,
  ns_associative,
  ns_commutative,
  ns_lie,
  ns_poisson,
  l_dendriform,
  ns_pre_lie,
  f_manifold,
  ns_f_manifold,
};

std::string kind_name(AlgebraKind k);
AlgebraKind kind_from_name(const std::string& name);
const std::vector<AlgebraKind>& all_kinds();

// Product slots the kind requires, in canonical order.
const std::vector<std::string>& kind_slots(AlgebraKind k);

struct AlgebraPresentation {
  AlgebraKind kind{};
  SpaceDescriptor space;
  std::map<std::string, BilinearProduct> products;
  std::string metadata;

  const BilinearProduct& slot(const std::string& name) const;
};

// Validates: slot set matches the kind, every product is an algebra
// product over `space`, and declared symmetry flags agree with entries.
AlgebraPresentation make_presentation(AlgebraKind kind, const SpaceDescriptor& space,
                                      std::map<std::string, BilinearProduct> products,
                                      std::string metadata = {});

// Throws structural_error when `p` violates the presentation contract.
void validate_presentation(const AlgebraPresentation& p);

struct Counterexample {
  std::vector<std::string> tuple;  // basis element names (or level-vector labels)
  Vector lhs, rhs;
  std::vector<std::string> value_basis;  // codomain basis naming lhs/rhs coordinates
  std::optional<int> t_power;            // deformation checks only
};

struct IdentityResult {
  std::string name;
  bool holds = false;
  std::optional<Counterexample> counterexample;
};

struct VerificationReport {
  std::vector<IdentityResult> identities;
  std::vector<std::string> conventions;  // applied-convention notes

  bool holds() const;
  const IdentityResult* find(const std::string& name) const;
};

// Raised when an operation's mathematical precondition fails; carries the
// report of the failed check.
struct precondition_error : std::runtime_error {
  VerificationReport report;
  precondition_error(const std::string& what, VerificationReport rep)
      : std::runtime_error(what), report(std::move(rep)) {}
};

}  // namespace algkit

#endif
