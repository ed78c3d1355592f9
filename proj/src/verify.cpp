#include "algkit/verify.hpp"

#include <cstdlib>

#include "algkit/parallel.hpp"

namespace algkit {

namespace {

unsigned g_thread_override = 0;

std::size_t pow_size(std::size_t base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

unsigned effective_threads() {
  if (g_thread_override > 0) return g_thread_override;
  if (const char* env = std::getenv("ALGKIT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

void set_thread_override(unsigned t) { g_thread_override = t; }

std::optional<Counterexample> scan_identity(const SpaceDescriptor& space,
                                            const SlotTable& slots, const Identity& id) {
  const std::size_t n = space.dimension();
  if (n == 0) return std::nullopt;
  const std::size_t total = pow_size(n, id.arity);
  auto check = [&](std::size_t index) -> std::optional<Counterexample> {
    std::vector<std::size_t> tuple(static_cast<std::size_t>(id.arity));
    std::size_t rem = index;
    for (int v = id.arity - 1; v >= 0; --v) {
      tuple[static_cast<std::size_t>(v)] = rem % n;
      rem /= n;
    }
    Vector lhs = eval_terms(slots, id.lhs, tuple, n);
    Vector rhs = eval_terms(slots, id.rhs, tuple, n);
    if (lhs == rhs) return std::nullopt;
    Counterexample cex;
    for (const std::size_t i : tuple) cex.tuple.push_back(space.basis[i]);
    cex.lhs = std::move(lhs);
    cex.rhs = std::move(rhs);
    cex.value_basis = space.basis;
    return cex;
  };
  return scan_first(total, check);
}

VerificationReport verify_structure(const AlgebraPresentation& a) {
  validate_presentation(a);
  const KindCatalog& cat = kind_catalog(a.kind);
  const SlotTable slots = build_slot_table(a);
  VerificationReport report;
  for (const Identity& id : cat.identities) {
    IdentityResult result{id.name, true, std::nullopt};
    if (auto cex = scan_identity(a.space, slots, id)) {
      result.holds = false;
      result.counterexample = std::move(cex);
    }
    report.identities.push_back(std::move(result));
  }
  return report;
}

}  // namespace algkit
