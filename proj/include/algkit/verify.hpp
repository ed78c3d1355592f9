// algkit — structure verification by exhaustive basis-tuple enumeration.

#ifndef ALGKIT_VERIFY_HPP
#define ALGKIT_VERIFY_HPP

#include "algkit/identities.hpp"
#include "algkit/presentation.hpp"

namespace algkit {

// Evaluates every identity of A's kind over all basis tuples. A failing
// identity reports the lexicographically smallest violating tuple with
// exact LHS/RHS values. Structural problems (bad slots, lying symmetry
// flags) throw; they are never a "fails" verdict.
VerificationReport verify_structure(const AlgebraPresentation& a);

// Shared scan: first violating tuple of one identity, or nullopt.
std::optional<Counterexample> scan_identity(const SpaceDescriptor& space,
                                            const SlotTable& slots, const Identity& id);

}  // namespace algkit

#endif
