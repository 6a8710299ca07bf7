/* equivalence.hpp -- the equivalence generated by connectivity rules:
 * one-step rewriting, class closure, and the tri-state decision.
 */

#ifndef NESTED_EQUIVALENCE_HPP_
#define NESTED_EQUIVALENCE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "nested/address.hpp"
#include "nested/space.hpp"

namespace nested {

inline constexpr std::size_t kDefaultDepth = 8;
inline constexpr std::size_t kDefaultClassCap = 4096;

/// All addresses reachable from `a` by one rule application at any scale
/// under any common context. Sorted, deduplicated, `a` itself excluded.
/// The scale scan range is derived from the normal-form sizes of `a` and
/// the rule tails.
std::vector<Address> one_step(const Address& a, const SpaceSpec& spec);

struct EquivalenceClass {
    Address representative;        // least member
    std::vector<Address> members;  // sorted

    friend bool operator==(const EquivalenceClass&, const EquivalenceClass&) = default;
};

/// Breadth-first closure of one_step from `a`, to at most `depth` rewrite
/// applications. Throws ClassBudgetExceeded past `cap` members.
EquivalenceClass class_members(const Address& a, const SpaceSpec& spec,
                               std::size_t depth = kDefaultDepth,
                               std::size_t cap = kDefaultClassCap);

/// Closure in breadth-first discovery order (the queried address first).
std::vector<Address> class_bfs_order(const Address& a, const SpaceSpec& spec,
                                     std::size_t depth = kDefaultDepth,
                                     std::size_t cap = kDefaultClassCap);

enum class Relation { Equal, Equivalent, NotFoundUpToDepth };

const char* relation_name(Relation r);

/// Equal when the normal forms coincide; Equivalent when `b` is reachable
/// within `depth` rewrites; NotFoundUpToDepth otherwise.
Relation equivalent(const Address& a, const Address& b, const SpaceSpec& spec,
                    std::size_t depth = kDefaultDepth, std::size_t cap = kDefaultClassCap);

/// Rewrite chain a = c0, c1, ..., ck = b witnessing equivalence; nullopt
/// when not equivalent within the budget. Equal addresses yield {a}.
std::optional<std::vector<Address>> witness_chain(const Address& a, const Address& b,
                                                  const SpaceSpec& spec,
                                                  std::size_t depth = kDefaultDepth,
                                                  std::size_t cap = kDefaultClassCap);

} // namespace nested

#endif // NESTED_EQUIVALENCE_HPP_
