/* impose.hpp -- the set-valued imposition operation over equivalence classes. */

#ifndef NESTED_IMPOSE_HPP_
#define NESTED_IMPOSE_HPP_

#include <vector>

#include "nested/equivalence.hpp"

namespace nested {

struct ImposedSet {
    std::vector<Address> raw;              // sorted, deduplicated
    std::vector<EquivalenceClass> classes; // sorted by representative

    friend bool operator==(const ImposedSet&, const ImposedSet&) = default;
};

/// Positionwise digit fill: the result's digit at i is A's when non-zero,
/// else B's. Computed in closed form over the lcm of the two periods.
Address impose_member(const Address& A, const Address& B);

/// Imposition a |> b: impose_member over the product of the two
/// equivalence classes, grouped by equivalence.
ImposedSet impose(const Address& a, const Address& b, const SpaceSpec& spec,
                  std::size_t depth = kDefaultDepth, std::size_t cap = kDefaultClassCap);

} // namespace nested

#endif // NESTED_IMPOSE_HPP_
