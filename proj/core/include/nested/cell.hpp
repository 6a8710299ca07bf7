/* cell.hpp -- cells as digit-prefix intervals, their vertex sets,
 * adjacency, and part classification.
 */

#ifndef NESTED_CELL_HPP_
#define NESTED_CELL_HPP_

#include <string>
#include <vector>

#include "nested/equivalence.hpp"

namespace nested {

/// The digit-prefix interval N^scale * [word.(0), word.(N-1)]: addresses
/// whose digits at positions scale .. scale+|word|-1 spell `word` and
/// vanish above.
struct Cell {
    std::vector<Digit> word; // most significant first, non-empty
    long scale = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

int compare(const Cell& a, const Cell& b);
inline bool operator<(const Cell& a, const Cell& b) { return compare(a, b) < 0; }

std::string format_cell(const Cell& c, unsigned n_parts);

/// The N child cells word+d at scale-1.
std::vector<Cell> subdivide(const Cell& c, unsigned n_parts);

/// Membership of the equivalence class of `a`: true when some member
/// matches the cell's digit-prefix pattern.
bool cell_contains(const Cell& c, const Address& a, const SpaceSpec& spec,
                   std::size_t depth = kDefaultDepth, std::size_t cap = kDefaultClassCap);

/// Boundary classes: every rule-side tail (reflexive sides included) whose
/// head equals the cell's last word digit, appended to the cell word.
/// Deduplicated by class, sorted by representative. Corner addresses that
/// leave a restricted space are skipped.
std::vector<EquivalenceClass> vertex_set(const Cell& c, const SpaceSpec& spec,
                                         std::size_t depth = kDefaultDepth,
                                         std::size_t cap = kDefaultClassCap);

/// Shared-vertex adjacency of same-level cells. Throws ScaleMismatch when
/// the cells have different scales or word lengths.
bool adjacent(const Cell& c1, const Cell& c2, const SpaceSpec& spec,
              std::size_t depth = kDefaultDepth, std::size_t cap = kDefaultClassCap);

enum class PartClass { EdgePart, MiddlingPart, IsolatedPart };

const char* part_class_name(PartClass c);

/// EdgePart when 0.(i) ~ i.(0) holds non-trivially; else MiddlingPart when
/// some non-reflexive rule side carries head digit i; else IsolatedPart.
PartClass classify_part(Digit i, const SpaceSpec& spec,
                        std::size_t depth = kDefaultDepth,
                        std::size_t cap = kDefaultClassCap);

} // namespace nested

#endif // NESTED_CELL_HPP_
