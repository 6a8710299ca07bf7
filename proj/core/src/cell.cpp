#include "nested/cell.hpp"

#include <algorithm>
#include <map>

#include "nested/error.hpp"

namespace nested {

int compare(const Cell& a, const Cell& b) {
    if (a.scale != b.scale) return a.scale < b.scale ? -1 : 1;
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.word.size(); ++i)
        if (a.word[i] != b.word[i]) return a.word[i] < b.word[i] ? -1 : 1;
    return 0;
}

std::string format_cell(const Cell& c, unsigned n_parts) {
    return format_digits(c.word, n_parts) + "@" + std::to_string(c.scale);
}

std::vector<Cell> subdivide(const Cell& c, unsigned n_parts) {
    std::vector<Cell> children;
    children.reserve(n_parts);
    for (Digit d = 0; d < n_parts; ++d) {
        Cell child{c.word, c.scale - 1};
        child.word.push_back(d);
        children.push_back(std::move(child));
    }
    return children;
}

namespace {

bool matches_prefix(const Cell& c, const Address& a) {
    const long top = c.scale + static_cast<long>(c.word.size()) - 1;
    // Nothing above the cell's top position.
    const long int_top = static_cast<long>(a.int_digits().size()) - 1;
    for (long i = int_top; i > top; --i)
        if (a.digit_at(i) != 0) return false;
    for (std::size_t j = 0; j < c.word.size(); ++j)
        if (a.digit_at(top - static_cast<long>(j)) != c.word[j]) return false;
    return true;
}

// The corner address: cell word at the cell scale followed by the tail.
Address corner_address(const Cell& c, const Tail& tail) {
    return scale(Address(c.word, tail), c.scale);
}

} // namespace

bool cell_contains(const Cell& c, const Address& a, const SpaceSpec& spec,
                   std::size_t depth, std::size_t cap) {
    const EquivalenceClass cls = class_members(a, spec, depth, cap);
    return std::any_of(cls.members.begin(), cls.members.end(),
                       [&](const Address& m) { return matches_prefix(c, m); });
}

std::vector<EquivalenceClass> vertex_set(const Cell& c, const SpaceSpec& spec,
                                         std::size_t depth, std::size_t cap) {
    std::map<Address, EquivalenceClass> by_representative;
    for (const Tail& tail : spec.side_tails(c.word.back())) {
        const Address corner = corner_address(c, tail);
        if (!spec.contains(corner)) continue;
        EquivalenceClass cls = class_members(corner, spec, depth, cap);
        by_representative.emplace(cls.representative, std::move(cls));
    }
    std::vector<EquivalenceClass> out;
    out.reserve(by_representative.size());
    for (auto& [rep, cls] : by_representative) out.push_back(std::move(cls));
    return out;
}

bool adjacent(const Cell& c1, const Cell& c2, const SpaceSpec& spec, std::size_t depth,
              std::size_t cap) {
    if (c1.scale != c2.scale || c1.word.size() != c2.word.size())
        throw Error(Errc::ScaleMismatch, "adjacency requires cells of the same level");
    const auto v1 = vertex_set(c1, spec, depth, cap);
    const auto v2 = vertex_set(c2, spec, depth, cap);
    for (const auto& a : v1)
        for (const auto& b : v2)
            if (a.representative == b.representative) return true;
    return false;
}

const char* part_class_name(PartClass c) {
    switch (c) {
    case PartClass::EdgePart: return "EdgePart";
    case PartClass::MiddlingPart: return "MiddlingPart";
    case PartClass::IsolatedPart: return "IsolatedPart";
    }
    return "?";
}

PartClass classify_part(Digit i, const SpaceSpec& spec, std::size_t depth,
                        std::size_t cap) {
    if (i >= spec.n_parts)
        throw Error(Errc::DigitOutOfRange,
                    "part " + std::to_string(i) + " not below " + std::to_string(spec.n_parts));
    const Address left({}, Tail::make({}, {i}));       // 0.(i)
    const Address right({i}, Tail::zero());            // i.(0)
    if (spec.contains(left) && spec.contains(right) &&
        equivalent(left, right, spec, depth, cap) == Relation::Equivalent)
        return PartClass::EdgePart;
    for (const ConnectivityRule& rule : spec.rules) {
        if (rule.reflexive) continue;
        if (rule.left.head == i || rule.right.head == i) return PartClass::MiddlingPart;
    }
    return PartClass::IsolatedPart;
}

} // namespace nested
