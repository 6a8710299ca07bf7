/* space.hpp -- nested-space declarations: part count, connectivity rules,
 * digit restrictions, and rule canonicalization.
 */

#ifndef NESTED_SPACE_HPP_
#define NESTED_SPACE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "nested/address.hpp"

namespace nested {

/// One side of a connectivity rule at canonical scale: a single
/// integer-part digit followed by a fractional tail.
struct RuleSide {
    Digit head = 0;
    Tail tail = Tail::zero();

    /// Digit at relative position <= 0 (0 is the head).
    Digit digit_rel(long position) const {
        return position == 0 ? head : tail.digit(static_cast<std::size_t>(-position));
    }

    Address to_address() const { return Address({head}, tail); }
    bool is_zero() const { return head == 0 && tail.is_zero(); }

    friend bool operator==(const RuleSide&, const RuleSide&) = default;
};

int compare(const RuleSide& a, const RuleSide& b);
inline bool operator<(const RuleSide& a, const RuleSide& b) { return compare(a, b) < 0; }

/// An unordered pair of canonical rule sides. Reflexive rules (left ==
/// right) are retained as boundary-tail declarations; they generate no
/// identifications.
struct ConnectivityRule {
    RuleSide left;
    RuleSide right;
    bool reflexive = false;

    friend bool operator==(const ConnectivityRule&, const ConnectivityRule&) = default;
};

int compare(const ConnectivityRule& a, const ConnectivityRule& b);
inline bool operator<(const ConnectivityRule& a, const ConnectivityRule& b) {
    return compare(a, b) < 0;
}

/// What to do with rules whose tails cannot exist at the declared
/// right-limit resolution: reject the space, or drop the rules (used by
/// the builtin generator, where the unrestricted rule family is filtered).
enum class RestrictionPolicy { Strict, DropIncompatible };

/// A nested-space declaration. Immutable after construction; rules are
/// canonical, deduplicated, and sorted.
struct SpaceSpec {
    std::string name;
    unsigned n_parts = 2;
    std::vector<ConnectivityRule> rules;
    /// At most this many digits left of the point (>= 1 when present).
    std::optional<unsigned> left_limit;
    /// No fractional digits below position -right_limit (0: integers only).
    std::optional<unsigned> right_limit;

    /// Canonicalizes the raw pairs (reflexive when the two sides are
    /// equal), validates, deduplicates, and sorts. Throws InvalidSpace /
    /// DigitOutOfRange / NotCanonicalizable / ConflictingRestriction.
    static SpaceSpec make(std::string name, unsigned n_parts,
                          const std::vector<std::pair<Address, Address>>& raw_rules,
                          std::optional<unsigned> left_limit = std::nullopt,
                          std::optional<unsigned> right_limit = std::nullopt,
                          RestrictionPolicy policy = RestrictionPolicy::Strict);

    std::size_t non_reflexive_count() const;

    /// Membership of an address in the (possibly restricted) space.
    bool contains(const Address& a) const;
    /// Throws DigitOutOfRange / AddressNotInSpace when not contained.
    void require_member(const Address& a) const;

    /// All distinct rule-side tails whose head digit is `head`, both rule
    /// sides and reflexive declarations included. Sorted.
    std::vector<Tail> side_tails(Digit head) const;

    friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

/// Number of non-reflexive canonical rules.
std::size_t rule_count(const SpaceSpec& spec);

/// Shifts both addresses by the common scale that anchors the highest
/// non-zero digit of the pair at position 0 and returns the unordered
/// canonical rule. Throws NotCanonicalizable when the shifted sides carry
/// the same non-zero leading digit (the pair is a rule instance under
/// common context, which the rule format cannot express).
ConnectivityRule canonicalize_rule(const Address& raw_left, const Address& raw_right,
                                   unsigned n_parts);
ConnectivityRule canonicalize_rule(const Address& raw_left, const Address& raw_right,
                                   const SpaceSpec& spec);

/// True when the side's instances can exist with no fractional digit below
/// -right_limit at some scale, i.e. the tail is eventually zero.
bool side_fits_right_limit(const RuleSide& side);

std::string format_rule_side(const RuleSide& side, unsigned n_parts);

} // namespace nested

#endif // NESTED_SPACE_HPP_
