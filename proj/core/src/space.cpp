#include "nested/space.hpp"

#include <algorithm>
#include <set>

#include "nested/error.hpp"

namespace nested {

int compare(const RuleSide& a, const RuleSide& b) {
    if (a.head != b.head) return a.head < b.head ? -1 : 1;
    return compare(a.tail, b.tail);
}

int compare(const ConnectivityRule& a, const ConnectivityRule& b) {
    if (int c = compare(a.left, b.left)) return c;
    if (int c = compare(a.right, b.right)) return c;
    if (a.reflexive != b.reflexive) return a.reflexive ? -1 : 1;
    return 0;
}

namespace {

void check_address_digits(const Address& a, unsigned n_parts) {
    if (a.max_digit() >= n_parts)
        throw Error(Errc::DigitOutOfRange,
                    "address digit " + std::to_string(a.max_digit()) + " not below " +
                        std::to_string(n_parts));
}

// The side of `a` scaled by k, which must leave at most one integer digit.
RuleSide side_at_scale(const Address& a, long k) {
    const Address shifted = scale(a, k);
    RuleSide side;
    side.head = shifted.int_digits().empty() ? 0 : shifted.int_digits()[0];
    side.tail = shifted.tail();
    return side;
}

} // namespace

ConnectivityRule canonicalize_rule(const Address& raw_left, const Address& raw_right,
                                   unsigned n_parts) {
    check_address_digits(raw_left, n_parts);
    check_address_digits(raw_right, n_parts);

    if (raw_left == raw_right) {
        // Reflexive declaration: only shift down when the integer part is
        // wider than one digit, so the declared part digit is preserved.
        const auto hi = raw_left.highest_nonzero();
        const long k = (hi && *hi >= 1) ? -*hi : 0;
        const RuleSide side = side_at_scale(raw_left, k);
        return ConnectivityRule{side, side, true};
    }

    const auto hl = raw_left.highest_nonzero();
    const auto hr = raw_right.highest_nonzero();
    long anchor = 0;
    if (hl && hr) anchor = std::max(*hl, *hr);
    else if (hl) anchor = *hl;
    else if (hr) anchor = *hr;
    RuleSide left = side_at_scale(raw_left, -anchor);
    RuleSide right = side_at_scale(raw_right, -anchor);
    if (left.head == right.head && left.head != 0)
        throw Error(Errc::NotCanonicalizable,
                    "both sides share leading digit " + std::to_string(left.head) +
                        " at every canonical scale; the pair is a rule instance, not a rule");
    if (right < left) std::swap(left, right);
    return ConnectivityRule{left, right, false};
}

ConnectivityRule canonicalize_rule(const Address& raw_left, const Address& raw_right,
                                   const SpaceSpec& spec) {
    return canonicalize_rule(raw_left, raw_right, spec.n_parts);
}

bool side_fits_right_limit(const RuleSide& side) {
    return side.tail.per.size() == 1 && side.tail.per[0] == 0;
}

SpaceSpec SpaceSpec::make(std::string name, unsigned n_parts,
                          const std::vector<std::pair<Address, Address>>& raw_rules,
                          std::optional<unsigned> left_limit,
                          std::optional<unsigned> right_limit,
                          RestrictionPolicy policy) {
    if (n_parts < 2)
        throw Error(Errc::InvalidSpace, "part count must be at least 2");
    if (left_limit && *left_limit < 1)
        throw Error(Errc::InvalidSpace, "left limit must be at least 1");

    std::set<ConnectivityRule> rules;
    for (const auto& [raw_left, raw_right] : raw_rules) {
        ConnectivityRule rule = canonicalize_rule(raw_left, raw_right, n_parts);
        if (rule.left.head >= n_parts || rule.right.head >= n_parts ||
            rule.left.tail.max_digit() >= n_parts || rule.right.tail.max_digit() >= n_parts)
            throw Error(Errc::DigitOutOfRange, "rule digit not below " + std::to_string(n_parts));
        if (right_limit &&
            (!side_fits_right_limit(rule.left) || !side_fits_right_limit(rule.right))) {
            if (policy == RestrictionPolicy::DropIncompatible) continue;
            throw Error(Errc::ConflictingRestriction,
                        "rule tail has no instance within the right digit limit");
        }
        rules.insert(std::move(rule));
    }

    SpaceSpec spec;
    spec.name = std::move(name);
    spec.n_parts = n_parts;
    spec.rules.assign(rules.begin(), rules.end());
    spec.left_limit = left_limit;
    spec.right_limit = right_limit;
    return spec;
}

std::size_t SpaceSpec::non_reflexive_count() const {
    return static_cast<std::size_t>(
        std::count_if(rules.begin(), rules.end(),
                      [](const ConnectivityRule& r) { return !r.reflexive; }));
}

std::size_t rule_count(const SpaceSpec& spec) { return spec.non_reflexive_count(); }

bool SpaceSpec::contains(const Address& a) const {
    if (a.max_digit() >= n_parts) return false;
    if (left_limit && a.int_digits().size() > *left_limit) return false;
    if (right_limit) {
        const Tail& t = a.tail();
        if (!(t.per.size() == 1 && t.per[0] == 0)) return false;
        if (t.pre.size() > *right_limit) return false;
    }
    return true;
}

void SpaceSpec::require_member(const Address& a) const {
    if (a.max_digit() >= n_parts)
        throw Error(Errc::DigitOutOfRange,
                    "address digit " + std::to_string(a.max_digit()) + " not below " +
                        std::to_string(n_parts));
    if (!contains(a))
        throw Error(Errc::AddressNotInSpace,
                    "address violates the space's digit restrictions");
}

std::vector<Tail> SpaceSpec::side_tails(Digit head) const {
    std::set<Tail, decltype([](const Tail& a, const Tail& b) { return compare(a, b) < 0; })>
        tails;
    for (const ConnectivityRule& rule : rules) {
        if (rule.left.head == head) tails.insert(rule.left.tail);
        if (rule.right.head == head) tails.insert(rule.right.tail);
    }
    return {tails.begin(), tails.end()};
}

std::string format_rule_side(const RuleSide& side, unsigned n_parts) {
    return format_address(side.to_address(), n_parts);
}

} // namespace nested
