#include "nested/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "nested/error.hpp"

namespace nested {

namespace {

// Depth (>= 0) of the first non-zero digit of a side counted from its
// head position; nullopt for the all-zero side.
std::optional<long> side_anchor_depth(const RuleSide& side) {
    if (side.head != 0) return 0;
    if (auto d = side.tail.first_nonzero_depth()) return static_cast<long>(*d);
    return std::nullopt;
}

// Does `a` spell `side` from position k downward (all i <= k)?
// Both digit sequences are eventually periodic, so agreement over one
// lcm window past both preperiods decides the infinite comparison.
bool matches_at(const Address& a, const RuleSide& side, long k) {
    const long la = static_cast<long>(a.tail().pre.size());
    const long pa = static_cast<long>(a.tail().per.size());
    const long ls = static_cast<long>(side.tail.pre.size());
    const long ps = static_cast<long>(side.tail.per.size());
    const long window = std::lcm(pa, ps);
    const long floor = std::min(-la, k - ls) - window;
    for (long i = k; i >= floor; --i)
        if (a.digit_at(i) != side.digit_rel(i - k)) return false;
    return true;
}

// The address agreeing with `a` above position k and spelling `side`
// from k downward.
Address splice(const Address& a, long k, const RuleSide& side) {
    if (k >= 0) {
        std::vector<Digit> int_digits;
        const long top = std::max<long>(static_cast<long>(a.int_digits().size()) - 1, k);
        for (long i = top; i > k; --i) int_digits.push_back(a.digit_at(i));
        int_digits.push_back(side.head);
        for (long i = k - 1; i >= 0; --i)
            int_digits.push_back(side.tail.digit(static_cast<std::size_t>(k - i)));
        return Address(std::move(int_digits), side.tail.drop(static_cast<std::size_t>(k)));
    }
    std::vector<Digit> pre;
    for (long depth = 1; depth < -k; ++depth)
        pre.push_back(a.tail().digit(static_cast<std::size_t>(depth)));
    pre.push_back(side.head);
    pre.insert(pre.end(), side.tail.pre.begin(), side.tail.pre.end());
    return Address(a.int_digits(), Tail::make(std::move(pre), side.tail.per));
}

// Applies `from` -> `to` at every matching scale, collecting results that
// stay inside the space.
void apply_side(const Address& a, const RuleSide& from, const RuleSide& to,
                const SpaceSpec& spec, std::set<Address>& out) {
    const long la = static_cast<long>(a.tail().pre.size());
    const long pa = static_cast<long>(a.tail().per.size());
    const long lf = static_cast<long>(from.tail.pre.size());
    const long pf = static_cast<long>(from.tail.per.size());

    const auto anchor = side_anchor_depth(from);
    const auto high = a.highest_nonzero();
    long k_hi;
    if (anchor && high) {
        // A non-zero side digit must land on a non-zero digit of `a`.
        k_hi = *high + *anchor;
    } else if (!anchor) {
        // All-zero side: `a` must be zero from k downward.
        k_hi = high ? *high : lf + pf;
    } else {
        return; // non-zero side cannot match the zero address
    }
    const long k_lo = -(la + pa + lf + pf + std::lcm(pa, pf) + 2);

    for (long k = k_hi; k >= k_lo; --k) {
        if (!matches_at(a, from, k)) continue;
        Address b = splice(a, k, to);
        if (b != a && spec.contains(b)) out.insert(std::move(b));
    }
}

} // namespace

std::vector<Address> one_step(const Address& a, const SpaceSpec& spec) {
    spec.require_member(a);
    std::set<Address> out;
    for (const ConnectivityRule& rule : spec.rules) {
        if (rule.reflexive) continue;
        apply_side(a, rule.left, rule.right, spec, out);
        apply_side(a, rule.right, rule.left, spec, out);
    }
    return {out.begin(), out.end()};
}

namespace {

struct Closure {
    std::vector<Address> bfs_order;
    std::map<Address, Address> parent; // excludes the root
};

Closure closure_bfs(const Address& a, const SpaceSpec& spec, std::size_t depth,
                    std::size_t cap, const Address* stop_at) {
    Closure c;
    std::set<Address> seen{a};
    c.bfs_order.push_back(a);
    std::deque<Address> frontier{a};
    for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
        std::deque<Address> next;
        for (const Address& current : frontier) {
            for (Address& b : one_step(current, spec)) {
                if (seen.count(b)) continue;
                if (seen.size() + 1 > cap)
                    throw Error(Errc::ClassBudgetExceeded,
                                "equivalence class exceeds " + std::to_string(cap) +
                                    " members");
                seen.insert(b);
                c.bfs_order.push_back(b);
                c.parent.emplace(b, current);
                if (stop_at && b == *stop_at) return c;
                next.push_back(std::move(b));
            }
        }
        frontier = std::move(next);
    }
    return c;
}

} // namespace

std::vector<Address> class_bfs_order(const Address& a, const SpaceSpec& spec,
                                     std::size_t depth, std::size_t cap) {
    return closure_bfs(a, spec, depth, cap, nullptr).bfs_order;
}

EquivalenceClass class_members(const Address& a, const SpaceSpec& spec, std::size_t depth,
                               std::size_t cap) {
    Closure c = closure_bfs(a, spec, depth, cap, nullptr);
    EquivalenceClass cls;
    cls.members = std::move(c.bfs_order);
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    return cls;
}

const char* relation_name(Relation r) {
    switch (r) {
    case Relation::Equal: return "Equal";
    case Relation::Equivalent: return "Equivalent";
    case Relation::NotFoundUpToDepth: return "NotFoundUpToDepth";
    }
    return "?";
}

Relation equivalent(const Address& a, const Address& b, const SpaceSpec& spec,
                    std::size_t depth, std::size_t cap) {
    if (a == b) {
        spec.require_member(a);
        return Relation::Equal;
    }
    spec.require_member(b);
    Closure c = closure_bfs(a, spec, depth, cap, &b);
    return c.parent.count(b) ? Relation::Equivalent : Relation::NotFoundUpToDepth;
}

std::optional<std::vector<Address>> witness_chain(const Address& a, const Address& b,
                                                  const SpaceSpec& spec, std::size_t depth,
                                                  std::size_t cap) {
    if (a == b) {
        spec.require_member(a);
        return std::vector<Address>{a};
    }
    spec.require_member(b);
    Closure c = closure_bfs(a, spec, depth, cap, &b);
    if (!c.parent.count(b)) return std::nullopt;
    std::vector<Address> chain{b};
    Address current = b;
    while (current != a) {
        current = c.parent.at(current);
        chain.push_back(current);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

} // namespace nested
