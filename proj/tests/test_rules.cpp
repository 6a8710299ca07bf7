#include "doctest.h"

#include <algorithm>
#include <random>

#include "nested/dsl.hpp"
#include "nested/equivalence.hpp"
#include "nested/error.hpp"
#include "nested/impose.hpp"
#include "nested/space.hpp"
#include "testutil.hpp"

using namespace nested;

namespace {

Address addr(const std::string& text, unsigned n) { return parse_address(text, n); }

std::vector<Address> addrs(std::initializer_list<const char*> texts, unsigned n) {
    std::vector<Address> out;
    for (const char* t : texts) out.push_back(parse_address(t, n));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("canonicalize_rule: common scale anchored at the leading digit") {
    {
        const ConnectivityRule rule =
            canonicalize_rule(addr("0.0(9)", 10), addr("0.1(0)", 10), 10);
        CHECK_FALSE(rule.reflexive);
        CHECK(format_rule_side(rule.left, 10) == "0.(9)");
        CHECK(format_rule_side(rule.right, 10) == "1.(0)");
    }
    {
        const ConnectivityRule rule = canonicalize_rule(addr("0.(1)", 3), addr("1.(0)", 3), 3);
        CHECK(format_rule_side(rule.left, 3) == "0.(1)");
        CHECK(format_rule_side(rule.right, 3) == "1.(0)");
    }
    // Scaled copies canonicalize identically.
    CHECK(canonicalize_rule(addr("0.00(9)", 10), addr("0.01(0)", 10), 10) ==
          canonicalize_rule(addr("0.(9)", 10), addr("1.(0)", 10), 10));
    // Side order is normalized away.
    CHECK(canonicalize_rule(addr("1.(0)", 3), addr("0.(1)", 3), 3) ==
          canonicalize_rule(addr("0.(1)", 3), addr("1.(0)", 3), 3));
}

TEST_CASE("canonicalize_rule: context-carrying pairs are rejected") {
    CHECK_THROWS_AS(canonicalize_rule(addr("20.(1)", 3), addr("21.(0)", 3), 3), Error);
    try {
        canonicalize_rule(addr("20.(1)", 3), addr("21.(0)", 3), 3);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotCanonicalizable);
    }
    // The same pair is still *equivalent* in the gasket: it is an instance
    // of 0.(1) ~ 1.(0) under context digit 2.
    const SpaceSpec gasket = builtin("gasket");
    CHECK(equivalent(addr("20.(1)", 3), addr("21.(0)", 3), gasket) == Relation::Equivalent);
}

TEST_CASE("canonicalize_rule: reflexive declarations keep their part digit") {
    const ConnectivityRule corner = canonicalize_rule(addr("0.(1)", 3), addr("0.(1)", 3), 3);
    CHECK(corner.reflexive);
    CHECK(format_rule_side(corner.left, 3) == "0.(1)");
    const ConnectivityRule wide = canonicalize_rule(addr("10.(1)", 3), addr("10.(1)", 3), 3);
    CHECK(format_rule_side(wide.left, 3) == "1.0(1)");
}

TEST_CASE("one_step: rule application at every matching scale and context") {
    const SpaceSpec line10 = builtin("real_line(10)");
    const SpaceSpec gasket = builtin("gasket");

    CHECK(one_step(addr("0.(9)", 10), line10) == addrs({"1.(0)"}, 10));
    // Context digit 1 above the k=0 instance of 2.(9) ~ 3.(0).
    CHECK(one_step(addr("12.(9)", 10), line10) == addrs({"13.(0)"}, 10));
    CHECK(one_step(addr("0.(21)", 3), gasket).empty());
    // Rule 0.(1) ~ 1.(0) applied at scale -1.
    CHECK(one_step(addr("0.1(0)", 3), gasket) == addrs({"0.0(1)"}, 3));
}

TEST_CASE("one_step: results outside a restricted space are dropped") {
    const SpaceSpec unit2 = builtin("unit_interval(2)");
    // 1.(1) denotes the right endpoint; its unrestricted partner 10.(0)
    // exceeds the one-digit integer limit.
    CHECK(one_step(addr("1.(1)", 2), unit2).empty());
    CHECK(one_step(addr("1.(0)", 2), unit2) == addrs({"0.(1)"}, 2));
}

TEST_CASE("class_members: breadth-first closure") {
    const SpaceSpec line10 = builtin("real_line(10)");
    {
        const EquivalenceClass cls = class_members(addr("1.(0)", 10), line10, 8);
        CHECK(cls.members == addrs({"1.(0)", "0.(9)"}, 10));
        CHECK(cls.representative == addr("0.(9)", 10));
    }
    {
        // Identity relation in a rule-free space.
        const SpaceSpec bare = SpaceSpec::make("bare3", 3, {});
        const EquivalenceClass cls = class_members(addr("0.(21)", 3), bare, 8);
        CHECK(cls.members == addrs({"0.(21)"}, 3));
    }
    {
        const EquivalenceClass cls = class_members(addr("0.1(0)", 3), builtin("gasket"), 8);
        CHECK(cls.members == addrs({"0.1(0)", "0.0(1)"}, 3));
    }
}

TEST_CASE("class_members: budget cap raises") {
    // 0.(0) ~ 1.(0) collapses all powers of N into one unbounded class.
    const SpaceSpec collapse =
        SpaceSpec::make("collapse", 2, {{addr("0.(0)", 2), addr("1.(0)", 2)}});
    CHECK_THROWS_AS(class_members(addr("0.(0)", 2), collapse, 64, 16), Error);
    try {
        class_members(addr("0.(0)", 2), collapse, 64, 16);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ClassBudgetExceeded);
    }
}

TEST_CASE("equivalent: tri-state answers") {
    const SpaceSpec line10 = builtin("real_line(10)");
    const SpaceSpec gasket = builtin("gasket");
    CHECK(equivalent(addr("0.(9)", 10), addr("1.(0)", 10), line10, 8) == Relation::Equivalent);
    CHECK(equivalent(addr("0.(1)", 3), addr("1.(0)", 3), gasket, 8) == Relation::Equivalent);
    CHECK(equivalent(addr("0.(1)", 3), addr("2.(0)", 3), gasket, 8) ==
          Relation::NotFoundUpToDepth);
    CHECK(equivalent(addr("7.(0)", 10), addr("7.(0)", 10), line10, 1) == Relation::Equal);
}

TEST_CASE("witness_chain: rewrite path between equivalent addresses") {
    const SpaceSpec line10 = builtin("real_line(10)");
    const auto chain = witness_chain(addr("0.(9)", 10), addr("1.(0)", 10), line10);
    REQUIRE(chain.has_value());
    CHECK(chain->front() == addr("0.(9)", 10));
    CHECK(chain->back() == addr("1.(0)", 10));
    CHECK_FALSE(witness_chain(addr("1.(0)", 10), addr("2.(0)", 10), line10).has_value());
}

TEST_CASE("rule_count: non-reflexive canonical rules") {
    CHECK(rule_count(builtin("real_line(10)")) == 9);
    CHECK(rule_count(builtin("gasket")) == 3);
    CHECK(rule_count(builtin("cantor")) == 0);
}

TEST_CASE("one_step symmetry over random addresses") {
    std::mt19937 rng(7101);
    for (const char* name : {"real_line(2)", "real_line(3)", "real_line(10)", "gasket",
                             "cantor", "unit_interval(2)", "gasket_compact"}) {
        const SpaceSpec spec = builtin(name);
        for (int iter = 0; iter < 120; ++iter) {
            const Address a = testutil::random_member(rng, spec);
            for (const Address& b : one_step(a, spec)) {
                const auto back = one_step(b, spec);
                CHECK(std::binary_search(back.begin(), back.end(), a));
            }
        }
    }
}

TEST_CASE("closure saturates to a fixpoint on builtins") {
    std::mt19937 rng(7102);
    for (const char* name : {"real_line(3)", "gasket", "cantor"}) {
        const SpaceSpec spec = builtin(name);
        for (int iter = 0; iter < 80; ++iter) {
            const EquivalenceClass cls =
                class_members(testutil::random_member(rng, spec), spec, 16);
            for (const Address& m : cls.members)
                for (const Address& next : one_step(m, spec))
                    CHECK(std::binary_search(cls.members.begin(), cls.members.end(), next));
        }
    }
}

TEST_CASE("scaling preserves equivalence") {
    std::mt19937 rng(7103);
    std::uniform_int_distribution<long> kdist(-6, 6);
    for (const char* name : {"real_line(2)", "real_line(10)", "gasket"}) {
        const SpaceSpec spec = builtin(name);
        for (int iter = 0; iter < 150; ++iter) {
            const auto [a, b] = testutil::random_equivalent_pair(rng, spec);
            const long k = kdist(rng);
            CHECK(equivalent(scale(a, k), scale(b, k), spec) != Relation::NotFoundUpToDepth);
        }
    }
}

TEST_CASE("real-line oracle: equivalent addresses have equal exact values") {
    std::mt19937 rng(7104);
    for (unsigned n : {2u, 3u, 10u}) {
        const SpaceSpec spec = builtin("real_line(" + std::to_string(n) + ")");
        for (const ConnectivityRule& rule : spec.rules) {
            if (rule.reflexive) continue;
            for (long k = -4; k <= 4; ++k) {
                // Random context above the instance: digits at positions > k.
                const Address context =
                    scale(Address(testutil::random_digits(rng, n, 3), Tail::zero()), k + 1);
                const Address left = impose_member(context, scale(rule.left.to_address(), k));
                const Address right = impose_member(context, scale(rule.right.to_address(), k));
                CHECK(eval_exact(left, n) == eval_exact(right, n));
                CHECK(equivalent(left, right, spec) != Relation::NotFoundUpToDepth);
            }
        }
    }
}

TEST_CASE("equivalence respects exact values throughout the closure (real line)") {
    std::mt19937 rng(7105);
    for (unsigned n : {2u, 10u}) {
        const SpaceSpec spec = builtin("real_line(" + std::to_string(n) + ")");
        for (int iter = 0; iter < 120; ++iter) {
            const Address a = testutil::random_member(rng, spec);
            const Rational value = eval_exact(a, n);
            for (const Address& m : class_members(a, spec).members)
                CHECK(eval_exact(m, n) == value);
        }
    }
}
