#include "doctest.h"

#include <random>

#include "nested/dsl.hpp"
#include "nested/impose.hpp"
#include "testutil.hpp"

using namespace nested;

namespace {

Address addr(const std::string& text, unsigned n) { return parse_address(text, n); }

std::vector<Address> class_reps(const ImposedSet& s) {
    std::vector<Address> reps;
    for (const auto& cls : s.classes) reps.push_back(cls.representative);
    return reps;
}

} // namespace

TEST_CASE("impose_member: positionwise digit fill") {
    CHECK(impose_member(addr("10.(0)", 2), addr("1.(0)", 2)) == addr("11.(0)", 2));
    CHECK(impose_member(addr("1.(0)", 2), addr("1.(0)", 2)) == addr("1.(0)", 2));
    CHECK(impose_member(addr("0.(1)", 2), addr("1.(0)", 2)) == addr("1.(1)", 2));
    // Periodic tails filled over the lcm of the periods:
    // 2,0,2,0,2,0,... over 0,0,2,0,0,2,... gives 2,0,2,0,2,2 repeating.
    CHECK(impose_member(addr("0.(20)", 3), addr("0.(002)", 3)) == addr("0.(202022)", 3));
}

TEST_CASE("impose_member: literal fill law on random pairs") {
    std::mt19937 rng(7201);
    for (int iter = 0; iter < 300; ++iter) {
        const Address A = testutil::random_address(rng, 4);
        const Address B = testutil::random_address(rng, 4);
        const Address r = impose_member(A, B);
        for (long i = -20; i <= 20; ++i) {
            const Digit expected = A.digit_at(i) != 0 ? A.digit_at(i) : B.digit_at(i);
            CHECK(r.digit_at(i) == expected);
        }
    }
}

TEST_CASE("impose: classes over the product of two closures") {
    const SpaceSpec line2 = builtin("real_line(2)");
    {
        // 2 |> 1 contains 3: disjoint digit supports add exactly.
        const ImposedSet s = impose(addr("10.(0)", 2), addr("1.(0)", 2), line2);
        bool found = false;
        for (const auto& cls : s.classes)
            for (const Address& m : cls.members)
                if (m == addr("11.(0)", 2)) found = true;
        CHECK(found);
        // Values of the two classes, checked against exact evaluation.
        REQUIRE(s.classes.size() == 2);
        CHECK(eval_exact(s.classes[0].representative, 2) == Rational(2));
        CHECK(eval_exact(s.classes[1].representative, 2) == Rational(3));
    }
    {
        // Overlapping non-zero digits block the carry in some combinations:
        // 1 |> 1 yields the values 1 and 2.
        const ImposedSet s = impose(addr("1.(0)", 2), addr("1.(0)", 2), line2);
        REQUIRE(s.classes.size() == 2);
        CHECK(eval_exact(s.classes[0].representative, 2) == Rational(1));
        CHECK(eval_exact(s.classes[1].representative, 2) == Rational(2));
        bool has_two = false;
        bool has_one = false;
        for (const auto& cls : s.classes)
            for (const Address& m : cls.members) {
                if (m == addr("10.(0)", 2)) has_two = true;
                if (m == addr("1.(0)", 2)) has_one = true;
            }
        CHECK(has_two);
        CHECK(has_one);
    }
}

TEST_CASE("impose: zero is the identity") {
    std::mt19937 rng(7202);
    for (const char* name : {"real_line(2)", "real_line(10)", "gasket", "cantor"}) {
        const SpaceSpec spec = builtin(name);
        for (int iter = 0; iter < 60; ++iter) {
            const Address a = testutil::random_member(rng, spec);
            const ImposedSet s = impose(a, Address(), spec);
            const EquivalenceClass expected = class_members(a, spec);
            REQUIRE(s.classes.size() == 1);
            CHECK(s.classes[0] == expected);
        }
    }
}

TEST_CASE("impose: raw members and classes are consistent") {
    std::mt19937 rng(7203);
    const SpaceSpec gasket = builtin("gasket");
    for (int iter = 0; iter < 40; ++iter) {
        const Address a = testutil::random_member(rng, gasket, 2, 2, 2);
        const Address b = testutil::random_member(rng, gasket, 2, 2, 2);
        const ImposedSet s = impose(a, b, gasket);
        // Every raw member appears in exactly one class.
        for (const Address& r : s.raw) {
            std::size_t hits = 0;
            for (const auto& cls : s.classes)
                hits += static_cast<std::size_t>(
                    std::binary_search(cls.members.begin(), cls.members.end(), r));
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("imposition is class-invariant in its first argument") {
    std::mt19937 rng(7204);
    for (const char* name : {"real_line(2)", "real_line(10)", "gasket"}) {
        const SpaceSpec spec = builtin(name);
        for (int iter = 0; iter < 60; ++iter) {
            const auto [a, b] = testutil::random_equivalent_pair(rng, spec);
            const Address c = testutil::random_member(rng, spec);
            CHECK(class_reps(impose(a, c, spec)) == class_reps(impose(b, c, spec)));
        }
    }
}

TEST_CASE("disjoint supports add exactly on the real line") {
    std::mt19937 rng(7205);
    for (unsigned n : {2u, 3u, 10u}) {
        for (int iter = 0; iter < 150; ++iter) {
            // A carries only integer digits, B only fractional ones.
            const Address A(testutil::random_digits(rng, n, 4), Tail::zero());
            const Address B({}, Tail::make(testutil::random_digits(rng, n, 2),
                                           testutil::random_digits(rng, n, 3)));
            const Address r = impose_member(A, B);
            CHECK(eval_exact(r, n) == eval_exact(A, n) + eval_exact(B, n));
        }
    }
}
