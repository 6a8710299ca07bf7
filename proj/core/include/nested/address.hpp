/* address.hpp -- base-N double-sided digit sequences with eventually
 * periodic fractional tails, and the exact operations on them.
 */

#ifndef NESTED_ADDRESS_HPP_
#define NESTED_ADDRESS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nested/rational.hpp"

namespace nested {

/// A single base-N digit value. Validity against the ambient part count N
/// is enforced at the parsing and space boundaries, not per digit.
using Digit = unsigned;

/// A right-infinite digit word stored as preperiod + repeating period.
///
/// Normal form: the period is primitive (not the repetition of a shorter
/// word) and the preperiod is minimal (its last digit differs from the
/// period digit that would absorb it). The all-zero word is pre=[] per=[0].
/// make() always normalizes, so word equality is structural equality.
struct Tail {
    std::vector<Digit> pre;
    std::vector<Digit> per;

    static Tail make(std::vector<Digit> pre, std::vector<Digit> per);
    static Tail zero() { return Tail{{}, std::vector<Digit>{0}}; }

    /// Digit at depth >= 1 (the word's 0-based index depth-1).
    Digit digit(std::size_t depth) const {
        if (depth <= pre.size()) return pre[depth - 1];
        return per[(depth - pre.size() - 1) % per.size()];
    }

    /// The word with its first `count` digits removed (still normal form).
    Tail drop(std::size_t count) const;

    bool is_zero() const { return pre.empty() && per.size() == 1 && per[0] == 0; }
    Digit max_digit() const;
    /// Depth of the first non-zero digit, or nullopt for the zero word.
    std::optional<std::size_t> first_nonzero_depth() const;

    friend bool operator==(const Tail&, const Tail&) = default;
};

/// Lexicographic comparison of the underlying infinite words.
int compare(const Tail& a, const Tail& b);

/// One coordinate of the base-N number space: finitely many integer
/// digits (most significant first, no leading zero; empty means 0) and an
/// eventually periodic fractional tail. Instances are immutable and
/// always in normal form, so denoting the same digit sequence is the same
/// as structural equality.
class Address {
public:
    Address() : tail_(Tail::zero()) {}
    Address(std::vector<Digit> int_digits, Tail tail);

    const std::vector<Digit>& int_digits() const { return int_; }
    const Tail& tail() const { return tail_; }

    /// Digit p_i of the double-sided sequence ...p1 p0 . p-1 p-2...
    Digit digit_at(long position) const {
        if (position >= 0) {
            const auto len = static_cast<long>(int_.size());
            if (position >= len) return 0;
            return int_[static_cast<std::size_t>(len - 1 - position)];
        }
        return tail_.digit(static_cast<std::size_t>(-position));
    }

    bool is_zero() const { return int_.empty() && tail_.is_zero(); }

    /// Position of the highest non-zero digit; nullopt for the zero address.
    std::optional<long> highest_nonzero() const;

    /// Position of the lowest non-zero digit. nullopt when there is none
    /// (zero address) or when non-zero digits recur arbitrarily deep
    /// (non-zero period).
    std::optional<long> lowest_nonzero() const;

    Digit max_digit() const;

    friend bool operator==(const Address&, const Address&) = default;

private:
    std::vector<Digit> int_;
    Tail tail_;
};

/// Total order: integer-part length, then integer digits, then tail.
/// Consistent with equality; used for class representatives.
int compare(const Address& a, const Address& b);
inline bool operator<(const Address& a, const Address& b) { return compare(a, b) < 0; }

/// Chart coordinate (n, omega): chart index plus a right-infinite word,
/// with omega_k = omega.digit(k + 1).
struct ChartPair {
    std::size_t n = 0;
    Tail omega = Tail::zero();

    friend bool operator==(const ChartPair&, const ChartPair&) = default;
};

// -- digit text encoding ----------------------------------------------------
//
// For N <= 36 a digit is one character 0-9 a-z; for larger N digits are
// decimal values joined by ':' within a digit sequence.

std::string format_digits(const std::vector<Digit>& digits, unsigned n_parts);

/// Decode one digit sequence (no '.', '(' or ')'). Leading zeros are kept.
std::vector<Digit> parse_digits(std::string_view text, unsigned n_parts);

/// Grammar: intpart "." preperiod? "(" period ")". No whitespace.
/// Throws MalformedLiteral / DigitOutOfRange.
Address parse_address(std::string_view text, unsigned n_parts);

/// Canonical rendering; parse_address(format_address(a, N), N) == a.
std::string format_address(const Address& a, unsigned n_parts);

/// Right-infinite word literal: preperiod? "(" period ")".
Tail parse_word(std::string_view text, unsigned n_parts);
std::string format_word(const Tail& t, unsigned n_parts);

// -- operations --------------------------------------------------------------

/// Multiplication by N^k: digit_at(result, i) == digit_at(a, i - k).
Address scale(const Address& a, long k);

/// The exact rational value sum_i digit_at(a, i) * N^i.
Rational eval_exact(const Address& a, unsigned n_parts);

/// Chart extraction: n is the position of the highest non-zero digit (0 if
/// none) and omega_k = p_{n-k}.
ChartPair to_pair(const Address& a);

/// Chart interpretation: p_{n-k} = omega_k and p_j = 0 for j > n.
/// from_pair(to_pair(a)) == a; the reverse composition is not the identity
/// when omega starts with zeros.
Address from_pair(const ChartPair& p);

} // namespace nested

#endif // NESTED_ADDRESS_HPP_
