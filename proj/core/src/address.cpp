#include "nested/address.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "nested/error.hpp"

namespace nested {

namespace {

// Shortest word whose repetition spells `per`.
std::vector<Digit> primitive_root(const std::vector<Digit>& per) {
    const std::size_t n = per.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = per[i] == per[i % d];
        if (ok) return {per.begin(), per.begin() + static_cast<long>(d)};
    }
    return per; // unreachable
}

std::size_t lcm_size(std::size_t a, std::size_t b) { return std::lcm(a, b); }

} // namespace

Tail Tail::make(std::vector<Digit> pre, std::vector<Digit> per) {
    if (per.empty()) per.push_back(0);
    per = primitive_root(per);
    // Absorb preperiod digits that already continue the period: rotating
    // the period right by one shifts its phase to swallow pre.back().
    while (!pre.empty() && pre.back() == per.back()) {
        std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
        pre.pop_back();
    }
    Tail t;
    t.pre = std::move(pre);
    t.per = std::move(per);
    return t;
}

Tail Tail::drop(std::size_t count) const {
    if (count <= pre.size())
        return Tail::make({pre.begin() + static_cast<long>(count), pre.end()}, per);
    const std::size_t shift = (count - pre.size()) % per.size();
    std::vector<Digit> rotated(per.begin() + static_cast<long>(shift), per.end());
    rotated.insert(rotated.end(), per.begin(), per.begin() + static_cast<long>(shift));
    return Tail::make({}, std::move(rotated));
}

Digit Tail::max_digit() const {
    Digit m = 0;
    for (Digit d : pre) m = std::max(m, d);
    for (Digit d : per) m = std::max(m, d);
    return m;
}

std::optional<std::size_t> Tail::first_nonzero_depth() const {
    for (std::size_t i = 0; i < pre.size(); ++i)
        if (pre[i] != 0) return i + 1;
    for (std::size_t i = 0; i < per.size(); ++i)
        if (per[i] != 0) return pre.size() + i + 1;
    return std::nullopt;
}

int compare(const Tail& a, const Tail& b) {
    if (a == b) return 0;
    // Distinct normal forms must differ within the shared periodic window.
    const std::size_t window =
        std::max(a.pre.size(), b.pre.size()) + lcm_size(a.per.size(), b.per.size());
    for (std::size_t depth = 1; depth <= window; ++depth) {
        const Digit da = a.digit(depth);
        const Digit db = b.digit(depth);
        if (da != db) return da < db ? -1 : 1;
    }
    assert(false && "distinct normal forms agree on the deciding window");
    return 0;
}

Address::Address(std::vector<Digit> int_digits, Tail tail) : tail_(std::move(tail)) {
    auto first = std::find_if(int_digits.begin(), int_digits.end(),
                              [](Digit d) { return d != 0; });
    int_.assign(first, int_digits.end());
    tail_ = Tail::make(tail_.pre, tail_.per);
}

std::optional<long> Address::highest_nonzero() const {
    if (!int_.empty()) return static_cast<long>(int_.size()) - 1;
    if (auto depth = tail_.first_nonzero_depth()) return -static_cast<long>(*depth);
    return std::nullopt;
}

std::optional<long> Address::lowest_nonzero() const {
    // Non-zero period: non-zero digits recur arbitrarily deep.
    bool per_zero = tail_.per.size() == 1 && tail_.per[0] == 0;
    if (!per_zero) return std::nullopt;
    for (std::size_t i = tail_.pre.size(); i-- > 0;)
        if (tail_.pre[i] != 0) return -static_cast<long>(i + 1);
    for (std::size_t i = int_.size(); i-- > 0;)
        if (int_[i] != 0) return static_cast<long>(int_.size() - 1 - i);
    return std::nullopt;
}

Digit Address::max_digit() const {
    Digit m = tail_.max_digit();
    for (Digit d : int_) m = std::max(m, d);
    return m;
}

int compare(const Address& a, const Address& b) {
    if (a.int_digits().size() != b.int_digits().size())
        return a.int_digits().size() < b.int_digits().size() ? -1 : 1;
    for (std::size_t i = 0; i < a.int_digits().size(); ++i) {
        const Digit da = a.int_digits()[i];
        const Digit db = b.int_digits()[i];
        if (da != db) return da < db ? -1 : 1;
    }
    return compare(a.tail(), b.tail());
}

// -- digit text encoding ------------------------------------------------------

namespace {

constexpr unsigned kCharEncodingMax = 36;

int char_digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

char digit_char(Digit d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
}

std::vector<Digit> parse_digitseq(std::string_view seq, unsigned n_parts,
                                  std::string_view whole) {
    if (seq.empty())
        throw Error(Errc::MalformedLiteral, "empty digit sequence in '" + std::string(whole) + "'");
    std::vector<Digit> out;
    if (n_parts <= kCharEncodingMax) {
        for (char c : seq) {
            const int v = char_digit_value(c);
            if (v < 0)
                throw Error(Errc::MalformedLiteral,
                            "invalid digit character '" + std::string(1, c) + "' in '" +
                                std::string(whole) + "'");
            if (static_cast<unsigned>(v) >= n_parts)
                throw Error(Errc::DigitOutOfRange,
                            "digit " + std::to_string(v) + " not below " + std::to_string(n_parts));
            out.push_back(static_cast<Digit>(v));
        }
        return out;
    }
    // Colon-separated decimal digit values.
    std::size_t start = 0;
    while (start <= seq.size()) {
        std::size_t end = seq.find(':', start);
        if (end == std::string_view::npos) end = seq.size();
        std::string_view part = seq.substr(start, end - start);
        if (part.empty())
            throw Error(Errc::MalformedLiteral, "empty digit value in '" + std::string(whole) + "'");
        unsigned long v = 0;
        for (char c : part) {
            if (c < '0' || c > '9')
                throw Error(Errc::MalformedLiteral,
                            "invalid digit character '" + std::string(1, c) + "' in '" +
                                std::string(whole) + "'");
            v = v * 10 + static_cast<unsigned long>(c - '0');
            if (v > 0xFFFFFFFFul)
                throw Error(Errc::DigitOutOfRange, "digit value overflow in '" + std::string(whole) + "'");
        }
        if (v >= n_parts)
            throw Error(Errc::DigitOutOfRange,
                        "digit " + std::to_string(v) + " not below " + std::to_string(n_parts));
        out.push_back(static_cast<Digit>(v));
        if (end == seq.size()) break;
        start = end + 1;
    }
    return out;
}

void check_digits(const std::vector<Digit>& digits, unsigned n_parts) {
    for (Digit d : digits)
        if (d >= n_parts)
            throw Error(Errc::DigitOutOfRange,
                        "digit " + std::to_string(d) + " not below " + std::to_string(n_parts));
}

} // namespace

std::vector<Digit> parse_digits(std::string_view text, unsigned n_parts) {
    return parse_digitseq(text, n_parts, text);
}

std::string format_digits(const std::vector<Digit>& digits, unsigned n_parts) {
    std::string out;
    if (n_parts <= kCharEncodingMax) {
        for (Digit d : digits) out.push_back(digit_char(d));
        return out;
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out.push_back(':');
        out += std::to_string(digits[i]);
    }
    return out;
}

Address parse_address(std::string_view text, unsigned n_parts) {
    const std::string whole(text);
    const std::size_t dot = text.find('.');
    if (dot == std::string_view::npos)
        throw Error(Errc::MalformedLiteral, "missing '.' in '" + whole + "'");
    if (text.find('.', dot + 1) != std::string_view::npos)
        throw Error(Errc::MalformedLiteral, "multiple '.' in '" + whole + "'");
    std::string_view intpart = text.substr(0, dot);
    std::string_view fracpart = text.substr(dot + 1);
    if (intpart.find('(') != std::string_view::npos ||
        intpart.find(')') != std::string_view::npos)
        throw Error(Errc::MalformedLiteral,
                    "period in integer part of '" + whole + "' (integer parts are finite)");
    const std::size_t open = fracpart.find('(');
    if (open == std::string_view::npos || fracpart.empty() || fracpart.back() != ')')
        throw Error(Errc::MalformedLiteral, "missing (period) in '" + whole + "'");
    std::string_view preseq = fracpart.substr(0, open);
    std::string_view perseq = fracpart.substr(open + 1, fracpart.size() - open - 2);
    if (perseq.find('(') != std::string_view::npos ||
        perseq.find(')') != std::string_view::npos)
        throw Error(Errc::MalformedLiteral, "nested parentheses in '" + whole + "'");
    std::vector<Digit> int_digits = parse_digitseq(intpart, n_parts, whole);
    std::vector<Digit> pre;
    if (!preseq.empty()) pre = parse_digitseq(preseq, n_parts, whole);
    std::vector<Digit> per = parse_digitseq(perseq, n_parts, whole);
    return Address(std::move(int_digits), Tail::make(std::move(pre), std::move(per)));
}

std::string format_address(const Address& a, unsigned n_parts) {
    check_digits(a.int_digits(), n_parts);
    std::string out = a.int_digits().empty() ? std::string("0")
                                             : format_digits(a.int_digits(), n_parts);
    out.push_back('.');
    out += format_word(a.tail(), n_parts);
    return out;
}

Tail parse_word(std::string_view text, unsigned n_parts) {
    const std::string whole(text);
    const std::size_t open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')')
        throw Error(Errc::MalformedLiteral, "missing (period) in word '" + whole + "'");
    std::string_view preseq = text.substr(0, open);
    std::string_view perseq = text.substr(open + 1, text.size() - open - 2);
    std::vector<Digit> pre;
    if (!preseq.empty()) pre = parse_digitseq(preseq, n_parts, whole);
    std::vector<Digit> per = parse_digitseq(perseq, n_parts, whole);
    return Tail::make(std::move(pre), std::move(per));
}

std::string format_word(const Tail& t, unsigned n_parts) {
    std::string out = format_digits(t.pre, n_parts);
    out.push_back('(');
    out += format_digits(t.per, n_parts);
    out.push_back(')');
    return out;
}

// -- operations ---------------------------------------------------------------

Address scale(const Address& a, long k) {
    if (k == 0) return a;
    if (k > 0) {
        std::vector<Digit> int_digits = a.int_digits();
        for (long depth = 1; depth <= k; ++depth)
            int_digits.push_back(a.tail().digit(static_cast<std::size_t>(depth)));
        return Address(std::move(int_digits), a.tail().drop(static_cast<std::size_t>(k)));
    }
    const std::size_t m = static_cast<std::size_t>(-k);
    std::vector<Digit> pre;
    pre.reserve(m + a.tail().pre.size());
    for (long pos = static_cast<long>(m) - 1; pos >= 0; --pos)
        pre.push_back(a.digit_at(pos));
    pre.insert(pre.end(), a.tail().pre.begin(), a.tail().pre.end());
    std::vector<Digit> int_digits;
    if (a.int_digits().size() > m)
        int_digits.assign(a.int_digits().begin(),
                          a.int_digits().end() - static_cast<long>(m));
    return Address(std::move(int_digits), Tail::make(std::move(pre), a.tail().per));
}

Rational eval_exact(const Address& a, unsigned n_parts) {
    const BigInt n = n_parts;
    BigInt int_value = 0;
    for (Digit d : a.int_digits()) int_value = int_value * n + d;
    BigInt pre_value = 0;
    for (Digit d : a.tail().pre) pre_value = pre_value * n + d;
    BigInt per_value = 0;
    for (Digit d : a.tail().per) per_value = per_value * n + d;
    const BigInt per_denom = ipow(n_parts, static_cast<unsigned>(a.tail().per.size())) - 1;
    const BigInt pre_denom = ipow(n_parts, static_cast<unsigned>(a.tail().pre.size()));
    Rational frac = Rational(pre_value) + Rational(per_value) / Rational(per_denom);
    frac /= Rational(pre_denom);
    return Rational(int_value) + frac;
}

ChartPair to_pair(const Address& a) {
    ChartPair p;
    p.n = a.int_digits().empty() ? 0 : a.int_digits().size() - 1;
    std::vector<Digit> pre = a.int_digits().empty() ? std::vector<Digit>{0} : a.int_digits();
    pre.insert(pre.end(), a.tail().pre.begin(), a.tail().pre.end());
    p.omega = Tail::make(std::move(pre), a.tail().per);
    return p;
}

Address from_pair(const ChartPair& p) {
    std::vector<Digit> int_digits;
    int_digits.reserve(p.n + 1);
    for (std::size_t k = 0; k <= p.n; ++k)
        int_digits.push_back(p.omega.digit(k + 1));
    return Address(std::move(int_digits), p.omega.drop(p.n + 1));
}

} // namespace nested
