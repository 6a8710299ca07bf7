/* rational.hpp -- exact integer/rational arithmetic (Boost.Multiprecision). */

#ifndef NESTED_RATIONAL_HPP_
#define NESTED_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

namespace nested {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(unsigned base, unsigned exp) {
    BigInt r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace nested

#endif // NESTED_RATIONAL_HPP_
