#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace zkpoly {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow2(unsigned e) {
    return BigInt(1) << e;
}

inline bool is_power_of_two(const BigInt& v) {
    return v > 0 && boost::multiprecision::lsb(v) == boost::multiprecision::msb(v);
}

/// 2-adic valuation; v must be nonzero.
inline unsigned v2(const BigInt& v) {
    return boost::multiprecision::lsb(v);
}

}  // namespace zkpoly
