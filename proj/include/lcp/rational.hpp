// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcp {

/// Exact accuracy value kept as correct/total so ranking ties never depend on
/// float rounding. Denominator must stay positive; 0/0-style values are
/// rejected everywhere a score is constructed.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
};

inline bool operator==(const Rational& a, const Rational& b) {
    return a.num * b.den == b.num * a.den;
}
inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
inline bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
}
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
inline bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

/// Integer percentage with ties rounding up (0.755 -> 76).
inline int to_percent(const Rational& r) {
    if (r.den <= 0) throw std::invalid_argument("to_percent: non-positive denominator");
    // floor((200*num + den) / (2*den)) == round-half-up of 100*num/den
    return static_cast<int>((200 * r.num + r.den) / (2 * r.den));
}

inline std::string to_string(const Rational& r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace lcp
