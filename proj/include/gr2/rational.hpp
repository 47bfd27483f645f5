#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gr2 {

// Exact rational scalar. GMP's mpq_class already maintains the canonical
// form we need (coprime numerator/denominator, positive denominator), so it
// is used directly; the helpers below pin down construction and the textual
// format "p/q" (denominator 1 printed as plain "p").
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

/// Parses "p" or "p/q" with integer p and positive q.
inline Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Integer num(text);
            return Rational(num);
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("denominator must be positive: " + text);
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
}

}  // namespace gr2
