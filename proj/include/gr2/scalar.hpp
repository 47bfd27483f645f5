#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "gr2/rational.hpp"

namespace gr2 {

/// Element of Q(i), the field all plane entries and Plucker coordinates
/// live in. Every operation is exact.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(long re) : re_(make_rational(re)), im_(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long re, long im) : re_(make_rational(re)), im_(make_rational(im)) {}

    static GaussianRational unit_i() { return {make_rational(0), make_rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conjugate() const { return {re_, Rational(-im_)}; }

    /// re^2 + im^2, a nonnegative Rational.
    Rational norm_sq() const { return Rational(re_ * re_ + im_ * im_); }

    GaussianRational operator-() const { return {Rational(-re_), Rational(-im_)}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re_ + b.re_), Rational(a.im_ + b.im_)};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re_ - b.re_), Rational(a.im_ - b.im_)};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re_ * b.re_ - a.im_ * b.im_), Rational(a.re_ * b.im_ + a.im_ * b.re_)};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero in Q(i)");
        const Rational n = b.norm_sq();
        const GaussianRational num = a * b.conjugate();
        return {Rational(num.re_ / n), Rational(num.im_ / n)};
    }

    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero in Q(i)");
        const Rational n = norm_sq();
        return {Rational(re_ / n), Rational(-im_ / n)};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Total order for use as map keys; not an arithmetic order.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        const int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    /// Textual form "p/q", "p/q+r/s*i" or "r/s*i"; "/1" is omitted.
    std::string to_string() const;

    /// Inverse of to_string; also accepts "i", "-i" and "a-b*i" spellings.
    static GaussianRational from_string(const std::string& text);

private:
    Rational re_;
    Rational im_;
};

/// Point of the projective line over Q(i), kept in canonical form:
/// (z, 1) for finite points and (1, 0) for the point at infinity.
class ProjectivePoint {
public:
    ProjectivePoint(const GaussianRational& a, const GaussianRational& b) {
        if (a.is_zero() && b.is_zero())
            throw std::invalid_argument("projective point needs a nonzero coordinate");
        if (b.is_zero()) {
            first_ = GaussianRational(1);
            second_ = GaussianRational(0);
        } else {
            first_ = a / b;
            second_ = GaussianRational(1);
        }
    }

    static ProjectivePoint infinity() { return ProjectivePoint(GaussianRational(1), GaussianRational(0)); }
    static ProjectivePoint zero() { return ProjectivePoint(GaussianRational(0), GaussianRational(1)); }
    static ProjectivePoint one() { return ProjectivePoint(GaussianRational(1), GaussianRational(1)); }
    static ProjectivePoint finite(const GaussianRational& z) {
        return ProjectivePoint(z, GaussianRational(1));
    }

    const GaussianRational& first() const { return first_; }
    const GaussianRational& second() const { return second_; }

    bool is_infinity() const { return second_.is_zero(); }
    bool is_finite() const { return !is_infinity(); }

    /// Affine coordinate; throws at infinity.
    const GaussianRational& affine() const {
        if (is_infinity()) throw std::domain_error("affine coordinate of the point at infinity");
        return first_;
    }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.first_ == b.first_ && a.second_ == b.second_;
    }
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
        if (a.is_infinity() != b.is_infinity()) return b.is_infinity();
        return a.first_ < b.first_;
    }

    /// "inf" for the point at infinity, otherwise the affine coordinate.
    std::string to_string() const { return is_infinity() ? "inf" : first_.to_string(); }

    static ProjectivePoint from_string(const std::string& text) {
        if (text == "inf") return infinity();
        return finite(GaussianRational::from_string(text));
    }

private:
    ProjectivePoint() : first_(1), second_(0) {}
    GaussianRational first_;
    GaussianRational second_;
};

/// Finite-support Laurent polynomial in one parameter t over Q(i).
/// Carrier for one-parameter degeneration families; sums and products are
/// computed exactly before any valuation is read off, so cancellation is
/// never missed.
class LaurentScalar {
public:
    LaurentScalar() = default;
    LaurentScalar(const GaussianRational& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_[0] = c;
    }
    LaurentScalar(long c) : LaurentScalar(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)

    static LaurentScalar term(const GaussianRational& coeff, int exponent) {
        LaurentScalar s;
        if (!coeff.is_zero()) s.terms_[exponent] = coeff;
        return s;
    }
    static LaurentScalar t(int exponent = 1) { return term(GaussianRational(1), exponent); }

    bool is_zero() const { return terms_.empty(); }

    /// Smallest exponent with nonzero coefficient; empty for the zero series.
    std::optional<int> valuation() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }

    const GaussianRational& leading_coeff() const {
        if (terms_.empty()) throw std::domain_error("leading coefficient of the zero series");
        return terms_.begin()->second;
    }

    GaussianRational coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? GaussianRational(0) : it->second;
    }

    const std::map<int, GaussianRational>& terms() const { return terms_; }

    friend LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentScalar operator-() const {
        LaurentScalar r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) { return !(a == b); }

    /// Sum of "c*t^k" terms in ascending exponent order, e.g. "2+1*t^1";
    /// complex coefficients are parenthesized. The zero series prints "0".
    std::string to_string() const;

    static LaurentScalar from_string(const std::string& text);

private:
    void add_term(int exponent, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(exponent);
        if (it == terms_.end()) {
            terms_[exponent] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<int, GaussianRational> terms_;
};

/// Limit of f/g as t -> 0+, read off valuations and leading coefficients.
/// Requires g nonzero; returns (0,1) when the ratio tends to 0, (1,0) when
/// it blows up, and the ratio of leading coefficients at equal valuation.
ProjectivePoint laurent_limit_ratio(const LaurentScalar& f, const LaurentScalar& g);

}  // namespace gr2
