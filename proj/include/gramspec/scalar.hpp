#pragma once

/// @file scalar.hpp
/// @brief Exact arithmetic in Q(i): rational numbers with a Gaussian extension.
///
/// Rationals are GMP's mpq_class kept eagerly canonical (lowest terms,
/// positive denominator).  GaussianRational layers re/im components on top;
/// it is the only scalar type used by the rest of the library.  No floating
/// point anywhere.

#include <gmpxx.h>

#include <string>
#include <utility>

#include "gramspec/error.hpp"

namespace gramspec {

using Rational = mpq_class;

/// mpq_class(n, d) does not canonicalize on its own; this always does.
inline Rational make_rational(long num, long den = 1) {
    require(den != 0, errc::division_by_zero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    require(den != 0, errc::division_by_zero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long re) : re_(re), im_(0) {}               // NOLINT: implicit by design
    GaussianRational(long re, long im) : re_(re), im_(im) {}
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// |z|^2 = re^2 + im^2, an exact rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) fail(errc::division_by_zero, "division by zero in Q(i)");
        Rational n = b.norm();
        GaussianRational num = a * b.conj();
        return {num.re_ / n, num.im_ / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Debug rendering "a", "bi" or "a+bi"; JSON encoding lives in json_io.
    std::string str() const;

private:
    Rational re_, im_;
};

/// Lexicographic (re, im) order; used only to fix deterministic layouts,
/// not as a meaningful order on C.
bool lex_less(const GaussianRational& a, const GaussianRational& b);

std::string rational_str(const Rational& q);

} // namespace gramspec
