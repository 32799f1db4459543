#pragma once

/// @file univariate.hpp
/// @brief Dense univariate polynomials used as the engine behind binary-form
/// gcds, Sturm counts and real-root isolation.
///
/// Coefficients are stored lowest degree first; the zero polynomial is the
/// empty vector and normalized polynomials carry no trailing zeros.

#include <optional>
#include <utility>
#include <vector>

#include "gramspec/scalar.hpp"

namespace gramspec::uni {

using CPoly = std::vector<GaussianRational>; // over Q(i)
using QPoly = std::vector<Rational>;         // over Q

// --- Q(i) polynomials -------------------------------------------------------

void normalize(CPoly& p);
int degree(const CPoly& p); // -1 for the zero polynomial
CPoly mul(const CPoly& a, const CPoly& b);
GaussianRational eval(const CPoly& p, const GaussianRational& x);

/// Quotient/remainder with deg(rem) < deg(b); b must be nonzero.
std::pair<CPoly, CPoly> divmod(const CPoly& a, const CPoly& b);

/// Monic gcd via the Euclidean algorithm (remainders re-scaled to monic each
/// step to keep coefficients small).  gcd(0, 0) is an error for callers.
CPoly gcd_monic(CPoly a, CPoly b);

// --- real polynomials and Sturm chains --------------------------------------

void normalize(QPoly& p);
int degree(const QPoly& p);
QPoly derivative(const QPoly& p);
Rational eval(const QPoly& p, const Rational& x);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(QPoly a, QPoly b);

/// Divides by the content and fixes a positive leading coefficient: the
/// canonical representative used by gcd computations.  Not sign-safe for
/// Sturm chains, which scale by positive constants internally.
QPoly primitive_positive(QPoly p);

QPoly squarefree_part(const QPoly& p);

/// Half-open interval (lo, hi]; an absent bound means -/+infinity.
struct Interval {
    std::optional<Rational> lo, hi;
};

/// Number of distinct real roots of p in (lo, hi] (multiplicities ignored).
/// p must be nonzero.
int sturm_count(const QPoly& p, const Interval& iv);

/// One real root of p, either exact (found by rational-root candidate
/// testing under a trial-division budget) or isolated in a half-open
/// interval (lo, hi] of width <= width_bound containing exactly one root.
/// Empty when p has no real root.
struct RootIsolation {
    bool exact = false;
    Rational root;    // set when exact
    Rational lo, hi;  // set when !exact
};
std::optional<RootIsolation> find_real_root(const QPoly& p, const Rational& width_bound);

} // namespace gramspec::uni
