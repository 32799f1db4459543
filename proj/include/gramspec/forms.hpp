#pragma once

/// @file forms.hpp
/// @brief Binary forms of fixed degree over Q(i) and projective root lists.
///
/// A form of degree d is a dense coefficient vector c_0..c_d with c_j the
/// coefficient of x^(d-j) y^j.  Roots live on the projective line: (b : 1)
/// for finite b and (1 : 0) "at infinity", the latter contributing a factor
/// y to the expanded product.

#include <optional>
#include <vector>

#include "gramspec/scalar.hpp"
#include "gramspec/univariate.hpp"

namespace gramspec {

class ProjectivePoint {
public:
    static ProjectivePoint infinity() { return ProjectivePoint(true, {}); }
    static ProjectivePoint finite(GaussianRational b) { return ProjectivePoint(false, std::move(b)); }

    bool is_infinity() const { return infinite_; }
    const GaussianRational& value() const {
        require(!infinite_, errc::out_of_range, "(1:0) has no affine value");
        return value_;
    }
    ProjectivePoint conj() const {
        return infinite_ ? *this : finite(value_.conj());
    }
    bool is_real() const { return infinite_ || value_.is_real(); }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }

    /// Deterministic layout order: finite points lexicographically, (1:0) last.
    static bool canonical_less(const ProjectivePoint& a, const ProjectivePoint& b);

    std::string str() const { return infinite_ ? "(1:0)" : value_.str(); }

private:
    ProjectivePoint(bool inf, GaussianRational v) : infinite_(inf), value_(std::move(v)) {}
    bool infinite_;
    GaussianRational value_;
};

class BinaryForm {
public:
    /// Zero form of the given degree.
    explicit BinaryForm(int degree);
    BinaryForm(int degree, std::vector<GaussianRational> coeffs);

    /// c * x^(degree-j) y^j
    static BinaryForm monomial(int degree, int j, GaussianRational c = GaussianRational(1));
    static BinaryForm constant(GaussianRational c) { return monomial(0, 0, std::move(c)); }

    int degree() const { return degree_; }
    const GaussianRational& coeff(int j) const;
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_real() const;

    BinaryForm conj() const;
    BinaryForm real_part() const;
    BinaryForm imag_part() const;

    /// Multiplicity of the root (1:0), i.e. the index of the first nonzero
    /// coefficient.  Requires a nonzero form.
    int y_valuation() const;

    /// f(b, 1) for finite points, the x^degree coefficient at (1:0).
    GaussianRational evaluate(const ProjectivePoint& at) const;
    GaussianRational evaluate(const GaussianRational& b) const;

    /// Dehomogenization f(x, 1) as a univariate polynomial (lowest degree first).
    uni::CPoly dehomogenize() const;

    /// Inverse of dehomogenize at a chosen degree; p must fit (else error).
    static BinaryForm homogenize(const uni::CPoly& p, int degree);

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const GaussianRational& c, const BinaryForm& f);
    /// Product of forms; degrees add.
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    BinaryForm operator-() const;

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

    std::string str() const; // debug rendering in x, y

private:
    int degree_;
    std::vector<GaussianRational> coeffs_;
};

/// A leading scalar together with a projective root multiset; expands to
/// lead * prod (x - b_j y) * y^(#infinite points).  Points are kept in
/// canonical order, so equal multisets compare equal.
class RootList {
public:
    RootList(GaussianRational lead, std::vector<ProjectivePoint> points);

    const GaussianRational& lead() const { return lead_; }
    const std::vector<ProjectivePoint>& points() const { return points_; }
    int degree() const { return static_cast<int>(points_.size()); }

    friend bool operator==(const RootList& a, const RootList& b) {
        return a.lead_ == b.lead_ && a.points_ == b.points_;
    }

private:
    GaussianRational lead_;
    std::vector<ProjectivePoint> points_;
};

BinaryForm expand_roots(const RootList& roots);

/// Monic gcd (first nonzero coefficient 1) with exact degree; errors with
/// both_zero when both inputs vanish.
BinaryForm gcd_forms(const BinaryForm& f, const BinaryForm& g);

/// f / g when the division is exact, empty otherwise; g must be nonzero.
std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& g);

/// Number of distinct real roots of the dehomogenization f(x, 1) in the
/// half-open interval (lo, hi]; requires real coefficients and nonzero f.
int sturm_real_root_count(const BinaryForm& f, const uni::Interval& iv);

/// Real-coefficient check that throws non_real_input with context otherwise.
void require_real(const BinaryForm& f, const char* what);

} // namespace gramspec
