#pragma once

/// @file extreme_points.hpp
/// @brief Rank-one and rank-two extreme points of Gram spectrahedra of
/// positive binary forms, and the faces cut out by partial factorizations.
///
/// A positive form of degree 2d with distinct roots splits into d conjugate
/// root pairs; choosing one root per pair yields p with p conj(p) = f/lead,
/// and lead * (v v^*) is a rank-one PSD hermitian Gram tensor of f.  All 2^d
/// selections are enumerated by a d-bit selector.

#include <cstdint>
#include <vector>

#include "gramspec/gram.hpp"

namespace gramspec {

/// Validated conjugate-pair root data of a positive binary form.  Pairs are
/// sorted by their representative (the root with positive imaginary part),
/// so selector bits have a deterministic meaning.
class RankOneFamily {
public:
    /// Requires: finite roots only, none real (real_root), all 2d values
    /// distinct (repeated_root), closed under conjugation (degenerate_input),
    /// and a positive rational lead (non_positive_lead).
    explicit RankOneFamily(const RootList& roots);

    int pair_count() const { return static_cast<int>(pairs_.size()); }
    std::uint64_t size() const { return std::uint64_t(1) << pair_count(); }
    const std::vector<GaussianRational>& pair_representatives() const { return pairs_; }
    const RootList& roots() const { return roots_; }

    /// prod_j (x - b_j y) with b_j = rep_j when bit j of selector is 0, else
    /// conj(rep_j).  Monic of degree pair_count().
    BinaryForm p(std::uint64_t selector) const;

    /// lead * v v^* for v the coefficient vector of p(selector); PSD, rank 1,
    /// mu = expand(roots).
    GramTensor theta(std::uint64_t selector) const;

private:
    RootList roots_;
    std::vector<GaussianRational> pairs_; // representatives, im > 0, sorted
};

inline RankOneFamily enumerate_rank_one(const RootList& roots) { return RankOneFamily(roots); }

/// Rank of sums from a family is bounded by d+1 - deg gcd; "actual" is the
/// measured dim span, asserted <= bound.
struct GcdRankBound {
    int bound = 0;
    int actual = 0;
};
GcdRankBound gcd_rank_bound(const std::vector<BinaryForm>& ps);

/// s tensors (2 <= s <= 2^d) sharing the common factor prod_{j<e}(x - rep_j y)
/// where e satisfies 2^(d-e-1) < s <= 2^(d-e); their sum has rank at most
/// ceil(log2 s) + 1, which the selection verifies.
std::vector<GramTensor> low_rank_selection(const RootList& roots, std::uint64_t s);

/// Re(p) tensor Re(p) + Im(p) tensor Im(p): a symmetric PSD rank-two tensor
/// with mu = p conj(p).  Requires Re(p), Im(p) independent over R
/// (degenerate_input otherwise).
GramTensor rank_two_from_rank_one(const BinaryForm& p);

/// Face of the hermitian spectrahedron determined by splitting the root
/// pairs of f as f = g conj(g) h with deg h = 2(r-1): the last r-1 pairs go
/// to h, the first d-r+1 representatives to g.  Generated by r rank-one
/// tensors g*q with q ranging over the all-representative selection and its
/// single-pair flips; the face has rank r and dimension (r-1)^2.
FaceReport face_from_factorization(const RootList& roots, int r);

} // namespace gramspec
