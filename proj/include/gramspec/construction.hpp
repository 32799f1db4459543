#pragma once

/// @file construction.hpp
/// @brief Constructions of polyhedral simplex faces of Gram spectrahedra.
///
/// The hermitian construction builds, for every k >= 1 and d = k(k+1)/2, a
/// positive form of degree 2d whose hermitian Gram spectrahedron has a
/// k-simplex face spanned by k+1 rank-one tensors.  Feeding its
/// quadratically-independent variant into a cofactor step yields, for
/// d = (k+1)^2, a real form whose symmetric Gram spectrahedron has a
/// k-simplex face spanned by rank-two tensors.  Everything is verified on
/// the spot; a certificate that fails its own checks never escapes.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "gramspec/extreme_points.hpp"
#include "gramspec/rng.hpp"

namespace gramspec {

/// Admissibility callback: candidate scalar plus the scalars fixed so far in
/// the same selection context.
using Admissible =
    std::function<bool(const GaussianRational&, const std::vector<GaussianRational>&)>;

/// Source of scalar candidates.  pick() returns the first candidate passing
/// the predicate, or throws scalar_exhaustion after its search budget.
class ScalarPicker {
public:
    virtual ~ScalarPicker() = default;
    virtual GaussianRational pick(const std::function<bool(const GaussianRational&)>& ok) = 0;
};

/// Gaussian integers enumerated by (norm, |im|, -re, -im):
/// 0, 1, -1, i, -i, 1+i, 1-i, -1+i, -1-i, 2, -2, 2i, -2i, ...
/// Every pick() scans the stream from the start, so choices are reproducible
/// and independent of call history.
class DeterministicPicker final : public ScalarPicker {
public:
    GaussianRational pick(const std::function<bool(const GaussianRational&)>& ok) override;

    /// The enumeration itself, exposed for tests: candidate #n of the stream.
    static GaussianRational stream(std::size_t n);
};

/// Seeded random Gaussian integers with slowly growing range; deterministic
/// for a fixed seed (splitmix64, no std distributions).
class SeededPicker final : public ScalarPicker {
public:
    explicit SeededPicker(std::uint64_t seed) : rng_(seed) {}
    GaussianRational pick(const std::function<bool(const GaussianRational&)>& ok) override;

private:
    SplitMix rng_;
};

struct ScalarSelection {
    std::vector<GaussianRational> lambdas;
    std::vector<BinaryForm> transformed_basis; // triangular: basis[j](lambda_l) = 0 for j > l
};

/// Scalars lambda_1..lambda_r (r = dim U) such that the only element of U
/// vanishing at every (lambda_l : 1) is zero, produced by successive
/// elimination from the RREF basis in ascending dehomogenized-degree order.
/// The vanishing property is re-verified by solving the evaluation system
/// (internal_contradiction on failure).
ScalarSelection special_basis(const Subspace& u);
ScalarSelection special_basis(const Subspace& u, ScalarPicker& picker, const Admissible& extra);

/// As special_basis, but a parallel elimination chain driven by conjugate
/// evaluations additionally guarantees that no nonzero element of U vanishes
/// at every (conj(lambda_l) : 1); both systems are re-verified.
ScalarSelection careful_special_basis(const Subspace& u);
ScalarSelection careful_special_basis(const Subspace& u, ScalarPicker& picker,
                                      const Admissible& extra);

/// Monic q = prod (x - gamma_j y) of degree e such that q divides no nonzero
/// element of conj(forbidden); the gammas avoid the given root set, are
/// non-real and pairwise non-conjugate.  Requires dim(forbidden) <= e.
/// The two-argument form uses the deterministic picker and no avoid set.
BinaryForm cofactor_q(const Subspace& forbidden, int e,
                      const std::vector<GaussianRational>& avoid_roots, ScalarPicker& picker,
                      std::vector<GaussianRational>* gammas_out = nullptr);
BinaryForm cofactor_q(const Subspace& forbidden, int e);

enum class HermitianVariant { plain, quadratically_independent };

struct TraceRecord {
    std::string kind; // "hermitian-base" | "hermitian-step" | "symmetric-cofactor"
    int level = 0;
    BinaryForm g;     // the form entering this level
    std::optional<Subspace> u_prev;
    std::vector<GaussianRational> betas;
    std::optional<BinaryForm> s, t, q;
    std::vector<GaussianRational> gammas;

    TraceRecord() : g(0) {}
};

struct ConstructionCertificate {
    int k = 0;
    Flavor flavor = Flavor::hermitian;
    RootList roots;   // conjugate-closed, all distinct, none real
    BinaryForm f;     // expand_roots(roots), positive
    std::vector<GramTensor> generators;
    FaceReport report;
    std::vector<TraceRecord> trace;

    ConstructionCertificate() : roots(GaussianRational(1), {}), f(0) {}
};

struct ConstructOptions {
    bool random_scalars = false;
    std::uint64_t seed = 0;
};

/// k-simplex face of the hermitian Gram spectrahedron of a positive form of
/// degree 2d, d = k(k+1)/2, with k+1 rank-one generators.  The certificate
/// re-verifies rank, both dimension routes, the polyhedral and simplex flags
/// and dim(U conj(U)) = 2d+1; the quadratically_independent variant also
/// certifies dim(UU) = (k+2)(k+1)/2.
ConstructionCertificate hermitian_simplex_face(int k,
                                               HermitianVariant variant = HermitianVariant::plain,
                                               const ConstructOptions& opts = {});

/// k-simplex face of the symmetric Gram spectrahedron of a positive real form
/// of degree 2d, d = (k+1)^2, with k+1 rank-two generators.  Certifies rank
/// 2(k+1), dimension k by both routes, the simplex flags, generator ranks,
/// dim of the complexified product space = 2d+1, and samples sub-faces for
/// the even-rank property.
ConstructionCertificate symmetric_simplex_face(int k, const ConstructOptions& opts = {});

} // namespace gramspec
