#pragma once

/// @file bounds.hpp
/// @brief Rank-dimension diagrams, polyhedral-dimension bounds, the
/// minimal-product common-real-root certificate, and the randomized density
/// experiment over the simplex-face constructions.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gramspec/construction.hpp"

namespace gramspec {

/// One diagram row: faces of rank r have dimension within [lower, upper]
/// minus the excluded values.  Rows state bounds only; whether every value
/// inside the range is achieved by some face is not claimed.
struct DiagramRow {
    int r = 0;
    int lower = 0;
    int upper = 0;
    std::vector<int> excluded;
};

/// Rows for r = 1..d+1.  For r <= d: lower = max(0, C(r+1,2) - (2d+1))
/// (symmetric) resp. max(0, r^2 - (2d+1)) (hermitian), upper = C(r-1,2)
/// resp. (r-1)^2; the r = d+1 row collapses to a single value.  The
/// symmetric flavor excludes the value C(d-1,2) at r = d once d >= 3.
std::vector<DiagramRow> diagram(int d, Flavor flavor);

/// Brace-style text table of the rows.
std::string diagram_text(int d, Flavor flavor);

enum class BoundFlavor { hermitian, symmetric_generic };

/// Largest k with C(k+1,2) <= d (hermitian) resp. C(k+3,2) <= 2d-2
/// (symmetric_generic); 0 if none.  The symmetric bound rests on a
/// genericity assumption spelled out by bound_assumption_note.
int max_polyhedral_dim(int d, BoundFlavor flavor);
const char* bound_assumption_note(BoundFlavor flavor);

enum class RootCertStatus { point, interval, not_applicable };

/// Common-real-root certificate for a real subspace U in the minimal
/// product regime dim(UU) = 2 dim(U) - 1 (precondition_failed otherwise).
///  - point: an exact common rational root (b:1) or (1:0), re-verified on
///    every basis form;
///  - interval: a Sturm-isolated interval (lo, hi] of width <= 2^-20 around
///    a real root of the basis gcd, with a verified sign change;
///  - not_applicable: the gcd has no real zero.  With dim(U) = degree >= 3
///    a missing root contradicts the forced linear gcd and raises
///    internal_contradiction instead.
struct RootCertificate {
    RootCertStatus status = RootCertStatus::not_applicable;
    BinaryForm gcd;                        // monic gcd of a basis of U
    std::optional<ProjectivePoint> point;  // status == point
    std::optional<Rational> lo, hi;        // status == interval
    std::vector<std::string> notes;

    RootCertificate() : gcd(0) {}
};

RootCertificate common_real_root_certificate(const Subspace& u);

const char* root_cert_status_name(RootCertStatus s);

/// Seeded repetitions of a simplex-face construction with randomized
/// scalars; sample i runs with seed derive_seed(master_seed, i).  Sample
/// failures (e.g. scalar exhaustion) are recorded, never thrown.  With
/// threads > 1 samples run on a small pool; aggregation is by index, so
/// reports are identical either way.
struct DensityReport {
    int k = 0;
    Flavor flavor = Flavor::hermitian;
    int samples = 0;
    int successes = 0;
    std::uint64_t master_seed = 0;
    std::vector<std::pair<int, std::string>> failures; // (sample index, reason)

    Rational ratio() const { return make_rational(successes, samples); }
};

DensityReport density_experiment(int k, int samples, std::uint64_t seed,
                                 Flavor flavor = Flavor::hermitian, int threads = 1);

} // namespace gramspec
