#include "gramspec/construction.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

namespace gramspec {

namespace {

long norm2(const std::pair<long, long>& p) { return p.first * p.first + p.second * p.second; }

/// Enumeration order: norm ascending, then |im| ascending, then re
/// descending, then im descending.  Puts 0, 1, -1, i, -i, 1+i, 1-i, ... first.
bool stream_less(const std::pair<long, long>& a, const std::pair<long, long>& b) {
    long na = norm2(a), nb = norm2(b);
    if (na != nb) return na < nb;
    long ia = std::labs(a.second), ib = std::labs(b.second);
    if (ia != ib) return ia < ib;
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
}

} // namespace

GaussianRational DeterministicPicker::stream(std::size_t n) {
    static std::mutex mutex;
    static std::vector<std::pair<long, long>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (n >= cache.size()) {
        // Points of norm <= B number about pi*B, so B = n+4 always suffices.
        long bound = static_cast<long>(n) + 4;
        long r = 2;
        while (r * r < bound) ++r;
        std::vector<std::pair<long, long>> pts;
        for (long re = -r; re <= r; ++re)
            for (long im = -r; im <= r; ++im)
                if (re * re + im * im <= bound) pts.emplace_back(re, im);
        std::sort(pts.begin(), pts.end(), stream_less);
        cache = std::move(pts);
    }
    return {cache[n].first, cache[n].second};
}

GaussianRational DeterministicPicker::pick(const std::function<bool(const GaussianRational&)>& ok) {
    constexpr std::size_t kScanLimit = 20000;
    for (std::size_t n = 0; n < kScanLimit; ++n) {
        GaussianRational z = stream(n);
        if (ok(z)) return z;
    }
    fail(errc::scalar_exhaustion, "no admissible scalar among the first 20000 Gaussian integers");
}

GaussianRational SeededPicker::pick(const std::function<bool(const GaussianRational&)>& ok) {
    long span = 8;
    for (int draws = 1; draws <= 100000; ++draws) {
        GaussianRational z(rng_.range(-span, span), rng_.range(-span, span));
        if (ok(z)) return z;
        if (draws % 64 == 0 && span < (1L << 20)) span *= 2;
    }
    fail(errc::scalar_exhaustion, "no admissible scalar after 100000 seeded draws");
}

namespace {

/// Wraps a picker so that the first pick() call discards the first
/// skip_first admissible candidates; later calls pass through.  Turns a
/// deterministic retry counter into a different (still deterministic)
/// scalar selection.
class SkippingPicker final : public ScalarPicker {
public:
    SkippingPicker(ScalarPicker& inner, int skip_first) : inner_(inner), skip_(skip_first) {}

    GaussianRational pick(const std::function<bool(const GaussianRational&)>& ok) override {
        if (used_ || skip_ == 0) {
            used_ = true;
            return inner_.pick(ok);
        }
        used_ = true;
        int left = skip_;
        return inner_.pick([&](const GaussianRational& z) {
            if (!ok(z)) return false;
            if (left > 0) {
                --left;
                return false;
            }
            return true;
        });
    }

private:
    ScalarPicker& inner_;
    int skip_;
    bool used_ = false;
};

std::vector<BinaryForm> reversed_rref_forms(const Subspace& u) {
    auto fs = u.basis_forms();
    std::reverse(fs.begin(), fs.end());
    return fs;
}

/// Directly certifies that the only element of u vanishing at every
/// (lambda : 1) (conjugated lambdas if requested) is zero, by an evaluation
/// matrix of full column rank.
void verify_evaluation_rank(const Subspace& u, const std::vector<GaussianRational>& lambdas,
                            bool conjugate) {
    const auto basis = u.basis_forms();
    const int r = u.dim();
    const int n = static_cast<int>(lambdas.size());
    Matrix e(n, r);
    for (int l = 0; l < n; ++l) {
        GaussianRational at = conjugate ? lambdas[static_cast<size_t>(l)].conj()
                                        : lambdas[static_cast<size_t>(l)];
        for (int j = 0; j < r; ++j) e.at(l, j) = basis[static_cast<size_t>(j)].evaluate(at);
    }
    require(rank(e) == r, errc::internal_contradiction,
            "selected scalars fail the evaluation-rank certificate");
}

Admissible accept_all() {
    return [](const GaussianRational&, const std::vector<GaussianRational>&) { return true; };
}

} // namespace

ScalarSelection special_basis(const Subspace& u) {
    DeterministicPicker picker;
    return special_basis(u, picker, accept_all());
}

ScalarSelection special_basis(const Subspace& u, ScalarPicker& picker, const Admissible& extra) {
    require(u.dim() > 0, errc::zero_subspace, "special basis of the zero subspace");
    auto q = reversed_rref_forms(u);
    const int r = u.dim();
    std::vector<GaussianRational> lambdas;
    for (int l = 0; l < r; ++l) {
        const auto& ql = q[static_cast<size_t>(l)];
        GaussianRational lam = picker.pick([&](const GaussianRational& z) {
            return !ql.evaluate(z).is_zero() && extra(z, lambdas);
        });
        // q_j(lam) = 0 for j > l afterwards; earlier lambdas are untouched
        // because both q_l and q_j already vanish there.
        GaussianRational pivot = ql.evaluate(lam);
        for (int j = l + 1; j < r; ++j) {
            auto& qj = q[static_cast<size_t>(j)];
            qj = pivot * qj - qj.evaluate(lam) * ql;
        }
        lambdas.push_back(lam);
    }
    verify_evaluation_rank(u, lambdas, false);
    return {std::move(lambdas), std::move(q)};
}

ScalarSelection careful_special_basis(const Subspace& u) {
    DeterministicPicker picker;
    return careful_special_basis(u, picker, accept_all());
}

ScalarSelection careful_special_basis(const Subspace& u, ScalarPicker& picker,
                                      const Admissible& extra) {
    require(u.dim() > 0, errc::zero_subspace, "special basis of the zero subspace");
    auto q = reversed_rref_forms(u); // chain driven by evaluations at lambda
    auto p = q;                      // twin chain driven by conj(lambda)
    const int r = u.dim();
    std::vector<GaussianRational> lambdas;
    for (int l = 0; l < r; ++l) {
        const auto& ql = q[static_cast<size_t>(l)];
        const auto& pl = p[static_cast<size_t>(l)];
        GaussianRational lam = picker.pick([&](const GaussianRational& z) {
            return !ql.evaluate(z).is_zero() && !pl.evaluate(z.conj()).is_zero() &&
                   extra(z, lambdas);
        });
        GaussianRational qpiv = ql.evaluate(lam);
        GaussianRational ppiv = pl.evaluate(lam.conj());
        for (int j = l + 1; j < r; ++j) {
            auto& qj = q[static_cast<size_t>(j)];
            auto& pj = p[static_cast<size_t>(j)];
            qj = qpiv * qj - qj.evaluate(lam) * ql;
            pj = ppiv * pj - pj.evaluate(lam.conj()) * pl;
        }
        lambdas.push_back(lam);
    }
    verify_evaluation_rank(u, lambdas, false);
    verify_evaluation_rank(u, lambdas, true);
    return {std::move(lambdas), std::move(q)};
}

BinaryForm cofactor_q(const Subspace& forbidden, int e,
                      const std::vector<GaussianRational>& avoid_roots, ScalarPicker& picker,
                      std::vector<GaussianRational>* gammas_out) {
    require(forbidden.dim() > 0, errc::zero_subspace, "cofactor against the zero subspace");
    require(forbidden.dim() <= e, errc::out_of_range,
            "cofactor degree is below the protected dimension");
    Subspace target = conj_space(forbidden);

    auto root_ok = [&](const GaussianRational& z, const std::vector<GaussianRational>& chosen) {
        if (z.is_real()) return false;
        GaussianRational zc = z.conj();
        for (const auto& a : avoid_roots)
            if (z == a || zc == a) return false;
        for (const auto& c : chosen)
            if (z == c || zc == c) return false;
        return true;
    };

    ScalarSelection sel = special_basis(target, picker, root_ok);
    std::vector<GaussianRational> gammas = sel.lambdas;
    while (static_cast<int>(gammas.size()) < e)
        gammas.push_back(picker.pick(
            [&](const GaussianRational& z) { return root_ok(z, gammas); }));

    // With all e roots fixed, re-certify: only zero vanishes at every root,
    // i.e. q divides no nonzero element of conj(forbidden).
    verify_evaluation_rank(target, gammas, false);

    std::vector<ProjectivePoint> pts;
    pts.reserve(gammas.size());
    for (const auto& g : gammas) pts.push_back(ProjectivePoint::finite(g));
    if (gammas_out) *gammas_out = gammas;
    return expand_roots(RootList(GaussianRational(1), std::move(pts)));
}

BinaryForm cofactor_q(const Subspace& forbidden, int e) {
    DeterministicPicker picker;
    return cofactor_q(forbidden, e, {}, picker);
}

namespace {

std::unique_ptr<ScalarPicker> make_picker(const ConstructOptions& opts) {
    if (opts.random_scalars) return std::make_unique<SeededPicker>(opts.seed);
    return std::make_unique<DeterministicPicker>();
}

BinaryForm linear_factor(const GaussianRational& root) {
    return BinaryForm(1, {GaussianRational(1), -root});
}

/// Fresh roots must stay non-real, avoid the accumulated root set and stay
/// pairwise non-conjugate within the current batch, so the total root list
/// remains distinct and conjugate-pairable.
bool fresh_root_ok(const GaussianRational& z, const std::vector<ProjectivePoint>& existing,
                   const std::vector<GaussianRational>& batch) {
    if (z.is_real()) return false;
    GaussianRational zc = z.conj();
    for (const auto& p : existing)
        if (p.value() == z || p.value() == zc) return false;
    for (const auto& b : batch)
        if (b == z || b == zc) return false;
    return true;
}

struct HermCore {
    BinaryForm f;                          // monic positive real form, degree 2*d
    std::vector<BinaryForm> vecs;          // k+1 monic vector forms of degree d
    std::vector<ProjectivePoint> root_pts; // the 2*d roots of f
    std::vector<TraceRecord> trace;
};

/// Iterative hermitian tower.  The base level fixes the quadratic
/// (x - conj(a) y)(x - a y) with a the first admissible non-real scalar
/// (x^2 + y^2 with the deterministic picker); level l picks beta_1..beta_l
/// through (careful_)special_basis on the previous span U', so that s =
/// prod (x - beta y) divides no nonzero element of U', and replaces the
/// vectors by s*t, conj(s)*previous.  Each level is re-verified (vector
/// independence, full product space U conj(U), and for the quadratically
/// independent variant the expected dim of U U); on failure the level
/// retries with shifted scalars.
HermCore hermitian_core(int k, HermitianVariant variant, ScalarPicker& picker) {
    require(k >= 1, errc::out_of_range, "simplex dimension must be at least 1");
    const bool qi = variant == HermitianVariant::quadratically_independent;

    HermCore core{BinaryForm(0), {}, {}, {}};
    {
        GaussianRational a =
            picker.pick([](const GaussianRational& z) { return !z.is_real(); });
        core.vecs = {linear_factor(a.conj()), linear_factor(a)};
        core.root_pts = {ProjectivePoint::finite(a), ProjectivePoint::finite(a.conj())};
        core.f = core.vecs[0] * core.vecs[1];
        TraceRecord rec;
        rec.kind = "hermitian-base";
        rec.level = 1;
        rec.g = core.f;
        rec.betas = {a};
        core.trace.push_back(std::move(rec));
    }

    for (int level = 2; level <= k; ++level) {
        const int dprev = level * (level - 1) / 2;
        const int dl = dprev + level;
        Subspace uprev = Subspace::span(dprev, core.vecs);
        require(uprev.dim() == level, errc::internal_contradiction,
                "previous level lost vector independence");
        Admissible fresh = [&core](const GaussianRational& z,
                                   const std::vector<GaussianRational>& batch) {
            return fresh_root_ok(z, core.root_pts, batch);
        };
        bool done = false;
        for (int attempt = 0; attempt < 40 && !done; ++attempt) {
            SkippingPicker sp(picker, attempt);
            ScalarSelection sel = qi ? careful_special_basis(uprev, sp, fresh)
                                     : special_basis(uprev, sp, fresh);
            const std::vector<GaussianRational>& betas = sel.lambdas;

            BinaryForm s = BinaryForm::constant(GaussianRational(1));
            for (const auto& b : betas) s = s * linear_factor(b);
            BinaryForm cs = s.conj();
            BinaryForm t = core.vecs[0];

            std::vector<BinaryForm> next;
            next.reserve(core.vecs.size() + 1);
            next.push_back(s * t);
            for (const auto& v : core.vecs) next.push_back(cs * v);

            Subspace u = Subspace::span(dl, next);
            if (u.dim() != level + 1) continue;
            if (product(u, conj_space(u)).dim() != 2 * dl + 1) continue;
            if (qi && product(u, u).dim() != (level + 2) * (level + 1) / 2) continue;

            TraceRecord rec;
            rec.kind = "hermitian-step";
            rec.level = level;
            rec.g = core.f;
            rec.u_prev = uprev;
            rec.betas = betas;
            rec.s = s;
            rec.t = t;
            core.trace.push_back(std::move(rec));

            core.f = s * cs * core.f;
            core.vecs = std::move(next);
            for (const auto& b : betas) {
                core.root_pts.push_back(ProjectivePoint::finite(b));
                core.root_pts.push_back(ProjectivePoint::finite(b.conj()));
            }
            done = true;
        }
        require(done, errc::scalar_exhaustion,
                "no admissible scalar batch produced a valid construction level");
    }
    return core;
}

void note_dimension(FaceReport& report, const char* label, int value, int expected) {
    require(value == expected, errc::internal_contradiction,
            std::string(label) + " does not certify");
    report.notes.push_back(std::string(label) + " = " + std::to_string(value));
}

/// Positivity certificate for the constructed target: no real projective
/// zeros (Sturm over the whole line plus a nonzero lead), and positive
/// values at (1:0), (0:1), (1:1), (-1:1) and 50 deterministic rational
/// sample points.
void verify_positive(const BinaryForm& f, std::uint64_t sample_seed) {
    require_real(f, "positivity target");
    require(sturm_real_root_count(f, uni::Interval{}) == 0, errc::internal_contradiction,
            "constructed form has a real zero");
    auto positive_at = [&](const ProjectivePoint& pt) {
        GaussianRational v = f.evaluate(pt);
        require(v.is_real() && sgn(v.re()) > 0, errc::internal_contradiction,
                "constructed form is not positive at a sample point");
    };
    positive_at(ProjectivePoint::infinity());
    positive_at(ProjectivePoint::finite(GaussianRational(0)));
    positive_at(ProjectivePoint::finite(GaussianRational(1)));
    positive_at(ProjectivePoint::finite(GaussianRational(-1)));
    SplitMix rng(sample_seed);
    for (int i = 0; i < 50; ++i) {
        Rational b = make_rational(rng.range(-10000, 10000), rng.range(1, 1000));
        positive_at(ProjectivePoint::finite(GaussianRational(b)));
    }
}

} // namespace

ConstructionCertificate hermitian_simplex_face(int k, HermitianVariant variant,
                                               const ConstructOptions& opts) {
    auto picker = make_picker(opts);
    HermCore core = hermitian_core(k, variant, *picker);
    const int d = k * (k + 1) / 2;

    ConstructionCertificate cert;
    cert.k = k;
    cert.flavor = Flavor::hermitian;
    cert.roots = RootList(GaussianRational(1), core.root_pts);
    cert.f = core.f;
    cert.trace = std::move(core.trace);

    require(core.f.degree() == 2 * d, errc::internal_contradiction,
            "degree drift in the hermitian construction");
    require(expand_roots(cert.roots) == core.f, errc::internal_contradiction,
            "constructed form disagrees with its root expansion");
    verify_positive(core.f, derive_seed(0x67D5u, 2 * static_cast<std::uint64_t>(k)));

    cert.generators.reserve(core.vecs.size());
    for (const auto& v : core.vecs) {
        require(v * v.conj() == core.f, errc::internal_contradiction,
                "generator vector does not multiply back to the target form");
        cert.generators.push_back(gram_from_sos(Flavor::hermitian, {v}));
    }
    cert.report = supporting_face(cert.generators);

    require(cert.generators[0].mu() == cert.f, errc::internal_contradiction,
            "generator mu disagrees with the target form");
    require(cert.report.rank == k + 1, errc::internal_contradiction,
            "hermitian face rank does not certify");
    require(cert.report.dimension == k, errc::internal_contradiction,
            "hermitian face dimension does not certify");
    require(cert.report.polyhedral && cert.report.simplex, errc::internal_contradiction,
            "hermitian face is not certified polyhedral");
    for (const auto& th : cert.generators)
        require(th.rank() == 1, errc::internal_contradiction, "generator is not rank one");

    Subspace u = Subspace::span(d, core.vecs);
    note_dimension(cert.report, "dim U conj(U)", product(u, conj_space(u)).dim(), 2 * d + 1);
    if (variant == HermitianVariant::quadratically_independent)
        note_dimension(cert.report, "dim U U", product(u, u).dim(), (k + 2) * (k + 1) / 2);
    return cert;
}

ConstructionCertificate symmetric_simplex_face(int k, const ConstructOptions& opts) {
    auto picker = make_picker(opts);
    HermCore herm = hermitian_core(k, HermitianVariant::quadratically_independent, *picker);
    const int dp = k * (k + 1) / 2;       // degree of the hermitian vectors
    const int e = (k + 2) * (k + 1) / 2;  // cofactor degree
    const int d = (k + 1) * (k + 1);      // dp + e

    Subspace u0 = Subspace::span(dp, herm.vecs);
    require(u0.dim() == k + 1, errc::internal_contradiction, "hermitian vectors are dependent");
    Subspace forbidden = product(u0, u0);
    require(forbidden.dim() == e, errc::internal_contradiction,
            "hermitian tower is not quadratically independent");

    std::vector<GaussianRational> avoid;
    avoid.reserve(herm.root_pts.size());
    for (const auto& pt : herm.root_pts) avoid.push_back(pt.value());

    for (int attempt = 0; attempt < 32; ++attempt) {
        SkippingPicker sp(*picker, attempt);
        std::vector<GaussianRational> gammas;
        BinaryForm q = cofactor_q(forbidden, e, avoid, sp, &gammas);

        std::vector<BinaryForm> w; // q p_j, degree d
        w.reserve(herm.vecs.size());
        for (const auto& p : herm.vecs) w.push_back(q * p);
        std::vector<BinaryForm> both = w;
        for (const auto& f : w) both.push_back(f.conj());

        Subspace uc = Subspace::span(d, both);
        if (uc.dim() != 2 * (k + 1)) continue;
        if (product(uc, uc).dim() != 2 * d + 1) continue;

        ConstructionCertificate cert;
        cert.k = k;
        cert.flavor = Flavor::symmetric;
        cert.f = q * q.conj() * herm.f;
        std::vector<ProjectivePoint> pts = herm.root_pts;
        for (const auto& g : gammas) {
            pts.push_back(ProjectivePoint::finite(g));
            pts.push_back(ProjectivePoint::finite(g.conj()));
        }
        cert.roots = RootList(GaussianRational(1), std::move(pts));

        require(cert.f.degree() == 2 * d, errc::internal_contradiction,
                "degree drift in the symmetric construction");
        require(expand_roots(cert.roots) == cert.f, errc::internal_contradiction,
                "constructed form disagrees with its root expansion");
        verify_positive(cert.f, derive_seed(0x67D5u, 2 * static_cast<std::uint64_t>(k) + 1));

        cert.generators.reserve(w.size());
        for (const auto& wj : w) cert.generators.push_back(rank_two_from_rank_one(wj));
        cert.report = supporting_face(cert.generators);

        require(cert.generators[0].mu() == cert.f, errc::internal_contradiction,
                "generator mu disagrees with the target form");
        require(cert.report.rank == 2 * (k + 1), errc::internal_contradiction,
                "symmetric face rank does not certify");
        require(cert.report.dimension == k, errc::internal_contradiction,
                "symmetric face dimension does not certify");
        require(cert.report.polyhedral && cert.report.simplex, errc::internal_contradiction,
                "symmetric face is not certified polyhedral");
        for (const auto& th : cert.generators)
            require(th.rank() == 2, errc::internal_contradiction, "generator is not rank two");

        note_dimension(cert.report, "dim U_C conj(U_C)",
                       product(uc, conj_space(uc)).dim(), 2 * d + 1);
        note_dimension(cert.report, "dim U_C U_C", product(uc, uc).dim(), 2 * d + 1);

        // Sub-face even-rank samples: every nonempty generator subset spans a
        // face whose rank is twice the subset size.
        int samples = 0;
        auto check_subset = [&](const std::vector<int>& subset) {
            GramTensor sum = cert.generators[static_cast<size_t>(subset[0])];
            for (size_t i = 1; i < subset.size(); ++i)
                sum = sum + cert.generators[static_cast<size_t>(subset[i])];
            require(sum.rank() == 2 * static_cast<int>(subset.size()),
                    errc::internal_contradiction, "sub-face rank is not twice the subset size");
            ++samples;
        };
        for (int j = 0; j <= k; ++j) check_subset({j});
        for (int j = 1; j <= k; ++j) check_subset({0, j});
        {
            std::vector<int> all;
            for (int j = 0; j <= k; ++j) all.push_back(j);
            check_subset(all);
        }
        cert.report.notes.push_back("even-rank subsets verified: " + std::to_string(samples));

        TraceRecord rec;
        rec.kind = "symmetric-cofactor";
        rec.level = k;
        rec.g = herm.f;
        rec.u_prev = u0;
        rec.q = q;
        rec.gammas = gammas;
        cert.trace = herm.trace;
        cert.trace.push_back(std::move(rec));
        return cert;
    }
    fail(errc::scalar_exhaustion, "no admissible cofactor produced a valid symmetric face");
}

} // namespace gramspec
