#include "gramspec/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace gramspec {

namespace {

int choose2(int n) { return n >= 2 ? n * (n - 1) / 2 : 0; }

} // namespace

std::vector<DiagramRow> diagram(int d, Flavor flavor) {
    require(d >= 1, errc::out_of_range, "diagram needs d >= 1");
    std::vector<DiagramRow> rows;
    rows.reserve(static_cast<size_t>(d) + 1);
    for (int r = 1; r <= d + 1; ++r) {
        DiagramRow row;
        row.r = r;
        if (flavor == Flavor::symmetric) {
            row.lower = std::max(0, choose2(r + 1) - (2 * d + 1));
            row.upper = choose2(r - 1);
            if (r == d && d >= 3) row.excluded.push_back(choose2(d - 1));
        } else {
            row.lower = std::max(0, r * r - (2 * d + 1));
            row.upper = (r - 1) * (r - 1);
        }
        require(row.lower <= row.upper, errc::internal_contradiction, "diagram row inverted");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string diagram_text(int d, Flavor flavor) {
    std::ostringstream os;
    os << flavor_name(flavor) << " Gram spectrahedra of degree-" << 2 * d
       << " forms (d = " << d << "); rank r vs. face dimension, bounds only\n";
    for (const auto& row : diagram(d, flavor)) {
        os << "  r = " << row.r << ": ";
        if (row.lower == row.upper)
            os << "{" << row.lower << "}";
        else
            os << "{" << row.lower << ".." << row.upper << "}";
        if (!row.excluded.empty()) {
            os << " \\ {";
            for (size_t i = 0; i < row.excluded.size(); ++i)
                os << (i ? ", " : "") << row.excluded[i];
            os << "}";
        }
        os << "\n";
    }
    return os.str();
}

int max_polyhedral_dim(int d, BoundFlavor flavor) {
    require(d >= 1, errc::out_of_range, "max_polyhedral_dim needs d >= 1");
    auto fits = [&](int k) {
        if (flavor == BoundFlavor::hermitian) return (k + 1) * k / 2 <= d;
        return (k + 3) * (k + 2) / 2 <= 2 * d - 2;
    };
    int k = 0;
    while (fits(k + 1)) ++k;
    return k;
}

const char* bound_assumption_note(BoundFlavor flavor) {
    if (flavor == BoundFlavor::symmetric_generic)
        return "assumes a generic positive form: no rank-one points and no "
               "positive-dimensional faces of rank 3";
    return "";
}

const char* root_cert_status_name(RootCertStatus s) {
    switch (s) {
        case RootCertStatus::point: return "point";
        case RootCertStatus::interval: return "interval";
        case RootCertStatus::not_applicable: return "not-applicable";
    }
    fail(errc::out_of_range, "unknown root certificate status");
}

RootCertificate common_real_root_certificate(const Subspace& u) {
    require(u.dim() > 0, errc::zero_subspace, "root certificate of the zero subspace");
    require(u.is_real(), errc::non_real_input, "root certificate needs a real subspace");
    const int r = u.dim();
    const int d = u.degree();
    require(product(u, u).dim() == 2 * r - 1, errc::precondition_failed,
            "subspace is not in the minimal product regime dim(UU) = 2 dim(U) - 1");
    // Only dim(U) = d >= 3 forces a (then linear, hence really rooted) gcd;
    // smaller subspaces legitimately reach the no-real-root outcome.
    const bool root_guaranteed = r == d && d >= 3;

    const auto basis = u.basis_forms();
    BinaryForm g = basis[0];
    for (size_t i = 1; i < basis.size(); ++i) g = gcd_forms(g, basis[i]);

    RootCertificate cert;
    cert.gcd = g;
    cert.notes.push_back("gcd degree " + std::to_string(g.degree()));
    if (g.degree() == 0) {
        require(!root_guaranteed, errc::internal_contradiction,
                "maximal minimal-product subspace with coprime basis");
        cert.status = RootCertStatus::not_applicable;
        cert.notes.push_back("basis forms are coprime");
        return cert;
    }
    for (const auto& b : basis)
        require(divide_exact(b, g).has_value(), errc::internal_contradiction,
                "gcd fails to divide a basis form");

    if (g.y_valuation() > 0) {
        // Every basis form is divisible by y, so all dehomogenized degrees
        // drop below d and (1:0) is a common root.
        cert.status = RootCertStatus::point;
        cert.point = ProjectivePoint::infinity();
        for (const auto& b : basis)
            require(b.evaluate(ProjectivePoint::infinity()).is_zero(),
                    errc::internal_contradiction, "claimed root (1:0) fails on a basis form");
        return cert;
    }

    require_real(g, "gcd of a real subspace");
    uni::QPoly p;
    for (const auto& c : g.dehomogenize()) p.push_back(c.re());
    auto found = uni::find_real_root(p, make_rational(1, 1 << 20));
    if (!found) {
        require(!root_guaranteed, errc::internal_contradiction,
                "guaranteed common real root was not found");
        cert.status = RootCertStatus::not_applicable;
        cert.notes.push_back("gcd has no real zero");
        return cert;
    }
    if (found->exact) {
        ProjectivePoint pt = ProjectivePoint::finite(GaussianRational(found->root));
        for (const auto& b : basis)
            require(b.evaluate(pt).is_zero(), errc::internal_contradiction,
                    "claimed rational root fails on a basis form");
        cert.status = RootCertStatus::point;
        cert.point = pt;
        return cert;
    }

    // Interval certificate: exactly one root of the gcd in (lo, hi], plus a
    // strict sign change of the squarefree part at the endpoints.
    require(uni::sturm_count(p, uni::Interval{found->lo, found->hi}) == 1,
            errc::internal_contradiction, "isolating interval does not isolate");
    uni::QPoly sf = uni::squarefree_part(p);
    require(sgn(uni::eval(sf, found->lo)) * sgn(uni::eval(sf, found->hi)) < 0,
            errc::internal_contradiction, "no sign change over the isolating interval");
    cert.status = RootCertStatus::interval;
    cert.lo = found->lo;
    cert.hi = found->hi;
    cert.notes.push_back("sign change of the squarefree gcd part verified");
    return cert;
}

namespace {

std::optional<std::string> run_density_sample(int k, Flavor flavor, std::uint64_t seed) {
    ConstructOptions opts;
    opts.random_scalars = true;
    opts.seed = seed;
    try {
        if (flavor == Flavor::hermitian)
            hermitian_simplex_face(k, HermitianVariant::plain, opts);
        else
            symmetric_simplex_face(k, opts);
        return std::nullopt;
    } catch (const error& e) {
        return std::string(e.what());
    }
}

} // namespace

DensityReport density_experiment(int k, int samples, std::uint64_t seed, Flavor flavor,
                                 int threads) {
    require(k >= 1, errc::out_of_range, "density experiment needs k >= 1");
    require(samples >= 1, errc::out_of_range, "density experiment needs samples >= 1");

    std::vector<std::optional<std::string>> outcome(static_cast<size_t>(samples));
    if (threads <= 1) {
        for (int i = 0; i < samples; ++i)
            outcome[static_cast<size_t>(i)] =
                run_density_sample(k, flavor, derive_seed(seed, static_cast<std::uint64_t>(i)));
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int i = next.fetch_add(1); i < samples; i = next.fetch_add(1))
                outcome[static_cast<size_t>(i)] = run_density_sample(
                    k, flavor, derive_seed(seed, static_cast<std::uint64_t>(i)));
        };
        std::vector<std::thread> pool;
        int n = std::min(threads, samples);
        pool.reserve(static_cast<size_t>(n));
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    DensityReport rep;
    rep.k = k;
    rep.flavor = flavor;
    rep.samples = samples;
    rep.master_seed = seed;
    for (int i = 0; i < samples; ++i) {
        if (outcome[static_cast<size_t>(i)])
            rep.failures.emplace_back(i, *outcome[static_cast<size_t>(i)]);
        else
            ++rep.successes;
    }
    return rep;
}

} // namespace gramspec
