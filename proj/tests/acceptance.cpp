// Acceptance suite: one criterion per block, one PASS/FAIL line each, exit 1
// if anything fails.  Criteria exercise the full-size configurations rather
// than the toy cases of the unit tests.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "gramspec/json_io.hpp"

using namespace gramspec;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::map<std::string, std::string> first_json; // payloads kept for the rerun criterion

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

template <class F>
void criterion(const std::string& name, F&& body) {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    std::ostringstream line;
    line << (pass ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) line << " -- " << detail;
    line << " [" << std::fixed << std::setprecision(1) << seconds_since(t0) << "s]";
    std::cout << line.str() << std::endl;
    if (!pass) ++failures;
}

int popcount(std::uint64_t v) {
    int n = 0;
    for (; v; v >>= 1) n += static_cast<int>(v & 1);
    return n;
}

RootList distinct_pair_roots(int d, SplitMix& rng) {
    std::set<std::pair<long, long>> seen;
    std::vector<ProjectivePoint> pts;
    while (static_cast<int>(seen.size()) < d) {
        long a = rng.range(-3, 3), b = rng.range(1, 3);
        if (!seen.insert({a, b}).second) continue;
        pts.push_back(ProjectivePoint::finite(GaussianRational(a, b)));
        pts.push_back(ProjectivePoint::finite(GaussianRational(a, -b)));
    }
    Rational lead = make_rational(rng.range(1, 5), rng.range(1, 3));
    return RootList(GaussianRational(lead), pts);
}

Subspace random_subspace(int degree, int r, bool real, SplitMix& rng) {
    for (;;) {
        std::vector<BinaryForm> gens;
        for (int i = 0; i < r; ++i) {
            std::vector<GaussianRational> c(static_cast<size_t>(degree) + 1);
            for (auto& z : c)
                z = real ? GaussianRational(rng.range(-3, 3))
                         : GaussianRational(rng.range(-3, 3), rng.range(-3, 3));
            gens.emplace_back(degree, std::move(c));
        }
        Subspace u = Subspace::span(degree, gens);
        if (u.dim() > 0) return u;
    }
}

void criterion1() {
    criterion("criterion-1 hermitian simplex faces k=1..5", [] {
        std::ostringstream detail;
        for (int k = 1; k <= 5; ++k) {
            auto t0 = Clock::now();
            ConstructionCertificate c = hermitian_simplex_face(k);
            double secs = seconds_since(t0);
            const int d = k * (k + 1) / 2;
            check(c.f.degree() == 2 * d, "degree is not k(k+1)");
            check(c.report.rank == k + 1, "rank is not k+1");
            check(c.report.dimension == k, "dimension is not k");
            check(c.report.dimension_by_kernel == k, "kernel-route dimension disagrees");
            check(c.report.polyhedral && c.report.simplex, "face is not a simplex");
            check(c.generators.size() == static_cast<size_t>(k + 1), "generator count");
            for (const auto& t : c.generators) check(t.rank() == 1, "generator rank");
            check(max_polyhedral_dim(d, BoundFlavor::hermitian) == k,
                  "d = C(k+1,2) should be exactly tight");
            check(secs < 60.0, "k=" + std::to_string(k) + " exceeded 60s");
            first_json["hermitian-k" + std::to_string(k)] =
                dump_pretty(certificate_json(c));
            detail << "k=" << k << ":" << std::fixed << std::setprecision(1) << secs << "s ";
        }
        return detail.str();
    });
}

void criterion2() {
    criterion("criterion-2 symmetric simplex faces k=1..3", [] {
        std::ostringstream detail;
        for (int k = 1; k <= 3; ++k) {
            auto t0 = Clock::now();
            ConstructionCertificate c = symmetric_simplex_face(k);
            double secs = seconds_since(t0);
            check(c.f.degree() == 2 * (k + 1) * (k + 1), "degree is not 2(k+1)^2");
            check(c.f.is_real(), "symmetric target form must be real");
            check(c.report.rank == 2 * (k + 1), "rank is not 2(k+1)");
            check(c.report.dimension == k, "dimension is not k");
            check(c.report.dimension_by_kernel == k, "kernel-route dimension disagrees");
            check(c.report.polyhedral && c.report.simplex, "face is not a simplex");
            check(c.generators.size() == static_cast<size_t>(k + 1), "generator count");
            for (const auto& t : c.generators) check(t.rank() == 2, "generator rank");

            // Random points of the face: every proper positive combination of
            // a generator subset S must have even rank 2|S|.
            SplitMix rng(0x5eedULL + static_cast<std::uint64_t>(k));
            for (int trial = 0; trial < 20; ++trial) {
                std::uint64_t mask =
                    1 + rng.below((std::uint64_t(1) << (k + 1)) - 1);
                GramTensor sum(c.flavor, c.report.degree,
                               Matrix(c.report.degree + 1, c.report.degree + 1));
                for (int j = 0; j <= k; ++j)
                    if (mask & (std::uint64_t(1) << j))
                        sum = sum + make_rational(rng.range(1, 7), rng.range(1, 5)) *
                                        c.generators[static_cast<size_t>(j)];
                check(sum.rank() == 2 * popcount(mask),
                      "subset combination has rank != 2|S|");
            }
            check(secs < 120.0, "k=" + std::to_string(k) + " exceeded 120s");
            first_json["symmetric-k" + std::to_string(k)] =
                dump_pretty(certificate_json(c));
            detail << "k=" << k << ":" << std::fixed << std::setprecision(1) << secs << "s ";
        }
        return detail.str();
    });
}

struct GoldenRow {
    int r, lower, upper;
    std::vector<int> excluded;
};

void expect_diagram(int d, Flavor flavor, const std::vector<GoldenRow>& expect) {
    auto rows = diagram(d, flavor);
    check(rows.size() == expect.size(), "row count");
    for (size_t i = 0; i < rows.size(); ++i) {
        check(rows[i].r == expect[i].r && rows[i].lower == expect[i].lower &&
                  rows[i].upper == expect[i].upper && rows[i].excluded == expect[i].excluded,
              "diagram d=" + std::to_string(d) + " row r=" + std::to_string(expect[i].r));
    }
    first_json["diagram-d" + std::to_string(d) + "-" + flavor_name(flavor)] =
        dump_pretty(diagram_json(d, flavor));
}

void criterion3() {
    criterion("criterion-3 rank-dimension diagrams d=5,8", [] {
        expect_diagram(5, Flavor::symmetric, {{1, 0, 0, {}},
                                              {2, 0, 0, {}},
                                              {3, 0, 1, {}},
                                              {4, 0, 3, {}},
                                              {5, 4, 6, {6}},
                                              {6, 10, 10, {}}});
        expect_diagram(5, Flavor::hermitian, {{1, 0, 0, {}},
                                              {2, 0, 1, {}},
                                              {3, 0, 4, {}},
                                              {4, 5, 9, {}},
                                              {5, 14, 16, {}},
                                              {6, 25, 25, {}}});
        expect_diagram(8, Flavor::symmetric, {{1, 0, 0, {}},
                                              {2, 0, 0, {}},
                                              {3, 0, 1, {}},
                                              {4, 0, 3, {}},
                                              {5, 0, 6, {}},
                                              {6, 4, 10, {}},
                                              {7, 11, 15, {}},
                                              {8, 19, 21, {21}},
                                              {9, 28, 28, {}}});
        expect_diagram(8, Flavor::hermitian, {{1, 0, 0, {}},
                                              {2, 0, 1, {}},
                                              {3, 0, 4, {}},
                                              {4, 0, 9, {}},
                                              {5, 8, 16, {}},
                                              {6, 19, 25, {}},
                                              {7, 32, 36, {}},
                                              {8, 47, 49, {}},
                                              {9, 64, 64, {}}});
        return std::string("4 golden tables incl. the r=d exclusions");
    });
}

void criterion4() {
    criterion("criterion-4 rank-one enumeration d=1..10", [] {
        auto t0 = Clock::now();
        for (int d = 1; d <= 10; ++d) {
            std::vector<ProjectivePoint> pts;
            for (int j = 1; j <= d; ++j) {
                pts.push_back(ProjectivePoint::finite(GaussianRational(0, j)));
                pts.push_back(ProjectivePoint::finite(GaussianRational(0, -j)));
            }
            RootList roots(GaussianRational(1), pts);
            RankOneFamily fam(roots);
            check(fam.size() == (std::uint64_t(1) << d), "family size is not 2^d");
            BinaryForm f = expand_roots(roots);
            std::set<std::string> distinct;
            for (std::uint64_t sel = 0; sel < fam.size(); ++sel) {
                GramTensor t = fam.theta(sel);
                check(t.rank() == 1, "selection rank");
                check(t.mu() == f, "selection does not represent f");
                distinct.insert(dump_pretty(tensor_json(t)));
            }
            check(distinct.size() == fam.size(), "tensors are not pairwise distinct");
        }

        // gcd rank bounds over random selector subsets of the d=6 family.
        std::vector<ProjectivePoint> pts6;
        for (int j = 1; j <= 6; ++j) {
            pts6.push_back(ProjectivePoint::finite(GaussianRational(0, j)));
            pts6.push_back(ProjectivePoint::finite(GaussianRational(0, -j)));
        }
        RankOneFamily fam6(RootList(GaussianRational(1), pts6));
        SplitMix rng(0xabcdULL);
        for (int trial = 0; trial < 200; ++trial) {
            int size = 2 + static_cast<int>(rng.below(5));
            std::vector<BinaryForm> ps;
            std::set<std::uint64_t> used;
            while (static_cast<int>(ps.size()) < size) {
                std::uint64_t sel = rng.below(fam6.size());
                if (used.insert(sel).second) ps.push_back(fam6.p(sel));
            }
            auto b = gcd_rank_bound(ps);
            check(b.actual >= 1 && b.actual <= b.bound && b.bound <= 7,
                  "gcd bound violated");
        }

        // Low-rank selections stay under ceil(log2 s) + 1 for d <= 6.
        for (int d = 1; d <= 6; ++d) {
            std::vector<ProjectivePoint> pts;
            for (int j = 1; j <= d; ++j) {
                pts.push_back(ProjectivePoint::finite(GaussianRational(0, j)));
                pts.push_back(ProjectivePoint::finite(GaussianRational(0, -j)));
            }
            RootList roots(GaussianRational(1), pts);
            std::uint64_t top = std::uint64_t(1) << d;
            for (std::uint64_t s : {std::uint64_t(2), std::uint64_t(3), top - 1, top}) {
                if (s < 2 || s > top) continue;
                auto sel = low_rank_selection(roots, s);
                check(sel.size() == s, "selection size");
                GramTensor sum = sel[0];
                for (size_t i = 1; i < sel.size(); ++i) sum = sum + sel[i];
                int bound = 1;
                while ((std::uint64_t(1) << bound) < s) ++bound;
                ++bound;
                check(sum.rank() <= bound, "low-rank sum exceeds ceil(log2 s)+1");
            }
        }
        check(seconds_since(t0) < 60.0, "criterion exceeded 60s");
        return std::string("2046 selections verified, 200 gcd subsets, low-rank sums d<=6");
    });
}

void criterion5() {
    criterion("criterion-5 dimension formula vs kernel, 500 per flavor per d=2..8", [] {
        SplitMix rng(0x51deULL);
        long cases = 0;
        for (int d = 2; d <= 8; ++d) {
            for (Flavor flavor : {Flavor::symmetric, Flavor::hermitian}) {
                for (int i = 0; i < 500; ++i) {
                    int r = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 1));
                    Subspace u = random_subspace(d, r, flavor == Flavor::symmetric, rng);
                    int by_formula = face_dimension_formula(u, flavor);
                    int by_kernel = face_dimension_kernel(u, flavor);
                    check(by_formula == by_kernel, "routes disagree at d=" + std::to_string(d));
                    ++cases;
                }
            }
        }
        return std::to_string(cases) + " subspaces agreed";
    });
}

void criterion6() {
    criterion("criterion-6 product dimension bounds, 500 per d=3..10", [] {
        SplitMix rng(0x6b0bULL);
        long equality_hits = 0, certified = 0;
        for (int d = 3; d <= 10; ++d) {
            for (int i = 0; i < 500; ++i) {
                bool real = (i % 2) == 0;
                int r = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 1));
                Subspace u = random_subspace(d, r, real, rng);
                int dim = u.dim();
                int uu = product(u, u).dim();
                check(uu >= 2 * dim - 1, "dim(UU) < 2 dim(U) - 1");
                check(product(u, conj_space(u)).dim() >= 2 * dim - 1,
                      "dim(U conj U) < 2 dim(U) - 1");
                if (u.is_real() && uu == 2 * dim - 1) {
                    ++equality_hits;
                    if (dim == d) {
                        auto cert = common_real_root_certificate(u);
                        check(cert.status != RootCertStatus::not_applicable,
                              "equality case at full dim lacks a real root");
                        ++certified;
                    }
                }
            }

            // Engineered equality cases at dim(U) = d: a rational linear
            // factor, the factor y, and an irrational quadratic factor.
            BinaryForm x = BinaryForm::monomial(1, 0), y = BinaryForm::monomial(1, 1);
            auto times_full = [](const BinaryForm& g, int deg) {
                std::vector<BinaryForm> gens;
                for (int j = 0; j <= deg; ++j) gens.push_back(g * BinaryForm::monomial(deg, j));
                return Subspace::span(g.degree() + deg, gens);
            };
            long c = rng.range(-5, 5);
            Subspace u1 = times_full(x - GaussianRational(c) * y, d - 1);
            check(product(u1, u1).dim() == 2 * d - 1, "engineered case misses equality");
            auto cert1 = common_real_root_certificate(u1);
            check(cert1.status == RootCertStatus::point, "expected a rational point");
            Subspace u2 = times_full(y, d - 1);
            auto cert2 = common_real_root_certificate(u2);
            check(cert2.status == RootCertStatus::point && cert2.point->is_infinity(),
                  "expected the point (1:0)");
            Subspace u3 = times_full(x * x - GaussianRational(2) * (y * y), d - 2);
            auto cert3 = common_real_root_certificate(u3);
            check(cert3.status == RootCertStatus::interval, "expected an isolating interval");
            certified += 3;
        }
        return "4000 random subspaces, " + std::to_string(equality_hits) +
               " equality hits, " + std::to_string(certified) + " root certificates";
    });
}

void criterion7() {
    criterion("criterion-7 factorization faces on 20 root lists", [] {
        SplitMix rng(0x7aceULL);
        long faces = 0;
        for (int trial = 0; trial < 20; ++trial) {
            int d = 1 + static_cast<int>(rng.below(8));
            RootList roots = distinct_pair_roots(d, rng);
            for (int r = 1; r <= d + 1; ++r) {
                FaceReport rep = face_from_factorization(roots, r);
                check(rep.rank == r, "face rank");
                check(rep.dimension == (r - 1) * (r - 1), "face dimension != (r-1)^2");
                check(rep.dimension_by_kernel == rep.dimension, "kernel route disagrees");
                ++faces;
            }
        }
        return std::to_string(faces) + " faces across degrees up to 8";
    });
}

void criterion8() {
    criterion("criterion-8 density of valid constructions", [] {
        unsigned hw = std::thread::hardware_concurrency();
        int threads = static_cast<int>(hw ? (hw < 4 ? hw : 4) : 1);
        DensityReport h = density_experiment(2, 100, 2024, Flavor::hermitian, threads);
        check(h.successes == h.samples && h.failures.empty(), "hermitian ratio below 1");
        check(h.ratio() == 1, "hermitian ratio is not exactly 1");
        DensityReport s = density_experiment(1, 100, 2025, Flavor::symmetric, threads);
        check(s.successes == s.samples && s.failures.empty(), "symmetric ratio below 1");
        check(s.ratio() == 1, "symmetric ratio is not exactly 1");
        return "hermitian k=2: 100/100, symmetric k=1: 100/100";
    });
}

void criterion9() {
    criterion("criterion-9 byte-identical reruns of criteria 1-3 output", [] {
        long compared = 0;
        for (int k = 1; k <= 5; ++k) {
            std::string key = "hermitian-k" + std::to_string(k);
            check(first_json.count(key) == 1, "missing first-run payload " + key);
            check(dump_pretty(certificate_json(hermitian_simplex_face(k))) == first_json[key],
                  key + " differs between runs");
            ++compared;
        }
        for (int k = 1; k <= 3; ++k) {
            std::string key = "symmetric-k" + std::to_string(k);
            check(first_json.count(key) == 1, "missing first-run payload " + key);
            check(dump_pretty(certificate_json(symmetric_simplex_face(k))) == first_json[key],
                  key + " differs between runs");
            ++compared;
        }
        for (int d : {5, 8}) {
            for (Flavor flavor : {Flavor::symmetric, Flavor::hermitian}) {
                std::string key =
                    "diagram-d" + std::to_string(d) + "-" + flavor_name(flavor);
                check(dump_pretty(diagram_json(d, flavor)) == first_json[key],
                      key + " differs between runs");
                ++compared;
            }
        }
        return std::to_string(compared) + " payloads byte-identical";
    });
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::cout << "acceptance: " << (9 - failures) << "/9 criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
