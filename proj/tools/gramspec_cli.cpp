#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gramspec/json_io.hpp"

using namespace gramspec;

namespace {

struct Output {
    std::string format = "text"; // "text" | "json"
    std::string path;            // empty = stdout

    bool json() const { return format == "json"; }

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) fail(errc::parse_error, "cannot open output file " + path);
        f << text;
    }
};

Json load_json(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(errc::parse_error, "cannot open input file " + path);
    try {
        return Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, "invalid JSON in " + path + ": " + e.what());
    }
}

std::string face_report_text(const FaceReport& r) {
    std::ostringstream os;
    os << "flavor: " << flavor_name(r.flavor) << "\n";
    os << "degree: " << r.degree << " (forms of degree " << 2 * r.degree << ")\n";
    os << "rank: " << r.rank << "\n";
    os << "dimension: " << r.dimension << " (kernel route: " << r.dimension_by_kernel << ")\n";
    os << "polyhedral: " << (r.polyhedral ? "yes" : "no") << "\n";
    os << "simplex: " << (r.simplex ? "yes" : "no") << "\n";
    os << "generators: " << r.generators.size() << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

std::string certificate_text(const ConstructionCertificate& c) {
    std::ostringstream os;
    os << "certificate: " << flavor_name(c.flavor) << " " << c.k << "-simplex face\n";
    os << "d: " << c.f.degree() / 2 << " (target form of degree " << c.f.degree() << ")\n";
    os << "roots:";
    for (const auto& p : c.roots.points()) os << " " << p.str();
    os << "\n";
    os << face_report_text(c.report);
    os << "trace records: " << c.trace.size() << "\n";
    return os.str();
}

std::string root_certificate_text(const RootCertificate& c) {
    std::ostringstream os;
    os << "status: " << root_cert_status_name(c.status) << "\n";
    os << "gcd: " << c.gcd.str() << "\n";
    if (c.point) os << "root: " << c.point->str() << "\n";
    if (c.lo && c.hi)
        os << "isolating interval: (" << rational_str(*c.lo) << ", " << rational_str(*c.hi)
           << "]\n";
    for (const auto& n : c.notes) os << "note: " << n << "\n";
    return os.str();
}

std::string density_text(const DensityReport& r) {
    std::ostringstream os;
    os << "density: " << flavor_name(r.flavor) << " k=" << r.k << ", " << r.samples
       << " samples, " << r.successes << " succeeded, ratio " << rational_str(r.ratio())
       << "\n";
    for (const auto& [index, reason] : r.failures)
        os << "failure at sample " << index << ": " << reason << "\n";
    return os.str();
}

// ---------------------------------------------------------------- verify --

struct CheckLog {
    struct Entry {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Entry> entries;

    template <class F>
    void run(const std::string& name, F&& body) {
        try {
            body();
            entries.push_back({name, true, ""});
        } catch (const std::exception& e) {
            entries.push_back({name, false, e.what()});
        }
    }

    bool all_passed() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }

    std::string text() const {
        std::ostringstream os;
        int passed = 0;
        for (const auto& e : entries) {
            if (e.pass) {
                os << "PASS " << e.name << "\n";
                ++passed;
            } else {
                os << "FAIL " << e.name << ": " << e.detail << "\n";
            }
        }
        os << "passed " << passed << "/" << entries.size() << " checks\n";
        return os.str();
    }

    Json json(const std::string& suite) const {
        Json checks = Json::array();
        for (const auto& e : entries) {
            Json c = Json::object();
            c["name"] = e.name;
            c["pass"] = e.pass;
            c["detail"] = e.detail;
            checks.push_back(std::move(c));
        }
        Json j = Json::object();
        j["suite"] = suite;
        j["checks"] = std::move(checks);
        j["passed"] = all_passed();
        return j;
    }
};

void check(bool cond, const std::string& what) {
    require(cond, errc::cross_check_failed, what);
}

struct GoldenRow {
    int r, lower, upper;
    std::vector<int> excluded;
};

void check_diagram(int d, Flavor flavor, const std::vector<GoldenRow>& expected) {
    auto rows = diagram(d, flavor);
    check(rows.size() == expected.size(), "row count mismatch");
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& got = rows[i];
        const auto& want = expected[i];
        check(got.r == want.r && got.lower == want.lower && got.upper == want.upper &&
                  got.excluded == want.excluded,
              "row r=" + std::to_string(want.r) + " mismatch");
    }
}

void check_certificate_in_diagram(const ConstructionCertificate& c) {
    const int d = c.f.degree() / 2;
    auto rows = diagram(d, c.flavor);
    check(c.report.rank >= 1 && c.report.rank <= d + 1, "certificate rank out of range");
    const auto& row = rows[static_cast<size_t>(c.report.rank - 1)];
    check(row.r == c.report.rank, "diagram row misaligned");
    check(row.lower <= c.report.dimension && c.report.dimension <= row.upper,
          "certificate dimension outside its diagram row");
    for (int ex : row.excluded)
        check(c.report.dimension != ex, "certificate dimension hits an excluded value");
}

void suite_bounds(CheckLog& log) {
    log.run("diagram-d5-symmetric", [] {
        check_diagram(5, Flavor::symmetric,
                      {{1, 0, 0, {}},
                       {2, 0, 0, {}},
                       {3, 0, 1, {}},
                       {4, 0, 3, {}},
                       {5, 4, 6, {6}},
                       {6, 10, 10, {}}});
    });
    log.run("diagram-d8-symmetric", [] {
        check_diagram(8, Flavor::symmetric,
                      {{1, 0, 0, {}},
                       {2, 0, 0, {}},
                       {3, 0, 1, {}},
                       {4, 0, 3, {}},
                       {5, 0, 6, {}},
                       {6, 4, 10, {}},
                       {7, 11, 15, {}},
                       {8, 19, 21, {21}},
                       {9, 28, 28, {}}});
    });
    log.run("diagram-d5-hermitian", [] {
        check_diagram(5, Flavor::hermitian,
                      {{1, 0, 0, {}},
                       {2, 0, 1, {}},
                       {3, 0, 4, {}},
                       {4, 5, 9, {}},
                       {5, 14, 16, {}},
                       {6, 25, 25, {}}});
    });
    log.run("diagram-d8-hermitian", [] {
        check_diagram(8, Flavor::hermitian,
                      {{1, 0, 0, {}},
                       {2, 0, 1, {}},
                       {3, 0, 4, {}},
                       {4, 0, 9, {}},
                       {5, 8, 16, {}},
                       {6, 19, 25, {}},
                       {7, 32, 36, {}},
                       {8, 47, 49, {}},
                       {9, 64, 64, {}}});
    });
    log.run("max-polyhedral-dim", [] {
        check(max_polyhedral_dim(3, BoundFlavor::hermitian) == 2, "hermitian d=3");
        check(max_polyhedral_dim(10, BoundFlavor::hermitian) == 4, "hermitian d=10");
        check(max_polyhedral_dim(5, BoundFlavor::symmetric_generic) == 1, "symmetric d=5");
    });
    log.run("root-certificate-monomial-factor", [] {
        std::vector<BinaryForm> gens;
        for (int j = 0; j < 3; ++j) gens.push_back(BinaryForm::monomial(3, j));
        auto cert = common_real_root_certificate(Subspace::span(3, gens));
        check(cert.status == RootCertStatus::point, "expected a point");
        check(cert.point && !cert.point->is_infinity() && cert.point->value().is_zero(),
              "expected root (0:1)");
    });
    log.run("root-certificate-linear-factor", [] {
        BinaryForm x = BinaryForm::monomial(1, 0), y = BinaryForm::monomial(1, 1);
        BinaryForm g = x - y;
        std::vector<BinaryForm> gens;
        for (int j = 0; j < 3; ++j) gens.push_back(g * BinaryForm::monomial(2, j));
        auto cert = common_real_root_certificate(Subspace::span(3, gens));
        check(cert.status == RootCertStatus::point, "expected a point");
        check(cert.point && !cert.point->is_infinity() &&
                  cert.point->value() == GaussianRational(1),
              "expected root (1:1)");
    });
    log.run("root-certificate-sqrt2-interval", [] {
        BinaryForm g(2, {GaussianRational(1), GaussianRational(0), GaussianRational(-2)});
        std::vector<BinaryForm> gens;
        for (int j = 0; j < 2; ++j) gens.push_back(g * BinaryForm::monomial(1, j));
        auto cert = common_real_root_certificate(Subspace::span(3, gens));
        check(cert.status == RootCertStatus::interval, "expected an interval");
        check(cert.lo && cert.hi && *cert.lo < *cert.hi, "interval endpoints missing");
        Rational lo2 = *cert.lo * *cert.lo, hi2 = *cert.hi * *cert.hi;
        check((lo2 < 2 && 2 < hi2) || (hi2 < 2 && 2 < lo2),
              "interval does not straddle either square root of 2");
    });
    log.run("certificates-inside-diagram", [] {
        for (int k = 1; k <= 3; ++k)
            check_certificate_in_diagram(hermitian_simplex_face(k));
        for (int k = 1; k <= 2; ++k)
            check_certificate_in_diagram(symmetric_simplex_face(k));
    });
}

void suite_constructions(CheckLog& log) {
    for (int k = 1; k <= 3; ++k) {
        log.run("hermitian-plain-k" + std::to_string(k), [k] {
            auto c = hermitian_simplex_face(k);
            check(c.report.rank == k + 1 && c.report.dimension == k, "rank/dimension");
            check(c.f.degree() == k * (k + 1), "degree tightness d = C(k+1,2)");
        });
        log.run("hermitian-qi-k" + std::to_string(k), [k] {
            auto c = hermitian_simplex_face(k, HermitianVariant::quadratically_independent);
            check(c.report.rank == k + 1 && c.report.dimension == k, "rank/dimension");
        });
    }
    for (int k = 1; k <= 2; ++k) {
        log.run("symmetric-k" + std::to_string(k), [k] {
            auto c = symmetric_simplex_face(k);
            check(c.report.rank == 2 * (k + 1) && c.report.dimension == k, "rank/dimension");
            check(c.f.degree() == 2 * (k + 1) * (k + 1), "degree d = (k+1)^2");
        });
    }
    log.run("recursion-consistency", [] {
        auto c = hermitian_simplex_face(3);
        check(c.trace.size() == 3, "expected one trace record per level");
        BinaryForm running = c.trace[0].g; // base-level form
        for (size_t l = 1; l < c.trace.size(); ++l) {
            check(c.trace[l].g == running, "level g must equal the previous level's f");
            check(c.trace[l].s.has_value(), "step record lacks s");
            running = *c.trace[l].s * c.trace[l].s->conj() * running;
        }
        check(running == c.f, "trace does not rebuild the certificate form");
    });
}

void suite_density(CheckLog& log, int samples, std::uint64_t seed) {
    unsigned hw = std::thread::hardware_concurrency();
    int threads = static_cast<int>(hw ? (hw < 4 ? hw : 4) : 1);
    log.run("density-hermitian-k2", [&] {
        auto rep = density_experiment(2, samples, seed, Flavor::hermitian, threads);
        check(rep.successes == rep.samples,
              std::to_string(rep.failures.size()) + " samples failed");
    });
    log.run("density-symmetric-k1", [&] {
        auto rep = density_experiment(1, samples, seed, Flavor::symmetric, threads);
        check(rep.successes == rep.samples,
              std::to_string(rep.failures.size()) + " samples failed");
    });
}

// ------------------------------------------------------------ subcommands --

int run_construct(const Output& out, const std::string& flavor, int k,
                  const std::string& variant, bool random_scalars, std::uint64_t seed) {
    ConstructOptions opts;
    opts.random_scalars = random_scalars;
    opts.seed = seed;
    ConstructionCertificate cert;
    if (flavor == "hermitian") {
        HermitianVariant v = (variant == "qi" || variant == "quadratically-independent")
                                 ? HermitianVariant::quadratically_independent
                                 : HermitianVariant::plain;
        cert = hermitian_simplex_face(k, v, opts);
    } else {
        cert = symmetric_simplex_face(k, opts);
    }
    out.emit(out.json() ? dump_pretty(certificate_json(cert)) : certificate_text(cert));
    return 0;
}

int run_analyze(const Output& out, const std::string& tensors_path,
                const std::string& flavor) {
    Json j = load_json(tensors_path);
    require(j.is_array() && !j.empty(), errc::parse_error,
            "tensors file must be a nonempty JSON array of tensors");
    std::vector<GramTensor> thetas;
    thetas.reserve(j.size());
    for (const auto& t : j) thetas.push_back(tensor_from_json(t));
    if (!flavor.empty()) {
        Flavor want = flavor_from_json(Json(flavor));
        for (const auto& t : thetas)
            require(t.flavor() == want, errc::mixed_flavors,
                    "tensor flavor does not match --flavor");
    }
    FaceReport report = supporting_face(thetas);
    out.emit(out.json() ? dump_pretty(face_report_json(report)) : face_report_text(report));
    return 0;
}

int run_rank_one(const Output& out, const std::string& roots_path, bool count, bool enumerate,
                 std::int64_t low_rank) {
    RootList roots = roots_from_json(load_json(roots_path));
    RankOneFamily family(roots);
    const int d = family.pair_count();
    if (count) {
        if (out.json()) {
            Json j = Json::object();
            j["pairs"] = d;
            j["count"] = family.size();
            out.emit(dump_pretty(j));
        } else {
            std::ostringstream os;
            os << "2^" << d << " = " << family.size() << "\n";
            out.emit(os.str());
        }
        return 0;
    }
    if (enumerate) {
        require(d <= 12, errc::out_of_range, "enumerate is limited to 12 conjugate pairs");
        if (out.json()) {
            Json arr = Json::array();
            for (std::uint64_t sel = 0; sel < family.size(); ++sel) {
                Json e = Json::object();
                e["selector"] = sel;
                e["p"] = form_json(family.p(sel));
                e["theta"] = tensor_json(family.theta(sel));
                arr.push_back(std::move(e));
            }
            out.emit(dump_pretty(arr));
        } else {
            std::ostringstream os;
            for (std::uint64_t sel = 0; sel < family.size(); ++sel)
                os << "selector " << sel << ": p = " << family.p(sel).str() << "\n";
            out.emit(os.str());
        }
        return 0;
    }
    // --low-rank S
    require(low_rank >= 0, errc::out_of_range, "low-rank selection size must be nonnegative");
    auto tensors = low_rank_selection(roots, static_cast<std::uint64_t>(low_rank));
    GramTensor sum = tensors[0];
    for (size_t i = 1; i < tensors.size(); ++i) sum = sum + tensors[i];
    int bound = 1;
    while ((std::uint64_t(1) << bound) < static_cast<std::uint64_t>(low_rank)) ++bound;
    ++bound; // ceil(log2 s) + 1
    if (out.json()) {
        Json j = Json::object();
        j["s"] = low_rank;
        j["rank"] = sum.rank();
        j["bound"] = bound;
        Json arr = Json::array();
        for (const auto& t : tensors) arr.push_back(tensor_json(t));
        j["tensors"] = std::move(arr);
        out.emit(dump_pretty(j));
    } else {
        std::ostringstream os;
        os << "s = " << low_rank << " rank-one tensors, sum rank " << sum.rank()
           << " <= bound " << bound << "\n";
        out.emit(os.str());
    }
    return 0;
}

int run_factor_face(const Output& out, const std::string& roots_path, int r) {
    RootList roots = roots_from_json(load_json(roots_path));
    FaceReport report = face_from_factorization(roots, r);
    out.emit(out.json() ? dump_pretty(face_report_json(report)) : face_report_text(report));
    return 0;
}

int run_diagram(const Output& out, int d, const std::string& flavor) {
    Flavor f = flavor_from_json(Json(flavor));
    out.emit(out.json() ? dump_pretty(diagram_json(d, f)) : diagram_text(d, f));
    return 0;
}

int run_root_certificate(const Output& out, const std::string& subspace_path) {
    Subspace u = subspace_from_json(load_json(subspace_path));
    RootCertificate cert = common_real_root_certificate(u);
    out.emit(out.json() ? dump_pretty(root_certificate_json(cert))
                        : root_certificate_text(cert));
    return 0;
}

int run_verify(const Output& out, const std::string& suite, int samples, std::uint64_t seed) {
    CheckLog log;
    if (suite == "bounds")
        suite_bounds(log);
    else if (suite == "constructions")
        suite_constructions(log);
    else if (suite == "density")
        suite_density(log, samples, seed);
    else
        fail(errc::parse_error, "unknown suite (expected bounds|constructions|density)");
    out.emit(out.json() ? dump_pretty(log.json(suite)) : log.text());
    return log.all_passed() ? 0 : 1;
}

std::uint64_t default_seed() {
    const char* env = std::getenv("GRAMSPEC_SEED");
    if (!env || !*env) return 0;
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') fail(errc::parse_error, "GRAMSPEC_SEED must be a decimal integer");
    return v;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact polyhedral faces of Gram spectrahedra of binary forms"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", out.path, "write the report to a file instead of stdout");

    std::uint64_t seed = 0;
    bool seed_given = false;
    app.add_option("--seed", seed, "seed for randomized scalar picking")
        ->each([&](const std::string&) { seed_given = true; });

    std::string flavor = "hermitian";
    int k = 1;
    std::string variant = "plain";
    bool random_scalars = false;
    auto* construct = app.add_subcommand("construct", "build a simplex-face certificate");
    construct->add_option("--flavor", flavor, "hermitian|symmetric")
        ->check(CLI::IsMember({"hermitian", "symmetric"}))
        ->capture_default_str();
    construct->add_option("--k", k, "simplex dimension")->required();
    construct->add_option("--variant", variant, "plain|qi (hermitian only)")
        ->check(CLI::IsMember({"plain", "qi", "quadratically-independent"}))
        ->capture_default_str();
    construct->add_flag("--random-scalars", random_scalars,
                        "use the seeded random scalar picker");

    std::string tensors_path;
    std::string analyze_flavor;
    auto* analyze = app.add_subcommand("analyze", "face report for tensors with a common mu");
    analyze->add_option("--tensors", tensors_path, "JSON array of Gram tensors")->required();
    analyze->add_option("--flavor", analyze_flavor, "require this flavor on every tensor");

    std::string roots_path;
    bool count = false, enumerate = false;
    std::int64_t low_rank = -1;
    auto* rank_one = app.add_subcommand("rank-one", "rank-one tensors of a positive form");
    rank_one->add_option("--roots", roots_path, "JSON root list of the form")->required();
    rank_one->add_flag("--count", count, "print the number of selections");
    rank_one->add_flag("--enumerate", enumerate, "list all selections");
    rank_one->add_option("--low-rank", low_rank, "select s tensors with a low-rank sum");

    std::string ff_roots_path;
    int ff_r = 1;
    auto* factor_face = app.add_subcommand("factor-face", "face cut out by a partial factorization");
    factor_face->add_option("--roots", ff_roots_path, "JSON root list of the form")->required();
    factor_face->add_option("--r", ff_r, "target face rank")->required();

    int diagram_d = 1;
    std::string diagram_flavor = "hermitian";
    auto* diagram_cmd = app.add_subcommand("diagram", "rank-dimension diagram");
    diagram_cmd->add_option("--d", diagram_d, "half the form degree")->required();
    diagram_cmd->add_option("--flavor", diagram_flavor, "hermitian|symmetric")
        ->check(CLI::IsMember({"hermitian", "symmetric"}))
        ->capture_default_str();

    std::string subspace_path;
    auto* root_cert = app.add_subcommand("root-certificate",
                                         "common real root in the minimal product regime");
    root_cert->add_option("--subspace", subspace_path, "JSON subspace")->required();

    std::string suite;
    int samples = 20;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "bounds|constructions|density")->required();
    verify->add_option("--samples", samples, "density samples per flavor")
        ->capture_default_str();

    for (auto* sub : {construct, analyze, rank_one, factor_face, diagram_cmd, root_cert, verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!seed_given) seed = default_seed();
        if (app.got_subcommand(construct))
            return run_construct(out, flavor, k, variant, random_scalars, seed);
        if (app.got_subcommand(analyze)) return run_analyze(out, tensors_path, analyze_flavor);
        if (app.got_subcommand(rank_one)) {
            int modes = (count ? 1 : 0) + (enumerate ? 1 : 0) + (low_rank >= 0 ? 1 : 0);
            require(modes == 1, errc::parse_error,
                    "pick exactly one of --count, --enumerate, --low-rank");
            return run_rank_one(out, roots_path, count, enumerate, low_rank);
        }
        if (app.got_subcommand(factor_face)) return run_factor_face(out, ff_roots_path, ff_r);
        if (app.got_subcommand(diagram_cmd)) return run_diagram(out, diagram_d, diagram_flavor);
        if (app.got_subcommand(root_cert)) return run_root_certificate(out, subspace_path);
        if (app.got_subcommand(verify)) return run_verify(out, suite, samples, seed);
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        bool verification_failure = e.code() == errc::internal_contradiction ||
                                    e.code() == errc::cross_check_failed;
        return verification_failure ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
