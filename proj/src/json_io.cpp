#include "gramspec/json_io.hpp"

#include <stdexcept>
#include <utility>

namespace gramspec {

namespace {

void expect(bool cond, const char* what) {
    if (!cond) fail(errc::parse_error, what);
}

const Json& member(const Json& j, const char* key) {
    expect(j.is_object(), "expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) fail(errc::parse_error, std::string("missing field \"") + key + "\"");
    return *it;
}

int int_member(const Json& j, const char* key) {
    const Json& v = member(j, key);
    expect(v.is_number_integer(), "expected an integer field");
    return v.get<int>();
}

mpz_class parse_bigint(const Json& j) {
    expect(j.is_string(), "scalar components must be decimal strings");
    try {
        return mpz_class(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
        fail(errc::parse_error, "malformed decimal integer string");
    }
}

Json point_json(const ProjectivePoint& p) {
    if (p.is_infinity()) return Json("inf");
    return scalar_json(p.value());
}

ProjectivePoint point_from_json(const Json& j) {
    if (j.is_string()) {
        expect(j.get<std::string>() == "inf", "projective point must be a scalar or \"inf\"");
        return ProjectivePoint::infinity();
    }
    return ProjectivePoint::finite(scalar_from_json(j));
}

Json rational_json(const Rational& q) {
    return scalar_json(GaussianRational(q));
}

Json trace_json(const TraceRecord& rec) {
    Json j = Json::object();
    j["kind"] = rec.kind;
    j["level"] = rec.level;
    j["g"] = form_json(rec.g);
    if (rec.u_prev) j["u_prev"] = subspace_json(*rec.u_prev);
    if (!rec.betas.empty()) {
        Json betas = Json::array();
        for (const auto& b : rec.betas) betas.push_back(scalar_json(b));
        j["betas"] = std::move(betas);
    }
    if (rec.s) j["s"] = form_json(*rec.s);
    if (rec.t) j["t"] = form_json(*rec.t);
    if (rec.q) j["q"] = form_json(*rec.q);
    if (!rec.gammas.empty()) {
        Json gammas = Json::array();
        for (const auto& g : rec.gammas) gammas.push_back(scalar_json(g));
        j["gammas"] = std::move(gammas);
    }
    return j;
}

} // namespace

Json scalar_json(const GaussianRational& z) {
    return Json::array({z.re().get_num().get_str(), z.re().get_den().get_str(),
                        z.im().get_num().get_str(), z.im().get_den().get_str()});
}

GaussianRational scalar_from_json(const Json& j) {
    expect(j.is_array() && j.size() == 4, "scalar must be [re_num, re_den, im_num, im_den]");
    mpz_class ren = parse_bigint(j[0]), red = parse_bigint(j[1]);
    mpz_class imn = parse_bigint(j[2]), imd = parse_bigint(j[3]);
    expect(sgn(red) != 0 && sgn(imd) != 0, "scalar denominator is zero");
    return {make_rational(ren, red), make_rational(imn, imd)};
}

Json form_json(const BinaryForm& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(scalar_json(c));
    Json j = Json::object();
    j["degree"] = f.degree();
    j["coeffs"] = std::move(coeffs);
    return j;
}

BinaryForm form_from_json(const Json& j) {
    int degree = int_member(j, "degree");
    const Json& coeffs = member(j, "coeffs");
    expect(coeffs.is_array(), "form coefficients must be an array");
    expect(static_cast<int>(coeffs.size()) == degree + 1,
           "form needs exactly degree+1 coefficients");
    std::vector<GaussianRational> cs;
    cs.reserve(coeffs.size());
    for (const auto& c : coeffs) cs.push_back(scalar_from_json(c));
    return {degree, std::move(cs)};
}

Json roots_json(const RootList& roots) {
    Json points = Json::array();
    for (const auto& p : roots.points()) points.push_back(point_json(p));
    Json j = Json::object();
    j["lead"] = scalar_json(roots.lead());
    j["points"] = std::move(points);
    return j;
}

RootList roots_from_json(const Json& j) {
    GaussianRational lead = scalar_from_json(member(j, "lead"));
    const Json& points = member(j, "points");
    expect(points.is_array(), "root points must be an array");
    std::vector<ProjectivePoint> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.push_back(point_from_json(p));
    return {std::move(lead), std::move(pts)};
}

Json matrix_json(const Matrix& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) entries.push_back(scalar_json(m.at(i, j)));
    Json j = Json::object();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = std::move(entries);
    return j;
}

Matrix matrix_from_json(const Json& j) {
    int rows = int_member(j, "rows");
    int cols = int_member(j, "cols");
    expect(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
    const Json& entries = member(j, "entries");
    expect(entries.is_array() &&
               static_cast<long long>(entries.size()) == 1LL * rows * cols,
           "matrix needs rows*cols entries");
    Matrix m(rows, cols);
    size_t idx = 0;
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(entries[idx++]);
    return m;
}

Json subspace_json(const Subspace& u) {
    Json j = Json::object();
    j["degree"] = u.degree();
    j["basis"] = matrix_json(u.basis());
    return j;
}

Subspace subspace_from_json(const Json& j) {
    int degree = int_member(j, "degree");
    expect(degree >= 0, "subspace degree must be nonnegative");
    Matrix m = matrix_from_json(member(j, "basis"));
    if (m.rows() == 0) return Subspace(degree);
    expect(m.cols() == degree + 1, "subspace basis rows must have degree+1 entries");
    std::vector<BinaryForm> gens;
    gens.reserve(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<GaussianRational> cs;
        cs.reserve(static_cast<size_t>(m.cols()));
        for (int c = 0; c < m.cols(); ++c) cs.push_back(m.at(i, c));
        gens.emplace_back(degree, std::move(cs));
    }
    return Subspace::span(degree, gens);
}

Json tensor_json(const GramTensor& t) {
    Json j = Json::object();
    j["flavor"] = flavor_name(t.flavor());
    j["degree"] = t.degree();
    j["matrix"] = matrix_json(t.matrix());
    return j;
}

GramTensor tensor_from_json(const Json& j) {
    Flavor flavor = flavor_from_json(member(j, "flavor"));
    int degree = int_member(j, "degree");
    return {flavor, degree, matrix_from_json(member(j, "matrix"))};
}

Json face_report_json(const FaceReport& r) {
    Json j = Json::object();
    j["flavor"] = flavor_name(r.flavor);
    j["degree"] = r.degree;
    j["face_subspace"] = subspace_json(r.face_subspace);
    j["rank"] = r.rank;
    j["dimension"] = r.dimension;
    j["dimension_by_kernel"] = r.dimension_by_kernel;
    j["polyhedral"] = r.polyhedral;
    j["simplex"] = r.simplex;
    Json gens = Json::array();
    for (const auto& g : r.generators) gens.push_back(tensor_json(g));
    j["generators"] = std::move(gens);
    j["notes"] = r.notes;
    return j;
}

Json certificate_json(const ConstructionCertificate& c) {
    Json f = Json::object();
    f["roots"] = roots_json(c.roots);
    Json coeffs = Json::array();
    for (const auto& coeff : c.f.coeffs()) coeffs.push_back(scalar_json(coeff));
    f["coeffs"] = std::move(coeffs);

    Json gens = Json::array();
    for (const auto& g : c.generators) gens.push_back(tensor_json(g));
    Json trace = Json::array();
    for (const auto& rec : c.trace) trace.push_back(trace_json(rec));

    Json j = Json::object();
    j["k"] = c.k;
    j["flavor"] = flavor_name(c.flavor);
    j["f"] = std::move(f);
    j["generators"] = std::move(gens);
    j["report"] = face_report_json(c.report);
    j["trace"] = std::move(trace);
    return j;
}

Json diagram_json(int d, Flavor flavor) {
    Json rows = Json::array();
    for (const auto& row : diagram(d, flavor)) {
        Json r = Json::object();
        r["r"] = row.r;
        r["lower"] = row.lower;
        r["upper"] = row.upper;
        r["excluded"] = row.excluded;
        rows.push_back(std::move(r));
    }
    Json j = Json::object();
    j["d"] = d;
    j["flavor"] = flavor_name(flavor);
    j["bounds_only"] = true;
    j["rows"] = std::move(rows);
    return j;
}

Json root_certificate_json(const RootCertificate& c) {
    Json j = Json::object();
    j["status"] = root_cert_status_name(c.status);
    j["gcd"] = form_json(c.gcd);
    if (c.point) j["point"] = point_json(*c.point);
    if (c.lo) j["lo"] = rational_json(*c.lo);
    if (c.hi) j["hi"] = rational_json(*c.hi);
    j["notes"] = c.notes;
    return j;
}

Json density_json(const DensityReport& r) {
    Json failures = Json::array();
    for (const auto& [index, reason] : r.failures) {
        Json f = Json::object();
        f["index"] = index;
        f["reason"] = reason;
        failures.push_back(std::move(f));
    }
    Json j = Json::object();
    j["k"] = r.k;
    j["flavor"] = flavor_name(r.flavor);
    j["samples"] = r.samples;
    j["successes"] = r.successes;
    j["ratio"] = rational_str(r.ratio());
    j["master_seed"] = r.master_seed;
    j["failures"] = std::move(failures);
    return j;
}

Flavor flavor_from_json(const Json& j) {
    expect(j.is_string(), "flavor must be a string");
    std::string s = j.get<std::string>();
    if (s == "symmetric") return Flavor::symmetric;
    if (s == "hermitian") return Flavor::hermitian;
    fail(errc::parse_error, "flavor must be \"symmetric\" or \"hermitian\"");
}

std::string dump_pretty(const Json& j) { return j.dump(2) + "\n"; }

} // namespace gramspec
