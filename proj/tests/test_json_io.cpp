#include <doctest.h>

#include "gramspec/json_io.hpp"

using namespace gramspec;

namespace {

const GaussianRational I(0, 1);
const BinaryForm X = BinaryForm::monomial(1, 0);
const BinaryForm Y = BinaryForm::monomial(1, 1);

} // namespace

TEST_CASE("scalar codec is exact") {
    GaussianRational z(make_rational(-1, 2), make_rational(3, 4));
    Json j = scalar_json(z);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 4);
    CHECK(j[0] == "-1");
    CHECK(j[1] == "2");
    CHECK(j[2] == "3");
    CHECK(j[3] == "4");
    CHECK(scalar_from_json(j) == z);

    mpz_class big("123456789012345678901234567890123456789");
    GaussianRational huge(make_rational(big, 7), make_rational(-1, big));
    CHECK(scalar_from_json(scalar_json(huge)) == huge);
}

TEST_CASE("scalar codec rejects malformed input") {
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["1","0","0"])")), error);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["1","0","0","0"])")), error); // zero den
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["1","1","12x","1"])")), error);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"re":"1"})")), error);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["1",1,"0","1"])")), error);
}

TEST_CASE("form and root-list codecs round trip") {
    BinaryForm f = (X - I * Y) * (X + GaussianRational(2) * Y);
    Json j = form_json(f);
    CHECK(j["degree"] == 2);
    CHECK(form_from_json(j) == f);

    RootList roots(GaussianRational(2),
                   {ProjectivePoint::infinity(), ProjectivePoint::finite(GaussianRational(3)),
                    ProjectivePoint::finite(I)});
    Json rj = roots_json(roots);
    REQUIRE(rj["points"].is_array());
    CHECK(rj["points"].back() == "inf"); // canonical order puts (1:0) last
    CHECK(roots_from_json(rj) == roots);
    CHECK_THROWS_AS(roots_from_json(Json::parse(R"({"lead":["1","1","0","1"]})")), error);
}

TEST_CASE("matrix and subspace codecs round trip") {
    Matrix m(2, 3);
    m.at(0, 0) = GaussianRational(1);
    m.at(0, 2) = I;
    m.at(1, 1) = make_rational(-7, 3);
    Json mj = matrix_json(m);
    CHECK(mj["rows"] == 2);
    CHECK(mj["cols"] == 3);
    CHECK(matrix_from_json(mj) == m);

    Subspace u = Subspace::span(2, {X * X + Y * Y, X * Y});
    CHECK(subspace_from_json(subspace_json(u)) == u);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":2,"cols":1,"entries":[]})")), error);
}

TEST_CASE("tensor codec re-validates on the way in") {
    GramTensor t = gram_from_sos(Flavor::hermitian, {X + I * Y, X - I * Y});
    Json tj = tensor_json(t);
    CHECK(tj["flavor"] == "hermitian");
    GramTensor back = tensor_from_json(tj);
    CHECK(back == t);

    Json bad = tj;
    bad["matrix"]["entries"][1] = scalar_json(GaussianRational(5));
    CHECK_THROWS_AS(tensor_from_json(bad), error); // no longer self-adjoint
    CHECK_THROWS_AS(flavor_from_json(Json("euclidean")), error);
}

TEST_CASE("face reports serialize with pinned fields") {
    FaceReport r = supporting_face({gram_from_sos(Flavor::hermitian, {X + I * Y}),
                                    gram_from_sos(Flavor::hermitian, {X - I * Y})});
    Json j = face_report_json(r);
    CHECK(j["flavor"] == "hermitian");
    CHECK(j["rank"] == 2);
    CHECK(j["dimension"] == 1);
    CHECK(j["dimension_by_kernel"] == 1);
    CHECK(j["polyhedral"] == true);
    CHECK(j["simplex"] == true);
    CHECK(j["generators"].size() == 2);
    CHECK(j["face_subspace"]["degree"] == 1);
}

TEST_CASE("certificates serialize byte-stably") {
    ConstructionCertificate c = hermitian_simplex_face(1);
    Json j = certificate_json(c);
    CHECK(j["k"] == 1);
    CHECK(j["flavor"] == "hermitian");
    CHECK(j["trace"].size() == 1);
    CHECK(j["trace"][0]["kind"] == "hermitian-base");
    CHECK(j["f"]["roots"]["points"].size() == 2);
    std::string once = dump_pretty(j);
    std::string twice = dump_pretty(certificate_json(hermitian_simplex_face(1)));
    CHECK(once == twice);
    CHECK(once.back() == '\n');
}

TEST_CASE("diagram and root-certificate payloads") {
    Json dj = diagram_json(5, Flavor::symmetric);
    CHECK(dj["d"] == 5);
    CHECK(dj["flavor"] == "symmetric");
    CHECK(dj["bounds_only"] == true);
    REQUIRE(dj["rows"].size() == 6);
    CHECK(dj["rows"][4]["excluded"] == Json::parse("[6]"));

    std::vector<BinaryForm> gens;
    for (int j = 0; j < 3; ++j) gens.push_back(BinaryForm::monomial(3, j));
    Json rc = root_certificate_json(common_real_root_certificate(Subspace::span(3, gens)));
    CHECK(rc["status"] == "point");
    CHECK(rc.contains("point"));
    CHECK_FALSE(rc.contains("lo"));
}

TEST_CASE("density payload carries failures and the exact ratio") {
    DensityReport r = density_experiment(1, 2, 5, Flavor::hermitian, 1);
    Json j = density_json(r);
    CHECK(j["k"] == 1);
    CHECK(j["samples"] == 2);
    CHECK(j["successes"] == 2);
    CHECK(j["ratio"] == "1");
    CHECK(j["failures"].is_array());
    CHECK(j["failures"].empty());
}
