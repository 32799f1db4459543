#include <doctest.h>

#include "gramspec/construction.hpp"

using namespace gramspec;

namespace {

const GaussianRational I(0, 1);
const BinaryForm X = BinaryForm::monomial(1, 0);
const BinaryForm Y = BinaryForm::monomial(1, 1);

} // namespace

TEST_CASE("deterministic scalar stream") {
    const std::vector<GaussianRational> expect = {
        GaussianRational(0),      GaussianRational(1),      GaussianRational(-1),
        GaussianRational(0, 1),   GaussianRational(0, -1),  GaussianRational(1, 1),
        GaussianRational(1, -1),  GaussianRational(-1, 1),  GaussianRational(-1, -1),
        GaussianRational(2),      GaussianRational(-2),     GaussianRational(0, 2),
        GaussianRational(0, -2)};
    for (std::size_t n = 0; n < expect.size(); ++n) CHECK(DeterministicPicker::stream(n) == expect[n]);

    DeterministicPicker picker;
    CHECK(picker.pick([](const GaussianRational& z) { return !z.is_real(); }) == I);
    // Rescans from the start: history does not shift later picks.
    CHECK(picker.pick([](const GaussianRational& z) { return !z.is_real(); }) == I);
    CHECK_THROWS_AS(picker.pick([](const GaussianRational&) { return false; }), error);
}

TEST_CASE("seeded picker is deterministic per seed") {
    SeededPicker a(42), b(42), c(43);
    auto nonreal = [](const GaussianRational& z) { return !z.is_real(); };
    GaussianRational za = a.pick(nonreal);
    CHECK(za == b.pick(nonreal));
    CHECK_FALSE(za.is_real());
    CHECK_FALSE(c.pick(nonreal).is_real());
}

TEST_CASE("special basis on the full degree-one space") {
    ScalarSelection sel = special_basis(Subspace::full(1));
    REQUIRE(sel.lambdas.size() == 2);
    CHECK(sel.lambdas[0] == GaussianRational(0));
    CHECK(sel.lambdas[1] == GaussianRational(1));
    REQUIRE(sel.transformed_basis.size() == 2);
    CHECK(sel.transformed_basis[0] == Y);
    CHECK(sel.transformed_basis[1] == X);
    // Triangularity: later basis elements vanish at earlier scalars.
    CHECK(sel.transformed_basis[1].evaluate(sel.lambdas[0]).is_zero());
}

TEST_CASE("special basis avoids zeros of the leading form") {
    ScalarSelection sel = special_basis(Subspace::span(1, {X}));
    REQUIRE(sel.lambdas.size() == 1);
    CHECK(sel.lambdas[0] == GaussianRational(1)); // 0 is a root of x
    CHECK_THROWS_AS(special_basis(Subspace(1)), error);
}

TEST_CASE("careful special basis also protects conjugate evaluations") {
    ScalarSelection sel = careful_special_basis(Subspace::span(1, {X - I * Y}));
    REQUIRE(sel.lambdas.size() == 1);
    CHECK(sel.lambdas[0] == GaussianRational(0));

    ScalarSelection full = careful_special_basis(Subspace::full(2));
    REQUIRE(full.lambdas.size() == 3);
    // Nonzero forms of U may vanish at neither all lambdas nor all conjugates.
    for (const auto& f : Subspace::full(2).basis_forms()) {
        bool all_zero = true, all_conj_zero = true;
        for (const auto& l : full.lambdas) {
            if (!f.evaluate(l).is_zero()) all_zero = false;
            if (!f.evaluate(l.conj()).is_zero()) all_conj_zero = false;
        }
        CHECK_FALSE(all_zero);
        CHECK_FALSE(all_conj_zero);
    }
}

TEST_CASE("cofactor polynomials dodge a forbidden product space") {
    Subspace forbidden = Subspace::span(2, {X * X, X * Y});
    DeterministicPicker picker;
    std::vector<GaussianRational> gammas;
    BinaryForm q = cofactor_q(forbidden, 2, {}, picker, &gammas);
    CHECK(q.degree() == 2);
    CHECK(q.coeff(0) == GaussianRational(1)); // monic
    REQUIRE(gammas.size() == 2);
    for (const auto& g : gammas) CHECK_FALSE(g.is_real());
    CHECK(gammas[0] != gammas[1]);
    CHECK(gammas[0] != gammas[1].conj());
    // q divides no nonzero element of conj(forbidden) = forbidden here.
    CHECK_FALSE(divide_exact(X * X, q).has_value());
    CHECK_FALSE(divide_exact(X * Y, q).has_value());
    CHECK_FALSE(divide_exact(X * X + X * Y, q).has_value());

    SUBCASE("avoid set excludes both the points and their conjugates") {
        DeterministicPicker p2;
        std::vector<GaussianRational> g2;
        cofactor_q(forbidden, 2, {gammas[0]}, p2, &g2);
        for (const auto& g : g2) {
            CHECK(g != gammas[0]);
            CHECK(g != gammas[0].conj());
        }
    }

    SUBCASE("degree must cover the forbidden dimension") {
        CHECK_THROWS_AS(cofactor_q(Subspace::full(2), 2), error);
    }
}

TEST_CASE("hermitian 1-simplex: the base certificate is x^2 + y^2") {
    ConstructionCertificate c = hermitian_simplex_face(1);
    CHECK(c.k == 1);
    CHECK(c.flavor == Flavor::hermitian);
    CHECK(c.f == X * X + Y * Y);
    REQUIRE(c.roots.points().size() == 2);
    CHECK(c.roots.points()[0] == ProjectivePoint::finite(-I));
    CHECK(c.roots.points()[1] == ProjectivePoint::finite(I));
    CHECK(c.report.rank == 2);
    CHECK(c.report.dimension == 1);
    CHECK(c.report.dimension_by_kernel == 1);
    CHECK(c.report.polyhedral);
    CHECK(c.report.simplex);
    CHECK(c.generators.size() == 2);
    REQUIRE(c.trace.size() == 1);
    CHECK(c.trace[0].kind == "hermitian-base");
    CHECK(c.trace[0].level == 1);
    CHECK(c.trace[0].betas == std::vector<GaussianRational>{I});
    CHECK(c.trace[0].g == c.f);
}

TEST_CASE("hermitian 2-simplex: deterministic step scalars") {
    ConstructionCertificate c = hermitian_simplex_face(2);
    CHECK(c.f.degree() == 6);
    CHECK(c.f == expand_roots(c.roots));
    CHECK(c.report.rank == 3);
    CHECK(c.report.dimension == 2);
    CHECK(c.report.polyhedral);
    CHECK(c.report.simplex);
    CHECK(c.generators.size() == 3);
    for (const auto& t : c.generators) CHECK(t.rank() == 1);
    REQUIRE(c.trace.size() == 2);
    CHECK(c.trace[1].kind == "hermitian-step");
    CHECK(c.trace[1].betas ==
          std::vector<GaussianRational>{GaussianRational(1, 1), GaussianRational(-1, 1)});
    REQUIRE(c.trace[1].s.has_value());
    CHECK(*c.trace[1].s ==
          BinaryForm(2, {GaussianRational(1), GaussianRational(0, -2), GaussianRational(-2)}));
    CHECK(c.trace[1].g == X * X + Y * Y);

    ConstructionCertificate again = hermitian_simplex_face(2);
    CHECK(again.f == c.f); // fully deterministic
}

TEST_CASE("quadratically independent variant certifies the square count") {
    ConstructionCertificate c =
        hermitian_simplex_face(2, HermitianVariant::quadratically_independent);
    CHECK(c.report.rank == 3);
    CHECK(c.report.dimension == 2);
    CHECK_FALSE(c.report.notes.empty());
}

TEST_CASE("seeded constructions still verify") {
    ConstructOptions opts;
    opts.random_scalars = true;
    opts.seed = 42;
    ConstructionCertificate c = hermitian_simplex_face(2, HermitianVariant::plain, opts);
    CHECK(c.f.degree() == 6);
    CHECK(c.report.rank == 3);
    CHECK(c.report.dimension == 2);
    ConstructionCertificate again = hermitian_simplex_face(2, HermitianVariant::plain, opts);
    CHECK(again.f == c.f); // deterministic for a fixed seed
}

TEST_CASE("symmetric 1-simplex: a segment with rank-two endpoints") {
    ConstructionCertificate c = symmetric_simplex_face(1);
    CHECK(c.k == 1);
    CHECK(c.flavor == Flavor::symmetric);
    CHECK(c.f.degree() == 8);
    CHECK(c.f.is_real());
    CHECK(c.f == expand_roots(c.roots));
    CHECK(c.report.rank == 4);
    CHECK(c.report.dimension == 1);
    CHECK(c.report.dimension_by_kernel == 1);
    CHECK(c.report.polyhedral);
    CHECK(c.report.simplex);
    REQUIRE(c.generators.size() == 2);
    for (const auto& t : c.generators) {
        CHECK(t.flavor() == Flavor::symmetric);
        CHECK(t.rank() == 2);
        CHECK(t.mu() == c.f);
    }
    GramTensor mid = make_rational(1, 2) * (c.generators[0] + c.generators[1]);
    CHECK(mid.rank() == 4); // relative interior of the segment
    REQUIRE(c.trace.size() == 2);
    CHECK(c.trace[0].kind == "hermitian-base");
    CHECK(c.trace[1].kind == "symmetric-cofactor");
    REQUIRE(c.trace[1].q.has_value());
    CHECK(c.trace[1].q->degree() == 3);
    CHECK(c.trace[1].gammas.size() == 3);
}

TEST_CASE("constructions reject invalid sizes") {
    CHECK_THROWS_AS(hermitian_simplex_face(0), error);
    CHECK_THROWS_AS(symmetric_simplex_face(0), error);
}
