#include <doctest.h>

#include "gramspec/subspace.hpp"

using namespace gramspec;

namespace {

const GaussianRational I(0, 1);
const BinaryForm X = BinaryForm::monomial(1, 0);
const BinaryForm Y = BinaryForm::monomial(1, 1);

} // namespace

TEST_CASE("spans are canonical") {
    Subspace u = Subspace::span(1, {X + Y, X - Y});
    CHECK(u == Subspace::full(1));
    CHECK(u.dim() == 2);
    CHECK(u.contains(GaussianRational(3) * X - I * Y));
    CHECK(Subspace::span(1, {X, GaussianRational(2) * X}).dim() == 1);
    CHECK(Subspace(3).dim() == 0);
    CHECK_FALSE(Subspace(1).contains(X));
}

TEST_CASE("basis forms read back the rref rows") {
    Subspace u = Subspace::span(2, {BinaryForm::monomial(2, 0), BinaryForm::monomial(2, 2)});
    auto forms = u.basis_forms();
    REQUIRE(forms.size() == 2);
    CHECK(forms[0] == BinaryForm::monomial(2, 0));
    CHECK(forms[1] == BinaryForm::monomial(2, 2));
}

TEST_CASE("sum of subspaces") {
    Subspace a = Subspace::span(2, {BinaryForm::monomial(2, 0)});
    Subspace b = Subspace::span(2, {BinaryForm::monomial(2, 2)});
    Subspace s = sum(a, b);
    CHECK(s.dim() == 2);
    CHECK(s.contains(BinaryForm::monomial(2, 0) + BinaryForm::monomial(2, 2)));
    CHECK_THROWS_AS(sum(a, Subspace::span(1, {X})), error);
}

TEST_CASE("products span all pairwise products") {
    Subspace v1 = Subspace::full(1);
    Subspace p = product(v1, v1);
    CHECK(p.degree() == 2);
    CHECK(p.dim() == 3); // x^2, xy, y^2: the minimal value 2*2 - 1
    Subspace u = Subspace::span(2, {BinaryForm::monomial(2, 0), BinaryForm::monomial(2, 2)});
    // span{x^4, x^2 y^2, y^4}: again 2r - 1 without any common factor
    CHECK(product(u, u).dim() == 3);
    Subspace geo = Subspace::span(2, {X * X, X * Y}); // x * span{x, y}
    CHECK(product(geo, geo).dim() == 3);
    CHECK_THROWS_AS(product(v1, Subspace(1)), error);
}

TEST_CASE("conjugation mirrors coefficients") {
    Subspace u = Subspace::span(1, {X + I * Y});
    Subspace c = conj_space(u);
    CHECK(c.contains(X - I * Y));
    CHECK_FALSE(c.contains(X + I * Y));
    CHECK(conj_space(c) == u);
    CHECK(u.is_real() == false);
    CHECK(Subspace::full(1).is_real());
}

TEST_CASE("matrix columns span a subspace") {
    Matrix m(3, 2);
    m.at(0, 0) = GaussianRational(1);
    m.at(2, 0) = GaussianRational(1);
    m.at(1, 1) = GaussianRational(5);
    Subspace u = matrix_image(m, 2);
    CHECK(u.dim() == 2);
    CHECK(u.contains(BinaryForm::monomial(2, 0) + BinaryForm::monomial(2, 2)));
    CHECK(u.contains(BinaryForm::monomial(2, 1)));
}

TEST_CASE("product dimension grows with genuinely independent factors") {
    // U = span{x^2, y^2, x y} is the full degree-2 space; UU is the full
    // degree-4 space of dimension 5 = 2 * 3 - 1.
    Subspace u = Subspace::full(2);
    CHECK(product(u, u).dim() == 5);
    // One-dimensional spaces multiply to one dimension.
    Subspace l = Subspace::span(1, {X - Y});
    CHECK(product(l, l).dim() == 1);
}
