#include <doctest.h>

#include "flaginv/errors.hpp"
#include "flaginv/gaussian.hpp"
#include "flaginv/matrix.hpp"
#include "flaginv/quaternion.hpp"
#include "flaginv/rational.hpp"
#include "support.hpp"

using namespace flaginv;
using testsupport::Rng;

TEST_CASE("rational canonical form") {
    CHECK(Rational(3, 6) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(5).reciprocal() / Rational(0), DomainError);
}

TEST_CASE("rational text round-trip") {
    CHECK(Rational(-7, 3).str() == "-7/3");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1 /2"), ParseError);

    Rng rng(101);
    for (int k = 0; k < 200; ++k) {
        Rational r = rng.rational(50, 40);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(Rational(1, 2), Rational(-3, 4));
    CHECK(z * z.conj() == GaussianRational(z.norm_sq()));
    CHECK(z / z == GaussianRational(1));
    CHECK_THROWS_AS(z / GaussianRational(), DomainError);

    Rng rng(102);
    for (int k = 0; k < 100; ++k) {
        GaussianRational a = rng.gaussian(), b = rng.gaussian_nonzero();
        CHECK((a / b) * b == a);
        CHECK((a * b).norm_sq() == a.norm_sq() * b.norm_sq());
    }
}

TEST_CASE("gaussian text round-trip") {
    CHECK(GaussianRational(Rational(1, 2), Rational(3, 4)).str() == "1/2+3/4 i");
    CHECK(GaussianRational(Rational(1, 2), Rational(-3, 4)).str() == "1/2-3/4 i");
    CHECK(GaussianRational(Rational(0), Rational(-3, 4)).str() == "-3/4 i");
    CHECK(GaussianRational(Rational(5), Rational(0)).str() == "5");
    CHECK(GaussianRational::parse("1/2+3/4 i") == GaussianRational(Rational(1, 2), Rational(3, 4)));
    CHECK(GaussianRational::parse("-2i") == GaussianRational(Rational(0), Rational(-2)));
    CHECK(GaussianRational::parse("3") == GaussianRational(3));
    CHECK_THROWS_AS(GaussianRational::parse("1+i"), ParseError); // coefficient required
    CHECK_THROWS_AS(GaussianRational::parse("i"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("1/2+"), ParseError);

    Rng rng(103);
    for (int k = 0; k < 200; ++k) {
        GaussianRational z = rng.gaussian(60, 50);
        CHECK(GaussianRational::parse(z.str()) == z);
    }
}

TEST_CASE("quaternion arithmetic") {
    using Q = RationalQuaternion;
    CHECK(Q::i() * Q::j() == Q::k());
    CHECK(Q::j() * Q::i() == -Q::k());
    CHECK(Q::j() * Q::k() == Q::i());
    CHECK(Q::k() * Q::i() == Q::j());
    CHECK(Q::i() * Q::i() == Q(-1));

    Rng rng(104);
    for (int k = 0; k < 100; ++k) {
        Q p = rng.quaternion(), q = rng.quaternion_nonzero();
        CHECK((p * q).norm_sq() == p.norm_sq() * q.norm_sq());
        CHECK(q * q.reciprocal() == Q(1));
        CHECK(q.reciprocal() * q == Q(1));
        CHECK((p * q).conj() == q.conj() * p.conj());
    }
}

TEST_CASE("quaternion text round-trip") {
    RationalQuaternion q(Rational(1, 2), Rational(-3), Rational(0), Rational(7, 5));
    CHECK(q.str() == "1/2-3i+7/5k");
    CHECK(RationalQuaternion::parse("1/2-3i+7/5k") == q);
    CHECK(RationalQuaternion::parse("-k") == -RationalQuaternion::k());
    CHECK(RationalQuaternion::parse("j") == RationalQuaternion::j());
    CHECK(RationalQuaternion(0, 0, 0, 0).str() == "0");
    CHECK(RationalQuaternion::parse("0") == RationalQuaternion());
    CHECK_THROWS_AS(RationalQuaternion::parse("1i+2i"), ParseError);
    CHECK_THROWS_AS(RationalQuaternion::parse(""), ParseError);

    Rng rng(105);
    for (int k = 0; k < 200; ++k) {
        RationalQuaternion p = rng.quaternion(30, 20);
        CHECK(RationalQuaternion::parse(p.str()) == p);
    }
}

TEST_CASE("rank") {
    CHECK(rank(Matrix::identity(3)) == 3);
    CHECK(rank(Matrix(2, 4)) == 0);

    // columns e1, e2, e1+e2 in Q(i)^3: rank 2 by hand elimination.
    Matrix m{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}};
    CHECK(rank(m) == 2);

    Rng rng(106);
    for (int k = 0; k < 100; ++k) {
        std::size_t r = 1 + k % 5, c = 1 + (k / 5) % 5;
        Matrix a = rng.matrix(r, c);
        Matrix kb = kernel_basis(a);
        CHECK(rank(a) + kb.cols() == c);
        CHECK((a * kb).is_zero());
    }
}

TEST_CASE("det") {
    CHECK(det(Matrix::identity(4)) == GaussianRational(1));
    CHECK(det(Matrix{{2, 0}, {0, 3}}) == GaussianRational(6));
    CHECK(det(Matrix{{1, 1, 3}, {2, 2, 5}, {-1, -1, 0}}) == GaussianRational(0));
    CHECK_THROWS_AS(det(Matrix(2, 3)), DomainError);

    Rng rng(107);
    for (int k = 0; k < 100; ++k) {
        Matrix a = rng.matrix(4, 4), b = rng.matrix(4, 4);
        CHECK(det(a * b) == det(a) * det(b));
        CHECK(det(a) == testsupport::det_laplace(a));
    }
}

TEST_CASE("solve and inverse") {
    Rng rng(108);
    for (int k = 0; k < 50; ++k) {
        Matrix a = rng.invertible(4);
        Matrix b = rng.matrix(4, 2);
        Matrix x = solve(a, b);
        CHECK(a * x == b);
        CHECK(a * inverse(a) == Matrix::identity(4));
    }
    Matrix singular{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(solve(singular, Matrix::identity(2)), DomainError);
}

TEST_CASE("char_poly") {
    using V = std::vector<GaussianRational>;
    CHECK(char_poly(Matrix::identity(2)) == V{1, -2, 1});
    CHECK(char_poly(Matrix(2, 2)) == V{1, 0, 0});
    CHECK(char_poly(Matrix{{0, 1}, {0, 0}}) == V{1, 0, 0});

    // Oracle: evaluation at integer points must match det(tI - A).
    Rng rng(109);
    for (int k = 0; k < 40; ++k) {
        std::size_t n = 2 + k % 4;
        Matrix a = rng.matrix(n, n);
        V coeff = char_poly(a);
        REQUIRE(coeff.size() == n + 1);
        for (long t = 0; t <= static_cast<long>(n); ++t) {
            Matrix shifted = GaussianRational(t) * Matrix::identity(n) - a;
            CHECK(testsupport::eval_poly(coeff, GaussianRational(t)) == det(shifted));
        }
    }
}

TEST_CASE("quat_to_complex_2x2") {
    CHECK(quat_to_complex_2x2(RationalQuaternion(1)) == Matrix::identity(2));
    CHECK(quat_to_complex_2x2(RationalQuaternion::j()) == Matrix{{0, 1}, {-1, 0}});
    GaussianRational i = GaussianRational::i();
    CHECK(quat_to_complex_2x2(RationalQuaternion::i()) == Matrix{{i, 0}, {0, -i}});

    Rng rng(110);
    for (int k = 0; k < 100; ++k) {
        RationalQuaternion p = rng.quaternion(), q = rng.quaternion();
        CHECK(quat_to_complex_2x2(p * q) == quat_to_complex_2x2(p) * quat_to_complex_2x2(q));
        CHECK(quat_to_complex_2x2(p + q) == quat_to_complex_2x2(p) + quat_to_complex_2x2(q));
        CHECK(det(quat_to_complex_2x2(q)) == GaussianRational(q.norm_sq()));
    }
}

TEST_CASE("is_semisimple_2x2") {
    CHECK(is_semisimple_2x2(Matrix{{1, 0}, {0, 2}}));
    CHECK_FALSE(is_semisimple_2x2(Matrix{{0, 1}, {0, 0}}));
    CHECK(is_semisimple_2x2(GaussianRational(5) * Matrix::identity(2)));
    CHECK(is_semisimple_2x2(Matrix(2, 2)));
    CHECK_FALSE(is_semisimple_2x2(Matrix{{1, 1}, {0, 1}}));
    CHECK_THROWS_AS(is_semisimple_2x2(Matrix::identity(3)), DomainError);
}
