#include "flaginv/triangulation.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "flaginv/errors.hpp"
#include "flaginv/flags.hpp"
#include "flaginv/gaussian.hpp"
#include "flaginv/matrix.hpp"
#include "support.hpp"

using namespace flaginv;
using testsupport::Rng;

namespace {

Matrix colv(const std::vector<long>& entries) {
    Matrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = GaussianRational(entries[i]);
    return m;
}

Matrix mat(const std::vector<std::vector<long>>& rows) {
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = GaussianRational(rows[i][j]);
    return m;
}

Matrix real_invertible(Rng& rng, std::size_t n) {
    for (;;) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = GaussianRational(rng.integer(-4, 4));
        if (!det(m).is_zero()) return m;
    }
}

Flag moved_flag(const Matrix& g, const Flag& f) {
    std::vector<Matrix> steps;
    for (std::size_t k = 0; k < f.steps(); ++k) steps.push_back(g * f.subspace(k));
    return Flag(f.ambient_dim(), steps);
}

std::vector<Flag> moved_flags(const Matrix& g, const std::vector<Flag>& flags) {
    std::vector<Flag> out;
    for (const Flag& f : flags) out.push_back(moved_flag(g, f));
    return out;
}

std::vector<Flag> generic_flags(Rng& rng, std::size_t n, std::size_t count, bool real = false) {
    for (;;) {
        std::vector<Flag> flags;
        for (std::size_t k = 0; k < count; ++k)
            flags.push_back(
                Flag::complete_from_basis(real ? real_invertible(rng, n) : rng.invertible(n, 3)));
        if (is_generic(Configuration::complete(flags))) return flags;
    }
}

constexpr std::array<std::size_t, 4> kSwap01{1, 0, 2, 3};

// Two tetrahedra glued along all four faces: the second carries the first's
// flags, permuted by the vertex swap (0 1) and moved by g.  Every crossing
// then transports by g, so the decoration is consistent by construction.
DecoratedTriangulation doubled(const std::vector<Flag>& seed, const Matrix& g,
                               std::map<std::string, PathCrossings> paths = {}) {
    std::vector<Flag> moved;
    for (std::size_t w = 0; w < 4; ++w) moved.push_back(moved_flag(g, seed[kSwap01[w]]));
    std::vector<FaceGluing> gluings;
    for (std::size_t k = 0; k < 4; ++k)
        gluings.push_back({0, k, 1, kSwap01[k], kSwap01});
    return DecoratedTriangulation({seed, moved}, std::move(gluings), std::move(paths));
}

// One tetrahedron glued to itself: faces 0-1 by the vertex swap (0 1), faces
// 2-3 by the swap (2 3).  The flags are chosen so the two face pairings are
// realized by commuting matrices s and t; edge words are words in s and t.
struct SelfGlued {
    DecoratedTriangulation tri;
    Matrix s;
    Matrix t;
};

SelfGlued self_glued() {
    Matrix s = mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    Matrix c = mat({{1, 1, 0}, {1, -1, 0}, {0, 0, 1}});
    Matrix t = c * mat({{3, 0, -1}, {0, 1, 0}, {2, 0, 0}}) * inverse(c);
    Matrix a0 = mat({{1, 1, 1}, {0, 1, 0}, {1, 1, 0}});
    std::vector<Flag> flags{
        Flag::complete_from_basis(a0),
        Flag::complete_from_basis(s * a0),
        Flag::complete_from_basis(t * c),
        Flag::complete_from_basis(c),
    };
    std::vector<FaceGluing> gluings{
        {0, 0, 0, 1, {1, 0, 2, 3}},
        {0, 2, 0, 3, {0, 1, 3, 2}},
    };
    return {DecoratedTriangulation({flags}, gluings), s, t};
}

// Complete flag whose line is isotropic for the corner form of signature
// (3,1) and whose hyperplane is the line's orthogonal complement.
Flag isotropic_corner_flag(const std::vector<long>& line, const std::vector<long>& mid) {
    Matrix l = colv(line);
    Matrix phi(1, 4);
    phi.at(0, 0) = GaussianRational(line[3]);
    phi.at(0, 1) = GaussianRational(line[1]);
    phi.at(0, 2) = GaussianRational(line[2]);
    phi.at(0, 3) = GaussianRational(line[0]);
    return Flag(4, {l, hstack(l, colv(mid)), kernel_basis(phi)});
}

Matrix quat_structure(const Matrix& x) {
    Matrix y(4, 1);
    y.at(0, 0) = -x.at(1, 0).conj();
    y.at(1, 0) = x.at(0, 0).conj();
    y.at(2, 0) = -x.at(3, 0).conj();
    y.at(3, 0) = x.at(2, 0).conj();
    return y;
}

Flag quaternionic_flag(Rng& rng) {
    for (;;) {
        Matrix x = rng.matrix(4, 1, 4);
        Matrix y = rng.matrix(4, 1, 4);
        Matrix basis = hstack(hstack(x, quat_structure(x)), hstack(y, quat_structure(y)));
        if (!det(basis).is_zero()) return Flag::complete_from_basis(basis);
    }
}

// Coefficients of (T - lambda)^n, leading coefficient first.
std::vector<GaussianRational> binomial_power(const GaussianRational& lambda, std::size_t n) {
    std::vector<GaussianRational> coeffs{GaussianRational(1)};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<GaussianRational> next(coeffs.size() + 1, GaussianRational(0));
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next[j] = next[j] + coeffs[j];
            next[j + 1] = next[j + 1] - lambda * coeffs[j];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

}  // namespace

TEST_CASE("transporters recover projective motions of generic triples") {
    Rng rng(31);
    for (std::size_t trial = 0; trial < 100; ++trial) {
        std::size_t n = 3 + trial % 3;
        std::vector<Flag> triple = generic_flags(rng, n, 3);
        Matrix g = rng.invertible(n, 3);
        std::vector<Flag> image = moved_flags(g, triple);

        GroupElement rec = transporter(triple, image);
        CHECK(projectively_equal(rec.matrix, g));
        CHECK(transporter(triple, triple).is_trivial());

        if (trial % 10 == 0) {
            // The result must not depend on the generator matrices chosen for
            // the subspaces, only on their spans.
            std::vector<Flag> recombined;
            for (const Flag& f : image) {
                std::vector<Matrix> steps;
                for (std::size_t k = 0; k < f.steps(); ++k) {
                    Matrix u = Matrix::identity(k + 1);
                    u.at(0, k) = u.at(0, k) + GaussianRational(1);
                    steps.push_back(f.subspace(k) * u);
                }
                recombined.emplace_back(f.ambient_dim(), steps);
            }
            CHECK(projectively_equal(transporter(triple, recombined).matrix, g));
        }
    }
}

TEST_CASE("transporters reject mismatched and degenerate triples") {
    Rng rng(32);
    std::vector<Flag> triple = generic_flags(rng, 3, 3);

    std::vector<Flag> pair{triple[0], triple[1]};
    CHECK_THROWS_WITH_AS(transporter(pair, pair), "a transporter needs two triples of flags",
                         DomainError);

    std::vector<Flag> four = generic_flags(rng, 4, 3);
    CHECK_THROWS_WITH_AS(transporter(triple, four),
                         "a transporter needs complete flags in one common dimension",
                         DomainError);

    std::vector<Flag> with_line{triple[0], triple[1], Flag::line(colv({1, 2, 3}))};
    CHECK_THROWS_WITH_AS(transporter(triple, with_line),
                         "a transporter needs complete flags in one common dimension",
                         DomainError);

    // All three flags share the line through e1, so no pair is opposite.
    std::vector<Flag> shared{
        Flag::complete_from_basis(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
        Flag::complete_from_basis(mat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})),
        Flag::complete_from_basis(mat({{1, 0, 0}, {0, 1, 1}, {0, 1, 0}})),
    };
    CHECK_THROWS_WITH_AS(transporter(shared, shared),
                         "no pair of flags is opposite in both triples", DomainError);

    // The third line lies in a coordinate plane of the frame spanned by the
    // opposite pair, so the frame scales cannot be pinned down.
    std::vector<Flag> ambiguous{
        Flag::complete_from_basis(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
        Flag::complete_from_basis(mat({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})),
        Flag::complete_from_basis(mat({{1, 0, 0}, {1, 1, 0}, {0, 0, 1}})),
    };
    CHECK_THROWS_WITH_AS(
        transporter(ambiguous, ambiguous),
        "the canonical frame is ambiguous: a frame coordinate of the third flag's line vanishes",
        DomainError);

    std::vector<Flag> other = generic_flags(rng, 3, 3);
    CHECK_THROWS_WITH_AS(transporter(triple, other), "the triples are not projectively equivalent",
                         DomainError);
}

TEST_CASE("doubled tetrahedra satisfy the matchings with scalar edge holonomies") {
    Rng rng(33);
    std::vector<Flag> seed = generic_flags(rng, 3, 4);
    Matrix g = rng.invertible(3, 3);
    DecoratedTriangulation tri = doubled(seed, g, {{"loop", {{0, 0}, {1, 1}}}});

    CHECK(tri.ambient_dim() == 3);
    CHECK(tri.tetrahedron_count() == 2);
    CHECK(tri.paths().at("loop").size() == 2);

    FaceMatchingReport report = check_face_matchings(tri);
    CHECK(report.all_match);
    CHECK(report.mismatched_gluings.empty());

    REQUIRE(tri.edges().size() == 6);
    for (const EdgeCycle& cycle : tri.edges()) {
        CHECK(cycle.incidences.size() == 2);
        CHECK(cycle.crossings.size() == 2);
    }
    for (std::size_t e = 0; e < 6; ++e) CHECK(edge_holonomy(tri, e).is_trivial());

    // Each single crossing realizes the motion used to build the double.
    CHECK(projectively_equal(path_holonomy(tri, {{0, 0}}).matrix, g));

    auto [gl, a_side] = tri.gluing_at(0, 2);
    CHECK(gl->face_b == 2);
    CHECK(a_side);
    CHECK_FALSE(tri.gluing_at(1, 2).second);
    CHECK(tri.face_triple(0, 0) == std::vector<Flag>{seed[1], seed[2], seed[3]});

    // Untwisted double: the raw holonomy products are exactly the identity.
    DecoratedTriangulation plain = doubled(seed, Matrix::identity(3));
    for (std::size_t e = 0; e < plain.edges().size(); ++e) {
        GroupElement h = edge_holonomy(plain, e);
        REQUIRE(h.is_trivial());
        CHECK(h.scalar() == GaussianRational(1));
        CHECK(h.matrix == Matrix::identity(3));
    }

    // Same story one dimension up.
    std::vector<Flag> seed4 = generic_flags(rng, 4, 4);
    DecoratedTriangulation tri4 = doubled(seed4, rng.invertible(4, 3));
    CHECK(check_face_matchings(tri4).all_match);
    REQUIRE(tri4.edges().size() == 6);
    for (std::size_t e = 0; e < 6; ++e) CHECK(edge_holonomy(tri4, e).is_trivial());
}

TEST_CASE("a perturbed vertex flag is caught and localized") {
    Rng rng(34);
    std::vector<Flag> seed = generic_flags(rng, 3, 4);
    Matrix g = rng.invertible(3, 3);
    std::vector<Flag> moved = moved_flags(g, {seed[1], seed[0], seed[2], seed[3]});

    // Replace one vertex flag of the second tetrahedron with an unrelated
    // flag, keeping the configuration generic so construction succeeds.
    for (;;) {
        moved[2] = Flag::complete_from_basis(rng.invertible(3, 3));
        if (is_generic(Configuration::complete(moved))) break;
    }
    std::vector<FaceGluing> gluings;
    for (std::size_t k = 0; k < 4; ++k)
        gluings.push_back({0, k, 1, kSwap01[k], kSwap01});
    DecoratedTriangulation tri({seed, moved}, gluings);

    // Exactly the gluings whose faces contain the perturbed vertex mismatch:
    // vertex 2 of tetrahedron 1 lies on every face except face 2, which is
    // the partner of gluing 2.
    FaceMatchingReport report = check_face_matchings(tri);
    CHECK_FALSE(report.all_match);
    CHECK(report.mismatched_gluings == std::vector<std::size_t>{0, 1, 3});

    // Every edge cycle crosses a broken face, so no holonomy is defined.
    REQUIRE(tri.edges().size() == 6);
    for (std::size_t e = 0; e < 6; ++e) CHECK_THROWS_AS(edge_holonomy(tri, e), DomainError);
    CHECK_THROWS_WITH_AS(edge_holonomy(tri, 0), "the triples are not projectively equivalent",
                         DomainError);
}

TEST_CASE("a self-glued tetrahedron carries its commuting symmetries") {
    SelfGlued fixture = self_glued();
    const DecoratedTriangulation& tri = fixture.tri;

    CHECK(fixture.s * fixture.t == fixture.t * fixture.s);
    CHECK(check_face_matchings(tri).all_match);

    REQUIRE(tri.edges().size() == 3);
    CHECK(tri.edges()[0].incidences.size() == 1);
    CHECK(tri.edges()[1].incidences.size() == 4);
    CHECK(tri.edges()[2].incidences.size() == 1);

    GroupElement h0 = edge_holonomy(tri, 0);
    CHECK_FALSE(h0.is_trivial());
    CHECK(projectively_equal(h0.matrix, fixture.t));

    // Around the middle edge the word is the commutator of s and t.
    CHECK(edge_holonomy(tri, 1).is_trivial());

    GroupElement h2 = edge_holonomy(tri, 2);
    CHECK_FALSE(h2.is_trivial());
    CHECK(projectively_equal(h2.matrix, fixture.s));
}

TEST_CASE("path holonomy composes crossing transporters") {
    SelfGlued fixture = self_glued();
    const DecoratedTriangulation& tri = fixture.tri;

    CHECK(path_holonomy(tri, {}).matrix == Matrix::identity(3));

    CHECK(projectively_equal(path_holonomy(tri, {{0, 0}}).matrix, fixture.s));
    CHECK(projectively_equal(path_holonomy(tri, {{0, 1}}).matrix, fixture.s));
    CHECK(projectively_equal(path_holonomy(tri, {{0, 2}}).matrix, fixture.t));
    CHECK(projectively_equal(path_holonomy(tri, {{0, 3}}).matrix, inverse(fixture.t)));

    // The face pairing by s is an involution, and the transporter of each of
    // its crossings is s itself, so the square is exactly the identity.
    GroupElement ss = path_holonomy(tri, {{0, 0}, {0, 0}});
    CHECK(ss.matrix == Matrix::identity(3));
    CHECK(ss.scalar() == GaussianRational(1));

    // Crossing the t-pair twice is a genuine motion; crossing back is not.
    CHECK_FALSE(path_holonomy(tri, {{0, 2}, {0, 2}}).is_trivial());
    CHECK(path_holonomy(tri, {{0, 2}, {0, 3}}).is_trivial());

    // Mixed words stay consistent with the matrix algebra.
    GroupElement st = path_holonomy(tri, {{0, 0}, {0, 2}});
    CHECK(projectively_equal(st.matrix, fixture.t * fixture.s));

    Rng rng(35);
    std::vector<Flag> seed = generic_flags(rng, 3, 4);
    DecoratedTriangulation two = doubled(seed, rng.invertible(3, 3));

    // A crossing followed by its reverse is scalar.
    CHECK(path_holonomy(two, {{0, 0}, {1, 1}}).is_trivial());

    // Any two single crossings are homotopic around a trivial edge, so their
    // holonomies agree up to scalar.
    CHECK(projectively_equal(path_holonomy(two, {{0, 2}}).matrix,
                             path_holonomy(two, {{0, 3}}).matrix));
}

TEST_CASE("path holonomy validates the crossing sequence") {
    Rng rng(36);
    std::vector<Flag> seed = generic_flags(rng, 3, 4);
    DecoratedTriangulation tri = doubled(seed, rng.invertible(3, 3));

    CHECK_THROWS_WITH_AS(path_holonomy(tri, {{0, 0}, {0, 1}}),
                         "path step 1 leaves tetrahedron 0 but the previous crossing arrived in 1",
                         DomainError);
    CHECK_THROWS_WITH_AS(path_holonomy(tri, {{2, 0}}),
                         "path step 0 references a face that does not exist", DomainError);
    CHECK_THROWS_WITH_AS(path_holonomy(tri, {{0, 4}}),
                         "path step 0 references a face that does not exist", DomainError);
    CHECK_THROWS_WITH_AS(edge_holonomy(tri, 6),
                         "edge index 6 is out of range; there are 6 edge cycles", DomainError);
}

TEST_CASE("relabeling and conjugating a decoration transports its holonomy") {
    Rng rng(37);
    std::vector<Flag> seed = generic_flags(rng, 3, 4);
    Matrix g = rng.invertible(3, 3);
    DecoratedTriangulation tri = doubled(seed, g);

    Matrix h = rng.invertible(3, 3);
    std::vector<std::vector<Flag>> relabeled{
        moved_flags(h, tri.tetrahedra()[1]),
        moved_flags(h, tri.tetrahedra()[0]),
    };
    std::vector<FaceGluing> gluings;
    for (std::size_t k = 0; k < 4; ++k)
        gluings.push_back({1, k, 0, kSwap01[k], kSwap01});
    DecoratedTriangulation conjugated(relabeled, gluings);

    CHECK(check_face_matchings(conjugated).all_match);
    GroupElement a = path_holonomy(tri, {{0, 0}});
    GroupElement b = path_holonomy(conjugated, {{1, 0}});
    CHECK(projectively_equal(b.matrix, h * a.matrix * inverse(h)));
}

TEST_CASE("projective unipotence tracks the characteristic polynomial") {
    CHECK(is_projectively_unipotent(GroupElement{Matrix::identity(3)}));

    Matrix shear = Matrix::identity(3);
    shear.at(0, 1) = GaussianRational(1);
    CHECK(is_projectively_unipotent(GroupElement{shear}));

    // Scaling a unipotent element keeps it unipotent in the projective group.
    CHECK(is_projectively_unipotent(GroupElement{GaussianRational(3) * shear}));

    Matrix diag = Matrix::identity(4);
    diag.at(1, 1) = GaussianRational(2);
    CHECK_FALSE(is_projectively_unipotent(GroupElement{diag}));

    Matrix traceless = mat({{1, 0}, {0, -1}});
    CHECK_FALSE(is_projectively_unipotent(GroupElement{traceless}));

    CHECK_THROWS_WITH_AS(is_projectively_unipotent(GroupElement{Matrix(0, 0)}),
                         "a group element must be a nonempty square matrix", DomainError);

    Rng rng(38);
    for (std::size_t trial = 0; trial < 20; ++trial) {
        std::size_t n = 3 + trial % 2;
        Matrix u = Matrix::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                u.at(i, j) = GaussianRational(rng.integer(-3, 3));
        Matrix c = rng.invertible(n, 3);
        Matrix m = c * u * inverse(c);

        CHECK(is_projectively_unipotent(GroupElement{m}));
        CHECK(char_poly(m) == binomial_power(GaussianRational(1), n));

        // For an arbitrary invertible matrix the predicate agrees with the
        // characteristic polynomial being a pure power.
        Matrix r = rng.invertible(n, 3);
        GaussianRational lambda = r.trace() / GaussianRational(static_cast<long>(n));
        CHECK(is_projectively_unipotent(GroupElement{r}) ==
              (char_poly(r) == binomial_power(lambda, n)));
    }

    GroupElement two{GaussianRational(2) * Matrix::identity(3)};
    CHECK(two.scalar() == GaussianRational(2));
    CHECK_THROWS_WITH_AS(GroupElement{shear}.scalar(), "the element is not a scalar matrix",
                         DomainError);
}

TEST_CASE("decorations classify into the matching real structures") {
    Rng rng(93);

    std::vector<Flag> real_seed = generic_flags(rng, 3, 4, true);
    DecoratedTriangulation real_tri = doubled(real_seed, Matrix::identity(3));
    CHECK(classify_decoration(real_tri) == std::vector<std::string>{"SL(3,R)"});

    std::vector<Flag> complex_seed = generic_flags(rng, 3, 4);
    DecoratedTriangulation complex_tri = doubled(complex_seed, Matrix::identity(3));
    CHECK(classify_decoration(complex_tri).empty());

    // Flags adapted to the corner form of signature (3,1): isotropic lines
    // with orthogonal hyperplanes, all defined over the reals.
    std::vector<Flag> corner{
        isotropic_corner_flag({1, 0, 0, 0}, {0, 1, 0, 0}),
        isotropic_corner_flag({0, 0, 0, 1}, {0, 0, 1, 0}),
        isotropic_corner_flag({1, 2, 2, -4}, {-2, -2, -1, -2}),
        isotropic_corner_flag({5, 1, 3, -1}, {-18, -2, -2, -2}),
    };
    DecoratedTriangulation corner_tri = doubled(corner, Matrix::identity(4));
    CHECK(check_face_matchings(corner_tri).all_match);
    CHECK(classify_decoration(corner_tri) == std::vector<std::string>{"SL(4,R)", "SU(3,1)"});

    // Flags whose middle planes are invariant under a quaternionic structure.
    Rng rq(77);
    for (;;) {
        std::vector<Flag> quat;
        for (std::size_t k = 0; k < 4; ++k) quat.push_back(quaternionic_flag(rq));
        if (!is_generic(Configuration::complete(quat))) continue;
        DecoratedTriangulation quat_tri = doubled(quat, Matrix::identity(4));
        CHECK(classify_decoration(quat_tri) == std::vector<std::string>{"SL(2,H)"});
        break;
    }
}

TEST_CASE("triangulation construction validates the gluing data") {
    SelfGlued fixture = self_glued();
    std::vector<Flag> seed = fixture.tri.tetrahedra()[0];
    std::vector<Flag> swapped{seed[1], seed[0], seed[2], seed[3]};
    std::vector<FaceGluing> gluings;
    for (std::size_t k = 0; k < 4; ++k)
        gluings.push_back({0, k, 1, kSwap01[k], kSwap01});

    CHECK_NOTHROW(DecoratedTriangulation({seed, swapped}, gluings));

    CHECK_THROWS_WITH_AS(DecoratedTriangulation({}, {}),
                         "a decorated triangulation needs at least one tetrahedron", DomainError);

    std::vector<Flag> three{seed[0], seed[1], seed[2]};
    CHECK_THROWS_WITH_AS(DecoratedTriangulation({three}, {}),
                         "every tetrahedron needs exactly four vertex flags", DomainError);

    std::vector<Flag> low(4, Flag::complete_from_basis(Matrix::identity(2)));
    CHECK_THROWS_WITH_AS(DecoratedTriangulation({low}, {}),
                         "vertex flags must be complete flags in dimension at least 3",
                         DomainError);

    std::vector<Flag> mixed{seed[0], seed[1], seed[2],
                            Flag::complete_from_basis(Matrix::identity(4))};
    CHECK_THROWS_WITH_AS(DecoratedTriangulation({mixed}, {}),
                         "vertex flags must be complete flags in one common dimension",
                         DomainError);

    std::vector<Flag> partial{seed[0], seed[1], seed[2], Flag::line(colv({1, 2, 3}))};
    CHECK_THROWS_WITH_AS(DecoratedTriangulation({partial}, {}),
                         "vertex flags must be complete flags in one common dimension",
                         DomainError);

    auto with_gluing = [&](FaceGluing g) {
        std::vector<FaceGluing> bad = gluings;
        bad[0] = g;
        return DecoratedTriangulation({seed, swapped}, bad);
    };
    CHECK_THROWS_WITH_AS(with_gluing({0, 0, 5, 1, kSwap01}),
                         "a gluing references a tetrahedron that does not exist", DomainError);
    CHECK_THROWS_WITH_AS(with_gluing({0, 4, 1, 1, kSwap01}), "face indices must lie in 0..3",
                         DomainError);
    CHECK_THROWS_WITH_AS(with_gluing({0, 0, 1, 1, {0, 0, 2, 3}}),
                         "the vertex bijection must be a permutation of 0..3", DomainError);
    CHECK_THROWS_WITH_AS(with_gluing({0, 0, 1, 1, {2, 0, 1, 3}}),
                         "the vertex bijection must send the glued face to its partner",
                         DomainError);
    CHECK_THROWS_WITH_AS(with_gluing({0, 0, 1, 0, {0, 1, 2, 3}}),
                         "the vertex bijection must reverse orientation (odd permutation)",
                         DomainError);

    std::vector<FaceGluing> missing(gluings.begin(), gluings.end() - 1);
    CHECK_THROWS_WITH_AS(DecoratedTriangulation({seed, swapped}, missing),
                         "face (0, 3) is never glued", DomainError);

    std::vector<FaceGluing> doubled_slot = gluings;
    doubled_slot.push_back(gluings[0]);
    CHECK_THROWS_WITH_AS(DecoratedTriangulation({seed, swapped}, doubled_slot),
                         "face (0, 0) is glued more than once", DomainError);

    std::vector<Flag> repeated{seed[0], seed[0], seed[2], seed[3]};
    std::vector<Flag> repeated_swapped{seed[0], seed[0], seed[2], seed[3]};
    CHECK_THROWS_WITH_AS(DecoratedTriangulation({repeated, repeated_swapped}, gluings),
                         "the flag configuration of tetrahedron 0 is not generic", DomainError);
}
