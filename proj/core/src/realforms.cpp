#include "flaginv/realforms.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "flaginv/errors.hpp"
#include "flaginv/semistability.hpp"

namespace flaginv {

namespace {

void swap_row_col(Matrix& w, std::size_t a, std::size_t b) {
    const std::size_t n = w.rows();
    for (std::size_t j = 0; j < n; ++j) std::swap(w.at(a, j), w.at(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(w.at(i, a), w.at(i, b));
}

// Exact inertia of a hermitian matrix by congruence reduction: bring a
// nonzero entry onto the diagonal (manufacturing one from an off-diagonal
// entry when the whole trailing diagonal vanishes), record the sign of the
// pivot, and clear its row and column with the matching row/column pair of
// operations so the matrix stays hermitian throughout.
std::pair<std::size_t, std::size_t> inertia(Matrix w) {
    const std::size_t n = w.rows();
    std::size_t plus = 0;
    std::size_t minus = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (w.at(k, k).is_zero()) {
            for (std::size_t i = k + 1; i < n; ++i) {
                if (!w.at(i, i).is_zero()) {
                    swap_row_col(w, k, i);
                    break;
                }
            }
        }
        if (w.at(k, k).is_zero()) {
            // Trailing diagonal is all zero.  If some off-diagonal entry a
            // survives, adding c times its column (c = 1 or i, whichever
            // makes c*a + conj(c*a) nonzero) creates a usable pivot.
            std::size_t fi = n;
            std::size_t fj = n;
            for (std::size_t i = k; i < n && fi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!w.at(i, j).is_zero()) {
                        fi = i;
                        fj = j;
                        break;
                    }
            if (fi == n) break;  // trailing block identically zero
            if (fi != k) swap_row_col(w, k, fi);
            GaussianRational c = w.at(k, fj).re() != Rational(0)
                                     ? GaussianRational(1)
                                     : GaussianRational::i();
            for (std::size_t i = 0; i < n; ++i)
                w.at(i, k) = w.at(i, k) + c * w.at(i, fj);
            for (std::size_t j = 0; j < n; ++j)
                w.at(k, j) = w.at(k, j) + c.conj() * w.at(fj, j);
        }
        const GaussianRational d = w.at(k, k);
        if (d.is_zero()) continue;
        if (d.re().sign() > 0)
            ++plus;
        else
            ++minus;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (w.at(i, k).is_zero()) continue;
            const GaussianRational f = w.at(i, k) / d;
            for (std::size_t j = 0; j < n; ++j)
                w.at(i, j) = w.at(i, j) - f * w.at(k, j);
            for (std::size_t j = 0; j < n; ++j)
                w.at(j, i) = w.at(j, i) - f.conj() * w.at(j, k);
        }
    }
    return {plus, minus};
}

// Kind, dimension and isotropy checks shared by the isotropic-line
// invariants; returns the line generators.
std::vector<Matrix> isotropic_generators(const Configuration& c, const HermitianForm& h) {
    if (c.kind() != ConfigKind::IsotropicLines)
        throw DomainError("kind", "this invariant needs an isotropic-lines configuration");
    if (h.dimension() != c.ambient_dim())
        throw DomainError("shape", "the form's dimension must match the configuration's");
    std::vector<Matrix> v;
    v.reserve(c.size());
    for (const Flag& f : c.flags()) v.push_back(f.subspace(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!h.is_isotropic(v[i]))
            throw DomainError("not-isotropic",
                              "line " + std::to_string(i + 1) + " is not isotropic for the form");
    return v;
}

GaussianRational line_section(const std::vector<Matrix>& v, const HermitianForm& h,
                              const Derangement& sigma) {
    GaussianRational prod(1);
    for (std::size_t i = 0; i < v.size() && !prod.is_zero(); ++i)
        prod = prod * h.pairing(v[i], v[static_cast<std::size_t>(sigma(static_cast<int>(i)))]);
    return prod;
}

bool rows_proportional(const Matrix& a, const Matrix& b) {
    return rank(vstack(a, b)) <= 1;
}

// x -> (-conj(x2), conj(x1), -conj(x4), conj(x3)) applied to each column.
Matrix tau_map(const Matrix& m) {
    Matrix out(4, m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        out.at(0, j) = -m.at(1, j).conj();
        out.at(1, j) = m.at(0, j).conj();
        out.at(2, j) = -m.at(3, j).conj();
        out.at(3, j) = m.at(2, j).conj();
    }
    return out;
}

void require_plane(const Flag& w) {
    if (w.steps() != 1 || w.dims()[0] != 2)
        throw DomainError("kind", "this test needs a single-step plane flag");
}

// Left row (a, b) with a*x + b*y = 0, cutting out exactly the module of p.
std::pair<RationalQuaternion, RationalQuaternion> killing_row(
    const QuaternionProjectivePoint& p) {
    if (p.y.is_zero()) return {RationalQuaternion(0), RationalQuaternion(1)};
    return {RationalQuaternion(1), -(p.x * p.y.reciprocal())};
}

RationalQuaternion apply_row(const std::pair<RationalQuaternion, RationalQuaternion>& row,
                             const QuaternionProjectivePoint& p) {
    return row.first * p.x + row.second * p.y;
}

}  // namespace

HermitianForm::HermitianForm(Matrix gram) : mat_(std::move(gram)) {
    if (!mat_.is_square() || mat_.rows() == 0)
        throw DomainError("shape", "a hermitian form needs a nonempty square matrix");
    if (mat_ != mat_.conj_transpose())
        throw DomainError("not-hermitian",
                          "the matrix of a hermitian form must equal its conjugate transpose");
    sig_ = inertia(mat_);
}

HermitianForm HermitianForm::lorentz(std::size_t n) {
    if (n < 2) throw DomainError("size", "the corner form needs dimension at least 2");
    Matrix m(n, n);
    m.at(0, n - 1) = GaussianRational(1);
    m.at(n - 1, 0) = GaussianRational(1);
    for (std::size_t i = 1; i + 1 < n; ++i) m.at(i, i) = GaussianRational(1);
    return HermitianForm(std::move(m));
}

HermitianForm HermitianForm::split(std::size_t n) {
    if (n == 0) throw DomainError("size", "the anti-diagonal form needs dimension at least 1");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1 - i) = GaussianRational(1);
    return HermitianForm(std::move(m));
}

GaussianRational HermitianForm::pairing(const Matrix& x, const Matrix& y) const {
    const std::size_t n = dimension();
    if (x.rows() != n || x.cols() != 1 || y.rows() != n || y.cols() != 1)
        throw DomainError("shape", "the pairing needs column vectors of the form's dimension");
    return (x.conj_transpose() * (mat_ * y)).at(0, 0);
}

bool HermitianForm::is_isotropic(const Matrix& v) const {
    return pairing(v, v).is_zero();
}

MomentRay::MomentRay(std::vector<Rational> re, std::vector<GaussianRational> cx)
    : real_part(std::move(re)), complex_part(std::move(cx)) {
    bool nonzero = false;
    for (const Rational& r : real_part) nonzero = nonzero || !r.is_zero();
    for (const GaussianRational& z : complex_part) nonzero = nonzero || !z.is_zero();
    if (!nonzero) throw DomainError("degenerate", "a moment ray needs a nonzero section");
}

QuotientPoint MomentRay::to_quotient_point() const {
    std::vector<GaussianRational> coords;
    coords.reserve(real_part.size() + complex_part.size());
    for (const Rational& r : real_part) coords.emplace_back(r);
    for (const GaussianRational& z : complex_part) coords.push_back(z);
    return QuotientPoint(QuotientSpace::MomentRay, std::move(coords));
}

bool operator==(const MomentRay& a, const MomentRay& b) {
    return a.real_part.size() == b.real_part.size() &&
           a.complex_part.size() == b.complex_part.size() &&
           a.to_quotient_point() == b.to_quotient_point();
}

QuaternionicCrossRatio::QuaternionicCrossRatio(Rational nsq, Rational re)
    : norm_sq(std::move(nsq)), real_part(std::move(re)) {
    if (real_part * real_part > norm_sq)
        throw DomainError("shape", "the real part of a quaternion is bounded by its modulus");
}

bool same_quaternion_point(const QuaternionProjectivePoint& a,
                           const QuaternionProjectivePoint& b) {
    if (a.y.is_zero() != b.y.is_zero()) return false;
    if (a.y.is_zero()) return true;  // both [x : 0], x != 0
    return a.x * a.y.reciprocal() == b.x * b.y.reciprocal();
}

bool is_real_flag(const Flag& f) {
    for (std::size_t k = 0; k < f.steps(); ++k) {
        const Matrix& w = f.subspace(k);
        if (rank(hstack(w, w.conjugate())) != w.cols()) return false;
    }
    return true;
}

bool is_su_flag(const LineHyperplaneFlag& f, const HermitianForm& h) {
    const std::size_t n = h.dimension();
    auto [p, q] = h.signature();
    if (!((p == n - 1 && q == 1) || (p == 1 && q == n - 1)))
        throw DomainError("signature", "the unitary flag test needs signature (n-1, 1)");
    if (f.ambient_dim() != n)
        throw DomainError("shape", "the form's dimension must match the flag's");
    if (!h.is_isotropic(f.line())) return false;
    Matrix alpha = f.line().conj_transpose() * h.matrix();
    return rows_proportional(f.form(), alpha);
}

bool is_isotropic_plane(const Flag& w, const HermitianForm& h) {
    require_plane(w);
    if (w.ambient_dim() != h.dimension())
        throw DomainError("shape", "the form's dimension must match the plane's");
    const Matrix& b = w.subspace(0);
    Matrix gram = b.conj_transpose() * (h.matrix() * b);
    return gram.is_zero();
}

bool is_quaternionic_plane(const Flag& w) {
    require_plane(w);
    if (w.ambient_dim() != 4)
        throw DomainError("shape", "the quaternionic structure lives on C^4");
    const Matrix& b = w.subspace(0);
    return rank(hstack(b, tau_map(b))) == 2;
}

std::vector<GaussianRational> epsilon_invariant(const Configuration& c, const HermitianForm& h,
                                                const std::vector<Derangement>& d) {
    if (c.size() % 2 == 0)
        throw DomainError("parity",
                          "the epsilon invariant needs an odd tuple; even tuples carry a "
                          "moment ray instead");
    std::vector<Matrix> v = isotropic_generators(c, h);
    std::vector<GaussianRational> out;
    out.reserve(d.size());
    for (const Derangement& sigma : d) {
        if (static_cast<std::size_t>(sigma.size()) != v.size())
            throw DomainError("size", "derangement size differs from configuration size");
        out.push_back(line_section(v, h, sigma));
    }
    return out;
}

MomentRay moment_ray(const Configuration& c, const HermitianForm& h) {
    SemistabilityVerdict verdict = semistable_isotropic_lines(c, h);
    if (!verdict.semistable)
        throw DomainError("not-semistable", "the moment ray needs a semi-stable tuple");
    std::vector<Matrix> v = isotropic_generators(c, h);
    std::vector<Rational> re;
    std::vector<GaussianRational> cx;
    for (const Derangement& sigma : moment_slot_order(static_cast<int>(v.size()))) {
        GaussianRational s = line_section(v, h, sigma);
        if (sigma.is_involution()) {
            if (!s.im().is_zero())
                throw DomainError("inconsistent", "an order-2 section came out non-real");
            re.push_back(s.re());
        } else {
            cx.push_back(s);
        }
    }
    return MomentRay(std::move(re), std::move(cx));
}

GaussianRational cartan_argument_class(const Configuration& c, const HermitianForm& h) {
    if (c.size() != 3)
        throw DomainError("size", "the argument class is defined for triples");
    const std::size_t n = h.dimension();
    auto [p, q] = h.signature();
    if (!((p == n - 1 && q == 1) || (p == 1 && q == n - 1)))
        throw DomainError("signature", "the argument class needs signature (n-1, 1)");
    std::vector<Matrix> v = isotropic_generators(c, h);
    GaussianRational p12 = h.pairing(v[0], v[1]);
    GaussianRational p23 = h.pairing(v[1], v[2]);
    GaussianRational p31 = h.pairing(v[2], v[0]);
    if (p12.is_zero() || p23.is_zero() || p31.is_zero())
        throw DomainError("degenerate", "a pairing of the triple vanishes");
    GaussianRational prod = p12 * p23 * p31;
    if (prod.re().sign() > 0)
        throw DomainError("inconsistent", "cyclic product escaped the closed left half-plane");
    return prod;
}

QuaternionicCrossRatio quaternionic_cross_ratio(const QuaternionProjectivePoint& x1,
                                                const QuaternionProjectivePoint& x2,
                                                const QuaternionProjectivePoint& x3,
                                                const QuaternionProjectivePoint& x4) {
    const QuaternionProjectivePoint pts[] = {x1, x2, x3, x4};
    for (const QuaternionProjectivePoint& p : pts)
        if (p.x.is_zero() && p.y.is_zero())
            throw DomainError("degenerate", "the zero vector is not a projective point");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (same_quaternion_point(pts[i], pts[j]))
                throw DomainError("repeated", "the cross-ratio needs pairwise distinct points");

    // Row one kills x1, row two kills x3; scaling each on the left by its
    // value on x2 sends x1, x2, x3 to [0:1], [1:1], [1:0].
    auto row1 = killing_row(x1);
    auto row2 = killing_row(x3);
    RationalQuaternion u = apply_row(row1, x2);
    RationalQuaternion w = apply_row(row2, x2);
    row1 = {u.reciprocal() * row1.first, u.reciprocal() * row1.second};
    row2 = {w.reciprocal() * row2.first, w.reciprocal() * row2.second};
    RationalQuaternion s = apply_row(row1, x4);
    RationalQuaternion t = apply_row(row2, x4);
    RationalQuaternion qval = s * t.reciprocal();
    return {qval.norm_sq(), qval.real_part()};
}

QuotientPoint planes_point_from_quaternions(const RationalQuaternion& q1,
                                            const RationalQuaternion& q2) {
    RationalQuaternion prod = q1 * q2;
    return QuotientPoint(QuotientSpace::P2Planes,
                         {GaussianRational((prod - RationalQuaternion(1)).norm_sq()),
                          GaussianRational(prod.norm_sq()), GaussianRational(1)});
}

ConicPosition sl2h_conic_membership(const QuotientPoint& p) {
    if (p.space() != QuotientSpace::P2Planes)
        throw DomainError("kind", "conic membership is defined on the plane quotient");
    for (const GaussianRational& z : p.coords())
        if (!z.im().is_zero())
            throw DomainError("not-real", "conic membership needs real coordinates");
    const Rational t0 = p.coords()[0].re();
    const Rational t1 = p.coords()[1].re();
    const Rational t2 = p.coords()[2].re();
    const Rational value = t0 * t0 + t1 * t1 + t2 * t2 -
                           Rational(2) * (t0 * t1 + t0 * t2 + t1 * t2);
    if (value.sign() < 0) return ConicPosition::Interior;
    if (value.sign() == 0) return ConicPosition::Boundary;
    return ConicPosition::Exterior;
}

std::vector<RealFormMembership> classify_configuration(const Configuration& c,
                                                       const std::vector<HermitianForm>& forms) {
    std::vector<RealFormMembership> out;
    const std::size_t n = c.ambient_dim();
    const std::string real_label = "SL(" + std::to_string(n) + ",R)";

    RealFormMembership real_test{real_label, {}};
    if (c.kind() == ConfigKind::LineHyperplane) {
        for (const LineHyperplaneFlag& f : c.pairs()) {
            bool line_real = rank(hstack(f.line(), f.line().conjugate())) == 1;
            bool form_real = rows_proportional(f.form(), f.form().conjugate());
            real_test.member_passes.push_back(line_real && form_real);
        }
    } else {
        for (const Flag& f : c.flags()) real_test.member_passes.push_back(is_real_flag(f));
    }
    out.push_back(std::move(real_test));

    for (const HermitianForm& h : forms) {
        if (h.dimension() != n) continue;
        auto [p, q] = h.signature();
        const bool lorentzian = (p == n - 1 && q == 1) || (p == 1 && q == n - 1);
        const std::string su_label =
            "SU(" + std::to_string(p) + "," + std::to_string(q) + ")";
        if (lorentzian && c.kind() == ConfigKind::LineHyperplane) {
            RealFormMembership m{su_label, {}};
            for (const LineHyperplaneFlag& f : c.pairs())
                m.member_passes.push_back(is_su_flag(f, h));
            out.push_back(std::move(m));
        }
        if (lorentzian && c.kind() == ConfigKind::IsotropicLines) {
            RealFormMembership m{su_label, {}};
            for (const Flag& f : c.flags())
                m.member_passes.push_back(h.is_isotropic(f.subspace(0)));
            out.push_back(std::move(m));
        }
        if (c.kind() == ConfigKind::PlanesIn4 && p == 2 && q == 2) {
            RealFormMembership m{su_label, {}};
            for (const Flag& f : c.flags()) m.member_passes.push_back(is_isotropic_plane(f, h));
            out.push_back(std::move(m));
        }
    }

    if (c.kind() == ConfigKind::PlanesIn4) {
        RealFormMembership m{"SL(2,H)", {}};
        for (const Flag& f : c.flags()) m.member_passes.push_back(is_quaternionic_plane(f));
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace flaginv
