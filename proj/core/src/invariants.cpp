#include "flaginv/invariants.hpp"

#include <algorithm>
#include <utility>

#include "flaginv/errors.hpp"

namespace flaginv {

const char* quotient_space_name(QuotientSpace space) {
    switch (space) {
        case QuotientSpace::P1Triple: return "P1-triple";
        case QuotientSpace::P8LineHyperplaneR4: return "P8-line-hyperplane-r4";
        case QuotientSpace::P2Planes: return "P2-planes";
        case QuotientSpace::MomentRay: return "moment-ray";
    }
    throw DomainError("kind-mismatch", "unknown quotient space");
}

namespace {

std::size_t expected_coords(QuotientSpace space) {
    switch (space) {
        case QuotientSpace::P1Triple: return 2;
        case QuotientSpace::P8LineHyperplaneR4: return 9;
        case QuotientSpace::P2Planes: return 3;
        case QuotientSpace::MomentRay: return 0; // length depends on r
    }
    return 0;
}

} // namespace

QuotientPoint::QuotientPoint(QuotientSpace space, std::vector<GaussianRational> coords)
    : space_(space), coords_(std::move(coords)) {
    std::size_t expect = expected_coords(space_);
    if (coords_.empty() || (expect != 0 && coords_.size() != expect))
        throw DomainError("shape", "wrong number of homogeneous coordinates");
    bool any = false;
    for (const auto& c : coords_) any = any || !c.is_zero();
    if (!any) throw DomainError("degenerate", "all homogeneous coordinates vanish");
}

bool operator==(const QuotientPoint& a, const QuotientPoint& b) {
    if (a.space_ != b.space_ || a.coords_.size() != b.coords_.size()) return false;
    std::size_t j = 0;
    while (b.coords_[j].is_zero()) ++j; // some coordinate is nonzero
    if (a.coords_[j].is_zero()) return false;
    GaussianRational lambda = a.coords_[j] / b.coords_[j];
    if (a.space_ == QuotientSpace::MomentRay &&
        (!lambda.is_real() || lambda.re().sign() <= 0))
        return false;
    for (std::size_t k = 0; k < a.coords_.size(); ++k)
        if (a.coords_[k] != lambda * b.coords_[k]) return false;
    return true;
}

std::vector<Index> index_compositions(std::size_t total, std::size_t parts) {
    std::vector<Index> out;
    Index acc(parts, 0);
    auto rec = [&](auto&& self, std::size_t slot, std::size_t left) -> void {
        if (slot + 1 == parts) {
            acc[slot] = left;
            out.push_back(acc);
            return;
        }
        for (std::size_t v = 0; v <= left; ++v) {
            acc[slot] = v;
            self(self, slot + 1, left - v);
        }
    };
    if (parts == 0) return out;
    rec(rec, 0, total);
    return out;
}

namespace {

std::string index_str(const Index& alpha) {
    std::string s;
    for (std::size_t v : alpha) s += std::to_string(v);
    return s;
}

const GaussianRational& lookup(const std::map<Index, GaussianRational>& entries,
                               const Index& alpha) {
    auto it = entries.find(alpha);
    if (it == entries.end())
        throw DomainError("missing-index", "no cross-ratio entry for index " + index_str(alpha));
    return it->second;
}

} // namespace

const GaussianRational& CrossRatioVector::at(const Index& alpha) const {
    return lookup(entries, alpha);
}

const GaussianRational& TripleRatioVector::at(const Index& alpha) const {
    return lookup(entries, alpha);
}

GaussianRational s_sigma(const Configuration& c, const Derangement& sigma) {
    if (c.kind() != ConfigKind::LineHyperplane)
        throw DomainError("kind-mismatch", "invariant sections need line-hyperplane flags");
    if (static_cast<std::size_t>(sigma.size()) != c.size())
        throw DomainError("size", "derangement size differs from configuration size");
    const auto& f = c.pairs();
    GaussianRational prod(1);
    for (std::size_t i = 0; i < f.size(); ++i) prod = prod * f[i].pair(f[sigma(static_cast<int>(i))]);
    return prod;
}

QuotientPoint quotient_point_line_hyperplane(const Configuration& c) {
    if (c.kind() != ConfigKind::LineHyperplane)
        throw DomainError("kind-mismatch", "quotient map needs line-hyperplane flags");
    std::size_t r = c.size();
    if (r != 3 && r != 4)
        throw DomainError("size", "quotient map is available for triples and quadruples");
    std::vector<GaussianRational> coords;
    bool any = false;
    for (const Derangement& sigma : enumerate_derangements(static_cast<int>(r))) {
        coords.push_back(s_sigma(c, sigma));
        any = any || !coords.back().is_zero();
    }
    if (!any) throw DomainError("not-semistable", "every invariant section vanishes");
    return QuotientPoint(r == 3 ? QuotientSpace::P1Triple : QuotientSpace::P8LineHyperplaneR4,
                         std::move(coords));
}

std::map<std::string, GaussianRational> w_ratios(const QuotientPoint& q) {
    if (q.space() != QuotientSpace::P8LineHyperplaneR4)
        throw DomainError("kind-mismatch", "coordinate ratios are defined on the quadruple quotient");
    const auto& x = q.coords();
    // Table of (numerator, denominator) positions, 1-based as in x1..x9.
    const struct { const char* name; std::size_t num, den; } table[] = {
        {"w12", 5, 8}, {"w13", 9, 2}, {"w14", 3, 5},
        {"w23", 1, 3}, {"w24", 2, 1}, {"w34", 5, 6},
    };
    std::map<std::string, GaussianRational> out;
    for (const auto& row : table) {
        if (x[row.den - 1].is_zero())
            throw DomainError("division-by-zero",
                              std::string(row.name) + " undefined: coordinate x" +
                                  std::to_string(row.den) + " vanishes");
        out[row.name] = x[row.num - 1] / x[row.den - 1];
    }
    return out;
}

QuotientPoint planes_invariants(const Configuration& c) {
    if (c.kind() != ConfigKind::PlanesIn4)
        throw DomainError("kind-mismatch", "plane invariants need planes in C^4");
    if (c.size() != 4)
        throw DomainError("size", "plane invariants need exactly four planes");
    const auto& w = c.flags();
    auto d = [&](std::size_t i, std::size_t j) {
        return det(hstack(w[i].subspace(0), w[j].subspace(0)));
    };
    GaussianRational s1234 = d(0, 1) * d(2, 3);
    GaussianRational s1324 = d(0, 2) * d(1, 3);
    GaussianRational s1423 = d(0, 3) * d(1, 2);
    if (s1234.is_zero() && s1324.is_zero() && s1423.is_zero())
        throw DomainError("not-semistable", "every invariant section vanishes");
    return QuotientPoint(QuotientSpace::P2Planes, {s1234, s1324, s1423});
}

QuotientPoint planes_affine_chart(const Matrix& a1, const Matrix& a2) {
    if (a1.rows() != 2 || a1.cols() != 2 || a2.rows() != 2 || a2.cols() != 2)
        throw DomainError("shape", "chart parameters must be 2x2 matrices");
    Matrix prod = a1 * a2;
    return QuotientPoint(QuotientSpace::P2Planes,
                         {det(prod - Matrix::identity(2)), det(prod), GaussianRational(1)});
}

std::vector<Matrix> planes_chart_quadruple(const Matrix& a1, const Matrix& a2) {
    if (a1.rows() != 2 || a1.cols() != 2 || a2.rows() != 2 || a2.cols() != 2)
        throw DomainError("shape", "chart parameters must be 2x2 matrices");
    Matrix id = Matrix::identity(2), zero(2, 2);
    return {vstack(id, zero), vstack(zero, id), vstack(id, a2), vstack(a1, id)};
}

namespace {

// det of the concatenated adapted-basis prefixes; zero iff the pattern fails.
GaussianRational delta(const std::vector<Matrix>& bases, const Index& beta) {
    std::size_t n = bases.front().rows();
    Matrix m(n, 0);
    for (std::size_t i = 0; i < beta.size(); ++i)
        if (beta[i] > 0) m = hstack(m, bases[i].cols_slice(0, beta[i]));
    return det(m);
}

Index shifted(const Index& alpha, int d0, int d1, int d2) {
    auto add = [](std::size_t a, int d) {
        return static_cast<std::size_t>(static_cast<long>(a) + d);
    };
    return {add(alpha[0], d0), add(alpha[1], d1), add(alpha[2], d2)};
}

std::vector<Matrix> adapted_bases(const Configuration& c, std::size_t count, const char* what) {
    if (c.kind() != ConfigKind::Complete)
        throw DomainError("kind-mismatch", what);
    if (c.size() != count)
        throw DomainError("size", what);
    std::vector<Matrix> bases;
    for (const Flag& f : c.flags()) bases.push_back(f.adapted_basis());
    return bases;
}

GaussianRational nonzero_delta(const std::vector<Matrix>& bases, const Index& beta) {
    GaussianRational d = delta(bases, beta);
    if (d.is_zero())
        throw DomainError("not-generic",
                          "pattern determinant " + index_str(beta) + " vanishes");
    return d;
}

} // namespace

TripleRatioVector triple_ratios(const Configuration& c) {
    std::vector<Matrix> bases = adapted_bases(c, 3, "triple ratios need three complete flags");
    std::size_t n = c.ambient_dim();
    TripleRatioVector out;
    out.n = n;
    for (const Index& alpha : index_compositions(n, 3)) {
        if (alpha[0] < 1 || alpha[1] < 1 || alpha[2] < 1) continue;
        GaussianRational num = nonzero_delta(bases, shifted(alpha, 0, -1, 1)) *
                               nonzero_delta(bases, shifted(alpha, 1, 0, -1)) *
                               nonzero_delta(bases, shifted(alpha, -1, 1, 0));
        GaussianRational den = nonzero_delta(bases, shifted(alpha, 1, -1, 0)) *
                               nonzero_delta(bases, shifted(alpha, 0, 1, -1)) *
                               nonzero_delta(bases, shifted(alpha, -1, 0, 1));
        out.entries.emplace(alpha, num / den);
    }
    return out;
}

GaussianRational triple_ratio_product_check(const Configuration& c) {
    TripleRatioVector t = triple_ratios(c);
    GaussianRational prod(1);
    for (const auto& [alpha, value] : t.entries) prod = prod * value;

    std::vector<Matrix> bases = adapted_bases(c, 3, "triple ratios need three complete flags");
    std::size_t n = c.ambient_dim();
    GaussianRational direct = (nonzero_delta(bases, {n - 1, 1, 0}) *
                               nonzero_delta(bases, {0, n - 1, 1}) *
                               nonzero_delta(bases, {1, 0, n - 1})) /
                              (nonzero_delta(bases, {n - 1, 0, 1}) *
                               nonzero_delta(bases, {1, n - 1, 0}) *
                               nonzero_delta(bases, {0, 1, n - 1}));
    if (prod != direct)
        throw DomainError("inconsistent", "triple-ratio product disagrees with its closed form");

    // Independent route through the (line, hyperplane) projection.  Moving
    // each line generator past the n-1 prefix columns of another flag costs a
    // sign, so the section ratio matches the product only up to (-1)^(n-1).
    std::vector<LineHyperplaneFlag> pairs;
    for (const Flag& f : c.flags()) pairs.push_back(project_line_hyperplane(f));
    Configuration p = Configuration::line_hyperplane(std::move(pairs));
    GaussianRational ratio = s_sigma(p, Derangement({1, 2, 0})) / s_sigma(p, Derangement({2, 0, 1}));
    if (n % 2 == 0) ratio = -ratio;
    if (prod != ratio)
        throw DomainError("inconsistent", "triple-ratio product disagrees with the section ratio");
    return prod;
}

CrossRatioVector cross_ratios(const Configuration& c) {
    std::vector<Matrix> bases = adapted_bases(c, 4, "cross-ratios need four complete flags");
    std::size_t n = c.ambient_dim();
    if (n < 2) throw DomainError("size", "cross-ratios need ambient dimension at least 2");
    CrossRatioVector out;
    out.n = n;
    for (const Index& alpha : index_compositions(n - 2, 4)) {
        Matrix e(n, 0);
        for (std::size_t i = 0; i < 4; ++i)
            if (alpha[i] > 0) e = hstack(e, bases[i].cols_slice(0, alpha[i]));
        if (rank(e) != n - 2)
            throw DomainError("not-generic",
                              "pattern " + index_str(alpha) + " spans the wrong dimension");

        // Quotient coordinates: standard basis vectors at the non-pivot
        // positions of the span complement it.
        std::vector<bool> used(n, false);
        for (std::size_t p : row_echelon(e.transpose()).pivot_cols) used[p] = true;
        Matrix comp(n, 0);
        for (std::size_t p = 0; p < n; ++p) {
            if (used[p]) continue;
            Matrix unit(n, 1);
            unit.at(p, 0) = GaussianRational(1);
            comp = hstack(comp, unit);
        }
        Matrix full = hstack(e, comp);

        std::vector<std::vector<GaussianRational>> u;
        for (std::size_t i = 0; i < 4; ++i) {
            Matrix sol = solve(full, bases[i].col(alpha[i]));
            std::vector<GaussianRational> ui = {sol.at(n - 2, 0), sol.at(n - 1, 0)};
            if (ui[0].is_zero() && ui[1].is_zero())
                throw DomainError("not-generic", "line " + std::to_string(i + 1) +
                                                     " collapses in pattern " + index_str(alpha));
            u.push_back(std::move(ui));
        }
        // chi = (d13 d24) / (d14 d23) on the quotient plane.  The numerator may
        // vanish (chi = 0) and chi may equal 1; only the denominator pairs must
        // stay independent.
        auto d2 = [&](std::size_t i, std::size_t j) {
            return u[i][0] * u[j][1] - u[i][1] * u[j][0];
        };
        GaussianRational den = d2(0, 3) * d2(1, 2);
        if (den.is_zero())
            throw DomainError("not-generic",
                              "denominator lines coincide in pattern " + index_str(alpha));
        out.entries.emplace(alpha, (d2(0, 2) * d2(1, 3)) / den);
    }
    return out;
}

namespace {

const GaussianRational& chi_at(const CrossRatioVector& v, std::size_t a, std::size_t b,
                               std::size_t c, std::size_t d) {
    return v.at({a, b, c, d});
}

GaussianRational one_minus_reciprocal(const GaussianRational& chi, const std::string& what) {
    if (chi.is_zero())
        throw DomainError("division-by-zero", what + " needs a nonzero cross-ratio");
    return GaussianRational(1) - chi.reciprocal();
}

GaussianRational reciprocal_one_minus(const GaussianRational& chi, const std::string& what) {
    GaussianRational denom = GaussianRational(1) - chi;
    if (denom.is_zero())
        throw DomainError("division-by-zero", what + " needs a cross-ratio different from 1");
    return denom.reciprocal();
}

} // namespace

std::map<std::string, GaussianRational> convert_chi_to_w(const CrossRatioVector& v) {
    if (v.n < 2) throw DomainError("size", "cross-ratio vector carries no dimension");
    std::size_t m = v.n - 2;
    GaussianRational w12(1), w34(1), w14(1), w23(1), w24(1), w13(1);
    for (std::size_t i = 0; i <= m; ++i) {
        std::size_t j = m - i;
        w12 = w12 * chi_at(v, i, j, 0, 0);
        w34 = w34 * chi_at(v, 0, 0, i, j);
        w14 = w14 * one_minus_reciprocal(chi_at(v, i, 0, 0, j), "w14");
        w23 = w23 * one_minus_reciprocal(chi_at(v, 0, i, j, 0), "w23");
        w24 = w24 * reciprocal_one_minus(chi_at(v, 0, i, 0, j), "w24");
        w13 = w13 * reciprocal_one_minus(chi_at(v, i, 0, j, 0), "w13");
    }
    return {{"w12", w12}, {"w13", w13}, {"w14", w14},
            {"w23", w23}, {"w24", w24}, {"w34", w34}};
}

QuotientPoint convert_chi_to_planes(const CrossRatioVector& v) {
    if (v.n != 4)
        throw DomainError("kind-mismatch", "plane conversion is defined for dimension 4");
    GaussianRational t0 = chi_at(v, 0, 1, 1, 0) * chi_at(v, 0, 1, 0, 1) *
                          chi_at(v, 1, 0, 1, 0) * chi_at(v, 1, 0, 0, 1);
    GaussianRational t1 = one_minus_reciprocal(chi_at(v, 0, 0, 1, 1), "plane conversion") *
                          one_minus_reciprocal(chi_at(v, 1, 1, 0, 0), "plane conversion") *
                          one_minus_reciprocal(chi_at(v, 0, 1, 0, 1), "plane conversion") *
                          one_minus_reciprocal(chi_at(v, 1, 0, 1, 0), "plane conversion");
    return QuotientPoint(QuotientSpace::P2Planes, {t0 * t1, t0, GaussianRational(1)});
}

} // namespace flaginv
