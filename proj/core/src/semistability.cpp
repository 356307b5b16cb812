#include "flaginv/semistability.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "flaginv/errors.hpp"

namespace flaginv {

namespace {

// Projective equality of two nonzero column vectors by cross-multiplication:
// u and w span the same line iff every 2x2 minor of (u | w) vanishes.
bool same_line(const Matrix& u, const Matrix& w) {
    const std::size_t n = u.rows();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (u.at(a, 0) * w.at(b, 0) != u.at(b, 0) * w.at(a, 0)) return false;
    return true;
}

}  // namespace

SemistabilityVerdict semistable_line_hyperplane(const Configuration& c) {
    if (c.kind() != ConfigKind::LineHyperplane)
        throw DomainError("kind",
                          "semistable_line_hyperplane needs a line-hyperplane configuration");
    const std::vector<LineHyperplaneFlag>& pairs = c.pairs();
    const std::size_t r = pairs.size();
    // adj[i][j]: sigma may send i to j, i.e. the factor phi_i(v_j) of
    // s_sigma survives.  A perfect matching on this grid is exactly a
    // derangement whose section does not vanish.
    std::vector<std::vector<bool>> adj(r, std::vector<bool>(r, false));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            adj[i][j] = i != j && !pairs[i].pair(pairs[j]).is_zero();
    SemistabilityVerdict out;
    out.witness = find_witness_matching(adj);
    out.semistable = out.witness.has_value();
    if (!out.semistable) out.reason = "no-matching";
    return out;
}

SemistabilityVerdict semistable_planes(const Configuration& c) {
    if (c.kind() != ConfigKind::PlanesIn4)
        throw DomainError("kind", "semistable_planes needs a quadruple of planes");
    const std::vector<Flag>& f = c.flags();
    // Pairings 12|34, 13|24, 14|23 as (first pair, second pair), with the
    // order-2 derangement that swaps within each pair.
    static const std::array<std::array<int, 4>, 3> pairings = {
        {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    SemistabilityVerdict out;
    for (const std::array<int, 4>& p : pairings) {
        if (is_opposite(f[static_cast<std::size_t>(p[0])], f[static_cast<std::size_t>(p[1])]) &&
            is_opposite(f[static_cast<std::size_t>(p[2])], f[static_cast<std::size_t>(p[3])])) {
            std::vector<int> images(4);
            images[static_cast<std::size_t>(p[0])] = p[1];
            images[static_cast<std::size_t>(p[1])] = p[0];
            images[static_cast<std::size_t>(p[2])] = p[3];
            images[static_cast<std::size_t>(p[3])] = p[2];
            out.witness = Derangement(std::move(images));
            out.semistable = true;
            return out;
        }
    }
    out.reason = "no-opposite-pairing";
    return out;
}

SemistabilityVerdict semistable_isotropic_lines(const Configuration& c, const HermitianForm& h) {
    if (c.kind() != ConfigKind::IsotropicLines)
        throw DomainError("kind",
                          "semistable_isotropic_lines needs an isotropic-lines configuration");
    if (h.dimension() != c.ambient_dim())
        throw DomainError("shape", "the form's dimension must match the configuration's");
    const std::vector<Flag>& flags = c.flags();
    const std::size_t r = flags.size();
    std::vector<Matrix> v;
    v.reserve(r);
    for (const Flag& f : flags) v.push_back(f.subspace(0));
    for (std::size_t i = 0; i < r; ++i)
        if (!h.is_isotropic(v[i]))
            throw DomainError("not-isotropic",
                              "line " + std::to_string(i + 1) + " is not isotropic for the form");
    std::size_t max_mult = 0;
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t mult = 0;
        for (std::size_t j = 0; j < r; ++j)
            if (same_line(v[i], v[j])) ++mult;
        if (mult > max_mult) max_mult = mult;
    }
    SemistabilityVerdict out;
    out.semistable = 2 * max_mult <= r;
    if (!out.semistable) out.reason = "line-repeated-more-than-half";
    if (r % 2 == 0) {
        for (const Derangement& sigma : order_two_derangements(static_cast<int>(r))) {
            GaussianRational prod(1);
            for (std::size_t i = 0; i < r && !prod.is_zero(); ++i)
                prod = prod * h.pairing(v[i], v[static_cast<std::size_t>(sigma(static_cast<int>(i)))]);
            if (!prod.is_zero()) {
                out.witness = sigma;
                break;
            }
        }
    }
    return out;
}

bool closed_orbit_planes(const Matrix& a1, const Matrix& a2) {
    if (a1.rows() != 2 || a1.cols() != 2 || a2.rows() != 2 || a2.cols() != 2)
        throw DomainError("shape", "closed_orbit_planes needs 2x2 chart matrices");
    return is_semisimple_2x2(a1) && is_semisimple_2x2(a2) && rank(a1) == rank(a2);
}

GeneralPositionDimensions stabilizer_dimension_general_position(std::size_t n, std::size_t r) {
    if (n < 3 || r < 3)
        throw DomainError("size", "the dimension formulas need n and r at least 3");
    const long d = static_cast<long>(n) - static_cast<long>(r);
    const long rl = static_cast<long>(r);
    GeneralPositionDimensions out;
    out.stabilizer = d > 0 ? d * d : 0;
    out.quotient = rl * rl - 3 * rl + 1 - (d < 0 ? d * d : 0);
    return out;
}

}  // namespace flaginv
