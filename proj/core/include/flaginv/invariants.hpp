#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "flaginv/derangements.hpp"
#include "flaginv/flags.hpp"
#include "flaginv/gaussian.hpp"
#include "flaginv/matrix.hpp"

namespace flaginv {

enum class QuotientSpace { P1Triple, P8LineHyperplaneR4, P2Planes, MomentRay };

// Stable tag used by serialized output.
const char* quotient_space_name(QuotientSpace space);

// Point of a quotient target space in homogeneous coordinates.  Equality is
// exact: projective for the P^k spaces (common nonzero scalar), and up to a
// positive real rational factor for moment rays.
class QuotientPoint {
public:
    QuotientPoint(QuotientSpace space, std::vector<GaussianRational> coords);

    QuotientSpace space() const { return space_; }
    const std::vector<GaussianRational>& coords() const { return coords_; }

    friend bool operator==(const QuotientPoint& a, const QuotientPoint& b);
    friend bool operator!=(const QuotientPoint& a, const QuotientPoint& b) { return !(a == b); }

private:
    QuotientSpace space_;
    std::vector<GaussianRational> coords_;
};

using Index = std::vector<std::size_t>;

// All tuples of `parts` non-negative integers summing to `total`, in
// lexicographic order.
std::vector<Index> index_compositions(std::size_t total, std::size_t parts);

// Cross-ratio coordinates of a quadruple of complete flags, keyed by the
// four-part index patterns summing to n-2.
struct CrossRatioVector {
    std::size_t n = 0;
    std::map<Index, GaussianRational> entries;

    const GaussianRational& at(const Index& alpha) const;
};

// Triple-ratio coordinates of a triple of complete flags, keyed by the
// three-part index patterns summing to n with every part positive.
struct TripleRatioVector {
    std::size_t n = 0;
    std::map<Index, GaussianRational> entries;

    const GaussianRational& at(const Index& alpha) const;
};

// prod_i phi_i(v_{sigma(i)}) over the stored representatives.  Individual
// values depend on the representatives; all of them rescale together.
GaussianRational s_sigma(const Configuration& c, const Derangement& sigma);

// [s_sigma1 : ... : s_sigmaN] over the derangements of r in lexicographic
// order; P^1 for triples, P^8 for quadruples.
QuotientPoint quotient_point_line_hyperplane(const Configuration& c);

// The six coordinate ratios w12 = x5/x8, w13 = x9/x2, w14 = x3/x5,
// w23 = x1/x3, w24 = x2/x1, w34 = x5/x6 of a P^8 point, keyed "w12".."w34".
std::map<std::string, GaussianRational> w_ratios(const QuotientPoint& q);

// [s_1234 : s_1324 : s_1423] of four planes in C^4, each coordinate a product
// of two 4x4 determinants of stacked generators.
QuotientPoint planes_invariants(const Configuration& c);

// Image of the affine chart (A1, A2) -> (W1, W2, exp(A2) W1, exp(A1) W2):
// [det(A1 A2 - id) : det(A1 A2) : 1].
QuotientPoint planes_affine_chart(const Matrix& a1, const Matrix& a2);

// Generator matrices of the chart quadruple above; W1, W2 are the standard
// coordinate planes.
std::vector<Matrix> planes_chart_quadruple(const Matrix& a1, const Matrix& a2);

TripleRatioVector triple_ratios(const Configuration& c);

// prod of all triple ratios; checked internally against the closed form
// Delta_(n-1,1,0) Delta_(0,n-1,1) Delta_(1,0,n-1) over the transposed ones.
GaussianRational triple_ratio_product_check(const Configuration& c);

CrossRatioVector cross_ratios(const Configuration& c);

// The six products of Prop-style conversions from cross-ratios to the w's.
std::map<std::string, GaussianRational> convert_chi_to_w(const CrossRatioVector& v);

// n = 4 only.  With t0 = chi0110 chi0101 chi1010 chi1001 and
// t1 = (1-1/chi0011)(1-1/chi1100)(1-1/chi0101)(1-1/chi1010), the cross-ratio
// products satisfy t0 = s1324/s1423 and t1 = s1234/s1324, so the quotient
// point of the underlying plane quadruple is [t0*t1 : t0 : 1].
QuotientPoint convert_chi_to_planes(const CrossRatioVector& v);

} // namespace flaginv
