#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "flaginv/derangements.hpp"
#include "flaginv/flags.hpp"
#include "flaginv/gaussian.hpp"
#include "flaginv/invariants.hpp"
#include "flaginv/matrix.hpp"
#include "flaginv/quaternion.hpp"

namespace flaginv {

// Nondegenerate-or-not hermitian pairing on C^n, stored as its Gram matrix.
// Convention: h(x, y) = conj(x)^T * matrix * y, conjugate-linear in the
// FIRST argument, so h(y, x) = conj(h(x, y)) and h(v, v) is real.
// The signature (p, q) counts positive and negative inertia exactly.
class HermitianForm {
public:
    // Validates squareness and matrix == conj_transpose(matrix), then
    // computes the signature by exact congruence reduction.
    explicit HermitianForm(Matrix gram);

    // Corner form: ones at (1,n) and (n,1), identity in the middle block.
    // Signature (n-1, 1); the standard form with isotropic e_1 and e_n.
    static HermitianForm lorentz(std::size_t n);

    // Ones on the full anti-diagonal.  Signature (ceil(n/2), floor(n/2));
    // for n = 4 this is the split (2, 2) form with isotropic <e_1, e_2>.
    static HermitianForm split(std::size_t n);

    std::size_t dimension() const { return mat_.rows(); }
    const Matrix& matrix() const { return mat_; }
    std::pair<std::size_t, std::size_t> signature() const { return sig_; }

    // h(x, y) for column vectors of the form's dimension.
    GaussianRational pairing(const Matrix& x, const Matrix& y) const;

    // h(v, v) == 0.
    bool is_isotropic(const Matrix& v) const;

    friend bool operator==(const HermitianForm& a, const HermitianForm& b) {
        return a.mat_ == b.mat_;
    }
    friend bool operator!=(const HermitianForm& a, const HermitianForm& b) {
        return !(a == b);
    }

private:
    Matrix mat_;
    std::pair<std::size_t, std::size_t> sig_;
};

// Hermitian moment vector of an isotropic-line tuple, up to multiplication
// by a positive rational.  Slots follow moment_slot_order: one real entry
// per order-2 derangement (those sections are sums of squared moduli, hence
// real), then one complex entry per remaining inverse pair of derangements.
struct MomentRay {
    std::vector<Rational> real_part;
    std::vector<GaussianRational> complex_part;

    // Validates that at least one entry is nonzero.
    MomentRay(std::vector<Rational> re, std::vector<GaussianRational> cx);

    // Flattened coordinates (real slots first) carrying the ray semantics.
    QuotientPoint to_quotient_point() const;

    // Equality modulo a positive rational scalar, decided exactly.
    friend bool operator==(const MomentRay& a, const MomentRay& b);
    friend bool operator!=(const MomentRay& a, const MomentRay& b) { return !(a == b); }
};

// Conjugation class of a nonzero quaternion, recorded by the two exact
// conjugation invariants |q|^2 and Re(q).
struct QuaternionicCrossRatio {
    Rational norm_sq;
    Rational real_part;

    // Validates real_part^2 <= norm_sq.
    QuaternionicCrossRatio(Rational nsq, Rational re);

    friend bool operator==(const QuaternionicCrossRatio& a, const QuaternionicCrossRatio& b) {
        return a.norm_sq == b.norm_sq && a.real_part == b.real_part;
    }
    friend bool operator!=(const QuaternionicCrossRatio& a, const QuaternionicCrossRatio& b) {
        return !(a == b);
    }
};

// Point [x : y] of the quaternionic projective line: the right module
// generated by (x, y) != (0, 0).  GL_2(H) acts on the left.
struct QuaternionProjectivePoint {
    RationalQuaternion x;
    RationalQuaternion y;
};

// Same right H-module: exists lambda != 0 with x' = x lambda, y' = y lambda.
bool same_quaternion_point(const QuaternionProjectivePoint& a,
                           const QuaternionProjectivePoint& b);

// Every subspace of the flag equals its entrywise-conjugate span.
bool is_real_flag(const Flag& f);

// The line is h-isotropic and the hyperplane form is proportional to
// h(v, .).  Requires signature (n-1, 1) or (1, n-1).
bool is_su_flag(const LineHyperplaneFlag& f, const HermitianForm& h);

// h vanishes identically on the plane (all pairings of basis vectors).
bool is_isotropic_plane(const Flag& w, const HermitianForm& h);

// The plane of C^4 is fixed by x -> (-conj(x2), conj(x1), -conj(x4), conj(x3)).
bool is_quaternionic_plane(const Flag& w);

// Sections prod_i h(v_i, v_sigma(i)) of an odd isotropic-line tuple, one per
// derangement in d (normally pick_half_set(r)); well-defined on lines up to
// a common positive real rational factor.  Even r is rejected: its sections
// belong in a moment ray.
std::vector<GaussianRational> epsilon_invariant(const Configuration& c, const HermitianForm& h,
                                                const std::vector<Derangement>& d);

// Full moment vector of a semi-stable isotropic-line tuple in the
// moment_slot_order slots, as a ray.
MomentRay moment_ray(const Configuration& c, const HermitianForm& h);

// Cyclic product h(v1, v2) h(v2, v3) h(v3, v1) of a triple of isotropic
// lines, nonzero by requirement and well-defined up to a positive real
// factor.  Its real part is never positive; it vanishes exactly when the
// three lines lie on a common projective line.
GaussianRational cartan_argument_class(const Configuration& c, const HermitianForm& h);

// Conjugation class of the fourth point after moving the first three to
// [0:1], [1:1], [1:0]; complete invariant of quadruples of pairwise
// distinct points under GL_2(H).
QuaternionicCrossRatio quaternionic_cross_ratio(const QuaternionProjectivePoint& x1,
                                                const QuaternionProjectivePoint& x2,
                                                const QuaternionProjectivePoint& x3,
                                                const QuaternionProjectivePoint& x4);

// Value of the plane quotient map on the chart pair (q1, q2):
// [|q1 q2 - 1|^2 : |q1 q2|^2 : 1].
QuotientPoint planes_point_from_quaternions(const RationalQuaternion& q1,
                                            const RationalQuaternion& q2);

// Position of a real point of the plane quotient relative to the conic
// t0^2 + t1^2 + t2^2 = 2 (t0 t1 + t0 t2 + t1 t2) bounding the image of the
// quaternionic configurations.  Boundary points are exactly the quadruples
// whose quaternionic cross-ratio is real.
enum class ConicPosition { Interior, Boundary, Exterior };
ConicPosition sl2h_conic_membership(const QuotientPoint& p);

// Outcome of one real-structure membership test over a whole configuration.
struct RealFormMembership {
    std::string label;
    std::vector<bool> member_passes;

    bool all() const {
        for (bool b : member_passes)
            if (!b) return false;
        return true;
    }
};

// Runs every real-structure membership predicate applicable to the
// configuration's kind: the real-span test always, the unitary tests for
// each supplied form of fitting dimension and signature, and the
// quaternionic plane test for plane quadruples.  One entry per label with
// per-member detail; the configuration carries the label when all() holds.
std::vector<RealFormMembership> classify_configuration(const Configuration& c,
                                                       const std::vector<HermitianForm>& forms);

}  // namespace flaginv
