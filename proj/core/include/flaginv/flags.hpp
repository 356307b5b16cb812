#pragma once

#include <cstddef>
#include <vector>

#include "flaginv/matrix.hpp"

namespace flaginv {

// Nested chain of subspaces of C^n, each stored as a generator matrix whose
// columns span it.  Construction validates full column rank and containment;
// degenerate input is rejected here, not at use sites.
class Flag {
public:
    Flag(std::size_t ambient_dim, std::vector<Matrix> subspaces);

    // Complete flag from an adapted basis: F_k = span of the first k columns.
    static Flag complete_from_basis(const Matrix& basis);
    static Flag line(const Matrix& generator);        // single 1-dim step
    static Flag plane(const Matrix& generators);      // single 2-dim step

    std::size_t ambient_dim() const { return n_; }
    std::size_t steps() const { return subspaces_.size(); }
    const Matrix& subspace(std::size_t k) const { return subspaces_[k]; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    bool is_complete() const;

    // For a complete flag: n columns, F_k = span of the first k.  The first
    // n-1 are chosen deterministically from the stored generators (first
    // column enlarging the span); the last is the first standard basis vector
    // outside F_{n-1}.
    Matrix adapted_basis() const;

    friend bool operator==(const Flag& a, const Flag& b) {
        return a.n_ == b.n_ && a.subspaces_ == b.subspaces_;
    }
    friend bool operator!=(const Flag& a, const Flag& b) { return !(a == b); }

private:
    std::size_t n_;
    std::vector<Matrix> subspaces_;
    std::vector<std::size_t> dims_;
};

// Incident pair (line, hyperplane): v spans the line, the 1 x n form phi cuts
// out the hyperplane, and phi(v) = 0.
class LineHyperplaneFlag {
public:
    LineHyperplaneFlag(Matrix line, Matrix hyperplane_form);

    // Derives the cutting form from an n x (n-1) generator matrix.
    static LineHyperplaneFlag from_subspaces(const Matrix& line, const Matrix& hyperplane);

    std::size_t ambient_dim() const { return line_.rows(); }
    const Matrix& line() const { return line_; }
    const Matrix& form() const { return form_; }

    // phi(v): the pairing every invariant is built from.
    GaussianRational pair(const LineHyperplaneFlag& other_line) const {
        return (form_ * other_line.line_).at(0, 0);
    }

    friend bool operator==(const LineHyperplaneFlag& a, const LineHyperplaneFlag& b) {
        return a.line_ == b.line_ && a.form_ == b.form_;
    }
    friend bool operator!=(const LineHyperplaneFlag& a, const LineHyperplaneFlag& b) { return !(a == b); }

private:
    Matrix line_; // n x 1
    Matrix form_; // 1 x n
};

enum class ConfigKind { LineHyperplane, PlanesIn4, Complete, IsotropicLines };

// Ordered r-tuple of flags of one kind in a common ambient dimension.
class Configuration {
public:
    static Configuration line_hyperplane(std::vector<LineHyperplaneFlag> members);
    static Configuration planes(std::vector<Flag> members);
    static Configuration complete(std::vector<Flag> members);
    static Configuration isotropic_lines(std::vector<Flag> members);

    ConfigKind kind() const { return kind_; }
    std::size_t ambient_dim() const { return n_; }
    std::size_t size() const;

    const std::vector<LineHyperplaneFlag>& pairs() const;
    const std::vector<Flag>& flags() const;

private:
    Configuration(ConfigKind kind, std::size_t n) : kind_(kind), n_(n) {}

    ConfigKind kind_;
    std::size_t n_;
    std::vector<LineHyperplaneFlag> pairs_;
    std::vector<Flag> flags_;
};

// dim(span A + span B) via rank of the concatenation.
std::size_t sum_dim(const Matrix& a, const Matrix& b);
// dim(span A  intersect  span B); generators must have full column rank.
std::size_t intersection_dim(const Matrix& a, const Matrix& b);

// Genericity of a tuple of complete flags: every composition (a_1,..,a_r) of
// n with 0 <= a_i <= n has dim(F1_{a_1} + .. + Fr_{a_r}) = n.  Exhaustive;
// supported for n <= 6 and r <= 6.
bool is_generic(const Configuration& c);

// General position for line-hyperplane tuples.  For r <= n: the sum of lines
// has dimension r, the forms are independent, L_i meets H_j trivially for
// i != j, and the sum of lines meets the intersection of hyperplanes
// trivially.  For r > n: every n-element subset passes.
bool is_general_position(const Configuration& c);

// Planes in C^4: trivial intersection.  Complete flags: F1_k and F2_{n-k}
// span the whole space for every k.
bool is_opposite(const Flag& f1, const Flag& f2);

enum class DegeneracyClass { None, FiberZero, FiberInfinity, FiberMinusOne };

// Classification of a semi-stable triple of line-hyperplane flags by the
// shape of its incidence pattern.  FiberInfinity: L1 in H2, L2 in H3,
// L3 in H1.  FiberZero: the mirrored cycle.  FiberMinusOne: lines span a
// plane and hyperplanes share a codimension-2 subspace.
DegeneracyClass maximal_degeneracy_class(const Configuration& c);

// (line, hyperplane) pair of a complete flag: first and last steps.
LineHyperplaneFlag project_line_hyperplane(const Flag& complete_flag);

} // namespace flaginv
