#include "flaginv/flags.hpp"

#include <algorithm>

#include "flaginv/derangements.hpp"
#include "flaginv/errors.hpp"

namespace flaginv {

Flag::Flag(std::size_t ambient_dim, std::vector<Matrix> subspaces)
    : n_(ambient_dim), subspaces_(std::move(subspaces)) {
    if (subspaces_.empty()) throw DomainError("degenerate", "flag with no subspaces");
    std::size_t prev = 0;
    for (std::size_t k = 0; k < subspaces_.size(); ++k) {
        const Matrix& m = subspaces_[k];
        if (m.rows() != n_ || m.cols() == 0)
            throw DomainError("shape", "flag subspace generators must be n x d with d >= 1");
        if (rank(m) != m.cols())
            throw DomainError("degenerate", "flag subspace generators are rank-deficient");
        if (m.cols() <= prev || m.cols() >= n_)
            throw DomainError("degenerate", "flag dimensions must increase strictly and stay below n");
        if (k > 0 && sum_dim(subspaces_[k - 1], m) != m.cols())
            throw DomainError("degenerate", "flag chain is not nested");
        prev = m.cols();
        dims_.push_back(m.cols());
    }
}

Flag Flag::complete_from_basis(const Matrix& basis) {
    if (!basis.is_square()) throw DomainError("shape", "adapted basis must be square");
    if (rank(basis) != basis.rows())
        throw DomainError("degenerate", "adapted basis is singular");
    std::vector<Matrix> chain;
    for (std::size_t k = 1; k < basis.rows(); ++k) chain.push_back(basis.cols_slice(0, k));
    return Flag(basis.rows(), std::move(chain));
}

Flag Flag::line(const Matrix& generator) { return Flag(generator.rows(), {generator}); }

Flag Flag::plane(const Matrix& generators) { return Flag(generators.rows(), {generators}); }

bool Flag::is_complete() const {
    if (dims_.size() != n_ - 1) return false;
    for (std::size_t k = 0; k < dims_.size(); ++k)
        if (dims_[k] != k + 1) return false;
    return true;
}

Matrix Flag::adapted_basis() const {
    if (!is_complete()) throw DomainError("kind-mismatch", "adapted basis needs a complete flag");
    Matrix basis(n_, n_);
    Matrix chosen(n_, 0);
    for (std::size_t k = 0; k < n_ - 1; ++k) {
        const Matrix& m = subspaces_[k];
        bool found = false;
        for (std::size_t j = 0; j < m.cols() && !found; ++j) {
            Matrix cand = m.col(j);
            if (rank(hstack(chosen, cand)) == k + 1) {
                chosen = hstack(chosen, cand);
                found = true;
            }
        }
        if (!found) throw DomainError("degenerate", "flag chain has no enlarging generator");
    }
    for (std::size_t p = 0; p < n_; ++p) {
        Matrix e(n_, 1);
        e.at(p, 0) = GaussianRational(1);
        if (rank(hstack(chosen, e)) == n_) {
            chosen = hstack(chosen, e);
            break;
        }
    }
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) basis.at(i, j) = chosen.at(i, j);
    return basis;
}

LineHyperplaneFlag::LineHyperplaneFlag(Matrix line, Matrix hyperplane_form)
    : line_(std::move(line)), form_(std::move(hyperplane_form)) {
    if (line_.cols() != 1 || form_.rows() != 1 || form_.cols() != line_.rows())
        throw DomainError("shape", "line must be n x 1 and form 1 x n");
    if (line_.is_zero()) throw DomainError("degenerate", "zero line generator");
    if (form_.is_zero()) throw DomainError("degenerate", "zero hyperplane form");
    if (!(form_ * line_).at(0, 0).is_zero())
        throw DomainError("degenerate", "line not contained in hyperplane");
}

LineHyperplaneFlag LineHyperplaneFlag::from_subspaces(const Matrix& line, const Matrix& hyperplane) {
    if (hyperplane.cols() + 1 != hyperplane.rows())
        throw DomainError("shape", "hyperplane generators must be n x (n-1)");
    if (rank(hyperplane) != hyperplane.cols())
        throw DomainError("degenerate", "hyperplane generators are rank-deficient");
    Matrix form = kernel_basis(hyperplane.transpose()).transpose();
    return LineHyperplaneFlag(line, std::move(form));
}

Configuration Configuration::line_hyperplane(std::vector<LineHyperplaneFlag> members) {
    if (members.empty()) throw DomainError("size", "empty configuration");
    std::size_t n = members.front().ambient_dim();
    for (const auto& f : members)
        if (f.ambient_dim() != n) throw DomainError("kind-mismatch", "mixed ambient dimensions");
    Configuration c(ConfigKind::LineHyperplane, n);
    c.pairs_ = std::move(members);
    return c;
}

namespace {

std::size_t validate_flags(const std::vector<Flag>& members,
                           const std::vector<std::size_t>& expected_dims, const char* what) {
    if (members.empty()) throw DomainError("size", "empty configuration");
    std::size_t n = members.front().ambient_dim();
    for (const auto& f : members) {
        if (f.ambient_dim() != n) throw DomainError("kind-mismatch", "mixed ambient dimensions");
        if (!expected_dims.empty() && f.dims() != expected_dims)
            throw DomainError("kind-mismatch", what);
    }
    return n;
}

} // namespace

Configuration Configuration::planes(std::vector<Flag> members) {
    std::size_t n = validate_flags(members, {2}, "members must be single planes");
    if (n != 4) throw DomainError("kind-mismatch", "plane configurations live in C^4");
    Configuration c(ConfigKind::PlanesIn4, n);
    c.flags_ = std::move(members);
    return c;
}

Configuration Configuration::complete(std::vector<Flag> members) {
    std::size_t n = validate_flags(members, {}, "");
    for (const auto& f : members)
        if (!f.is_complete()) throw DomainError("kind-mismatch", "members must be complete flags");
    Configuration c(ConfigKind::Complete, n);
    c.flags_ = std::move(members);
    return c;
}

Configuration Configuration::isotropic_lines(std::vector<Flag> members) {
    std::size_t n = validate_flags(members, {1}, "members must be lines");
    Configuration c(ConfigKind::IsotropicLines, n);
    c.flags_ = std::move(members);
    return c;
}

std::size_t Configuration::size() const {
    return kind_ == ConfigKind::LineHyperplane ? pairs_.size() : flags_.size();
}

const std::vector<LineHyperplaneFlag>& Configuration::pairs() const {
    if (kind_ != ConfigKind::LineHyperplane)
        throw DomainError("kind-mismatch", "configuration is not of line-hyperplane kind");
    return pairs_;
}

const std::vector<Flag>& Configuration::flags() const {
    if (kind_ == ConfigKind::LineHyperplane)
        throw DomainError("kind-mismatch", "configuration is of line-hyperplane kind");
    return flags_;
}

std::size_t sum_dim(const Matrix& a, const Matrix& b) { return rank(hstack(a, b)); }

std::size_t intersection_dim(const Matrix& a, const Matrix& b) {
    return a.cols() + b.cols() - sum_dim(a, b);
}

namespace {

// All compositions of `total` into `parts` slots, each entry in 0..cap.
std::vector<std::vector<std::size_t>> compositions(std::size_t total, std::size_t parts,
                                                   std::size_t cap) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> acc(parts, 0);
    auto rec = [&](auto&& self, std::size_t slot, std::size_t left) -> void {
        if (slot + 1 == parts) {
            if (left <= cap) {
                acc[slot] = left;
                out.push_back(acc);
            }
            return;
        }
        for (std::size_t v = 0; v <= std::min(cap, left); ++v) {
            acc[slot] = v;
            self(self, slot + 1, left - v);
        }
    };
    if (parts > 0) rec(rec, 0, total);
    return out;
}

// Prefix of a complete flag's adapted basis; k = 0 gives an empty block.
Matrix prefix(const Matrix& basis, std::size_t k) { return basis.cols_slice(0, k); }

} // namespace

bool is_generic(const Configuration& c) {
    if (c.kind() != ConfigKind::Complete)
        throw DomainError("kind-mismatch", "genericity is defined for complete flags");
    std::size_t n = c.ambient_dim(), r = c.size();
    if (n > 6 || r > 6)
        throw DomainError("size", "exhaustive genericity check supported for n <= 6, r <= 6");
    std::vector<Matrix> bases;
    for (const Flag& f : c.flags()) bases.push_back(f.adapted_basis());
    for (const auto& alpha : compositions(n, r, n)) {
        Matrix sum(n, 0);
        for (std::size_t i = 0; i < r; ++i) sum = hstack(sum, prefix(bases[i], alpha[i]));
        if (rank(sum) != n) return false;
    }
    return true;
}

namespace {

bool general_position_subset(const std::vector<LineHyperplaneFlag>& all,
                             const std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t m = idx.size();
    Matrix lines(n, 0);
    Matrix forms(0, n);
    for (std::size_t i : idx) {
        lines = hstack(lines, all[i].line());
        forms = vstack(forms, all[i].form());
    }
    if (rank(lines) != m) return false;         // sum of lines has dim m
    if (rank(forms) != m) return false;         // hyperplanes intersect in dim n-m
    for (std::size_t a : idx)
        for (std::size_t b : idx)
            if (a != b && all[b].pair(all[a]).is_zero()) return false; // L_a meets H_b
    Matrix core = kernel_basis(forms);          // basis of the hyperplane intersection
    return rank(hstack(lines, core)) == n;      // sum of lines meets it trivially
}

} // namespace

bool is_general_position(const Configuration& c) {
    if (c.kind() != ConfigKind::LineHyperplane)
        throw DomainError("kind-mismatch", "general position is defined for line-hyperplane tuples");
    std::size_t n = c.ambient_dim(), r = c.size();
    const auto& members = c.pairs();
    if (r <= n) {
        std::vector<std::size_t> idx(r);
        for (std::size_t i = 0; i < r; ++i) idx[i] = i;
        return general_position_subset(members, idx, n);
    }
    // r > n: every n-element subset must pass.
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (;;) {
        if (!general_position_subset(members, idx, n)) return false;
        std::size_t k = n;
        while (k > 0 && idx[k - 1] == r - n + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
}

bool is_opposite(const Flag& f1, const Flag& f2) {
    if (f1.ambient_dim() != f2.ambient_dim() || f1.dims() != f2.dims())
        throw DomainError("kind-mismatch", "opposition needs flags of the same kind");
    std::size_t n = f1.ambient_dim();
    if (f1.dims() == std::vector<std::size_t>{2} && n == 4)
        return intersection_dim(f1.subspace(0), f2.subspace(0)) == 0;
    if (f1.is_complete()) {
        for (std::size_t k = 1; k < n; ++k)
            if (sum_dim(f1.subspace(k - 1), f2.subspace(n - k - 1)) != n) return false;
        return true;
    }
    throw DomainError("kind-mismatch", "opposition is defined for planes in C^4 and complete flags");
}

DegeneracyClass maximal_degeneracy_class(const Configuration& c) {
    if (c.kind() != ConfigKind::LineHyperplane || c.size() != 3)
        throw DomainError("kind-mismatch", "degeneracy classes are defined for triples of line-hyperplane flags");
    const auto& f = c.pairs();
    std::vector<std::vector<bool>> adj(3, std::vector<bool>(3, false));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) adj[i][j] = !f[j].pair(f[i]).is_zero();
    if (!find_witness_matching(adj))
        throw DomainError("not-semistable", "triple is not semi-stable");

    // adj[i][j] false <=> L_{i+1} inside H_{j+1}.  The cyclic containment
    // L_1 in H_2, L_2 in H_3, L_3 in H_1 kills the odd invariant, sending the
    // configuration to [1:0]; the mirrored cycle kills the even one.
    if (!adj[0][1] && !adj[1][2] && !adj[2][0]) return DegeneracyClass::FiberZero;
    if (!adj[1][0] && !adj[2][1] && !adj[0][2]) return DegeneracyClass::FiberInfinity;

    Matrix lines = hstack(hstack(f[0].line(), f[1].line()), f[2].line());
    Matrix forms = vstack(vstack(f[0].form(), f[1].form()), f[2].form());
    if (rank(lines) == 2 && rank(forms) == 2) return DegeneracyClass::FiberMinusOne;
    return DegeneracyClass::None;
}

LineHyperplaneFlag project_line_hyperplane(const Flag& complete_flag) {
    if (!complete_flag.is_complete())
        throw DomainError("kind-mismatch", "projection needs a complete flag");
    std::size_t n = complete_flag.ambient_dim();
    return LineHyperplaneFlag::from_subspaces(complete_flag.subspace(0),
                                              complete_flag.subspace(n - 2));
}

} // namespace flaginv
