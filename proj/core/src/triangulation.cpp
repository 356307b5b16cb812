#include "flaginv/triangulation.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "flaginv/errors.hpp"
#include "flaginv/invariants.hpp"
#include "flaginv/realforms.hpp"

namespace flaginv {

namespace {

std::string slot_str(std::size_t tet, std::size_t face) {
    return "(" + std::to_string(tet) + ", " + std::to_string(face) + ")";
}

bool is_permutation(const std::array<std::size_t, 4>& p) {
    std::array<bool, 4> seen{};
    for (std::size_t v : p) {
        if (v > 3 || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

bool is_odd_permutation(const std::array<std::size_t, 4>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 1;
}

// Generator of the intersection of two subspaces when they meet in a line.
std::optional<Matrix> meet_in_line(const Matrix& a, const Matrix& b) {
    Matrix k = kernel_basis(hstack(a, -b));
    if (k.cols() != 1) return std::nullopt;
    std::vector<GaussianRational> u(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) u[i] = k.at(i, 0);
    return a * Matrix::column(u);
}

// Frame of an ordered triple whose first two flags are opposite: column k
// spans first_k meet second_{n-k+1}, and the columns are rescaled so the
// third flag's line is the all-ones vector in frame coordinates.  Empty when
// an intersection is not a line or a frame coordinate of the third line
// vanishes; for complete flags both mean the triple is not generic.
std::optional<Matrix> canonical_frame(const Flag& first, const Flag& second, const Flag& third) {
    std::size_t n = first.ambient_dim();
    Matrix frame(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        std::optional<Matrix> line;
        if (k == 1)
            line = first.subspace(0);
        else if (k == n)
            line = second.subspace(0);
        else
            line = meet_in_line(first.subspace(k - 1), second.subspace(n - k));
        if (!line) return std::nullopt;
        for (std::size_t i = 0; i < n; ++i) frame.at(i, k - 1) = line->at(i, 0);
    }
    if (det(frame).is_zero()) return std::nullopt;
    Matrix coords = solve(frame, third.subspace(0));
    for (std::size_t k = 0; k < n; ++k) {
        if (coords.at(k, 0).is_zero()) return std::nullopt;
        for (std::size_t i = 0; i < n; ++i) frame.at(i, k) = coords.at(k, 0) * frame.at(i, k);
    }
    return frame;
}

bool spans_match(const Matrix& a, const Matrix& b) {
    return a.cols() == b.cols() && rank(hstack(a, b)) == a.cols();
}

bool moves_flag(const Matrix& g, const Flag& from, const Flag& to) {
    for (std::size_t s = 0; s < from.steps(); ++s)
        if (!spans_match(g * from.subspace(s), to.subspace(s))) return false;
    return true;
}

// Triple orderings whose first two slots run through the pairs 12, 13, 23.
constexpr std::array<std::array<std::size_t, 3>, 3> kPairOrders = {
    {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};

// Vertex map induced by a gluing, read from the given side.
std::array<std::size_t, 4> forward_map(const FaceGluing& g, bool a_side) {
    if (a_side) return g.bijection;
    std::array<std::size_t, 4> inv{};
    for (std::size_t v = 0; v < 4; ++v) inv[g.bijection[v]] = v;
    return inv;
}

// The two face triples of a crossing, the target ordered by the bijection.
std::pair<std::vector<Flag>, std::vector<Flag>> aligned_face_triples(
    const DecoratedTriangulation& t, std::size_t tet, std::size_t face) {
    auto [gl, a_side] = t.gluing_at(tet, face);
    std::array<std::size_t, 4> fwd = forward_map(*gl, a_side);
    std::size_t other = a_side ? gl->tet_b : gl->tet_a;
    std::vector<Flag> source = t.face_triple(tet, face);
    std::vector<Flag> target;
    target.reserve(3);
    for (std::size_t v = 0; v < 4; ++v)
        if (v != face) target.push_back(t.tetrahedra()[other][fwd[v]]);
    return {std::move(source), std::move(target)};
}

GroupElement crossing_transporter(const DecoratedTriangulation& t, std::size_t tet,
                                  std::size_t face) {
    auto [source, target] = aligned_face_triples(t, tet, face);
    return transporter(source, target);
}

} // namespace

GaussianRational GroupElement::scalar() const {
    if (!is_trivial())
        throw DomainError("not-scalar", "the element is not a scalar matrix");
    return matrix.at(0, 0);
}

bool projectively_equal(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_zero()) {
                if (b.at(i, j).is_zero()) return false;
                return b.at(i, j) * a == a.at(i, j) * b;
            }
    return b.is_zero();
}

bool projectively_equal(const GroupElement& a, const GroupElement& b) {
    return projectively_equal(a.matrix, b.matrix);
}

DecoratedTriangulation::DecoratedTriangulation(std::vector<std::vector<Flag>> tetrahedra,
                                               std::vector<FaceGluing> gluings,
                                               std::map<std::string, PathCrossings> paths)
    : tetrahedra_(std::move(tetrahedra)), gluings_(std::move(gluings)), paths_(std::move(paths)) {
    if (tetrahedra_.empty())
        throw DomainError("invalid-triangulation",
                          "a decorated triangulation needs at least one tetrahedron");
    for (const auto& tet : tetrahedra_)
        if (tet.size() != 4)
            throw DomainError("invalid-triangulation",
                              "every tetrahedron needs exactly four vertex flags");
    n_ = tetrahedra_[0][0].ambient_dim();
    if (n_ < 3)
        throw DomainError("invalid-triangulation",
                          "vertex flags must be complete flags in dimension at least 3");
    for (const auto& tet : tetrahedra_)
        for (const Flag& f : tet)
            if (f.ambient_dim() != n_ || !f.is_complete())
                throw DomainError("invalid-triangulation",
                                  "vertex flags must be complete flags in one common dimension");

    std::size_t slots = 4 * tetrahedra_.size();
    std::vector<int> uses(slots, 0);
    for (const FaceGluing& g : gluings_) {
        if (g.tet_a >= tetrahedra_.size() || g.tet_b >= tetrahedra_.size())
            throw DomainError("invalid-gluing",
                              "a gluing references a tetrahedron that does not exist");
        if (g.face_a > 3 || g.face_b > 3)
            throw DomainError("invalid-gluing", "face indices must lie in 0..3");
        if (!is_permutation(g.bijection))
            throw DomainError("invalid-gluing",
                              "the vertex bijection must be a permutation of 0..3");
        if (g.bijection[g.face_a] != g.face_b)
            throw DomainError("invalid-gluing",
                              "the vertex bijection must send the glued face to its partner");
        if (!is_odd_permutation(g.bijection))
            throw DomainError("invalid-gluing",
                              "the vertex bijection must reverse orientation (odd permutation)");
        ++uses[4 * g.tet_a + g.face_a];
        ++uses[4 * g.tet_b + g.face_b];
    }
    for (std::size_t s = 0; s < slots; ++s)
        if (uses[s] != 1)
            throw DomainError("invalid-gluing", "face " + slot_str(s / 4, s % 4) +
                                                    (uses[s] == 0 ? " is never glued"
                                                                  : " is glued more than once"));

    for (std::size_t t = 0; t < tetrahedra_.size(); ++t) {
        if (!is_generic(Configuration::complete(tetrahedra_[t])))
            throw DomainError("not-generic", "the flag configuration of tetrahedron " +
                                                 std::to_string(t) + " is not generic");
        for (std::size_t f = 0; f < 4; ++f) {
            std::vector<Flag> triple = face_triple(t, f);
            bool framed = false;
            for (const auto& order : kPairOrders) {
                if (!is_opposite(triple[order[0]], triple[order[1]])) continue;
                framed = canonical_frame(triple[order[0]], triple[order[1]], triple[order[2]])
                             .has_value();
                break;
            }
            if (!framed)
                throw DomainError("nontrivial-stabilizer",
                                  "face " + slot_str(t, f) +
                                      " admits no canonical frame; its triple is degenerate");
        }
    }

    // Walk around every edge.  The state (tet, edge, exit face) advances by
    // crossing the exit face and leaving through the other face of the image
    // edge; a perfect face matching makes this map a bijection, so the walk
    // returns to its start.  The reverse turn visits the same wedges, so
    // marking wedges covers both directions.
    struct WedgeState {
        std::size_t tet;
        std::array<std::size_t, 2> edge;
        std::size_t exit;
        bool operator==(const WedgeState& o) const {
            return tet == o.tet && edge == o.edge && exit == o.exit;
        }
    };
    auto complement = [](const std::array<std::size_t, 2>& e) {
        std::array<std::size_t, 2> c{};
        std::size_t idx = 0;
        for (std::size_t v = 0; v < 4; ++v)
            if (v != e[0] && v != e[1]) c[idx++] = v;
        return c;
    };
    auto step = [&](const WedgeState& s) {
        auto [gl, a_side] = gluing_at(s.tet, s.exit);
        std::array<std::size_t, 4> fwd = forward_map(*gl, a_side);
        std::size_t tet = a_side ? gl->tet_b : gl->tet_a;
        std::size_t entry = a_side ? gl->face_b : gl->face_a;
        std::array<std::size_t, 2> edge{fwd[s.edge[0]], fwd[s.edge[1]]};
        if (edge[0] > edge[1]) std::swap(edge[0], edge[1]);
        auto c = complement(edge);
        return WedgeState{tet, edge, c[0] == entry ? c[1] : c[0]};
    };
    std::set<std::pair<std::size_t, std::array<std::size_t, 2>>> covered;
    for (std::size_t t = 0; t < tetrahedra_.size(); ++t)
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b) {
                std::array<std::size_t, 2> e{a, b};
                if (covered.count({t, e})) continue;
                WedgeState start{t, e, complement(e)[0]};
                EdgeCycle cycle;
                WedgeState cur = start;
                std::size_t guard = 12 * tetrahedra_.size() + 1;
                do {
                    if (cycle.incidences.size() >= guard)
                        throw DomainError("cycle-open", "an edge walk failed to close");
                    covered.insert({cur.tet, cur.edge});
                    cycle.incidences.push_back(EdgeIncidence{cur.tet, cur.edge});
                    cycle.crossings.emplace_back(cur.tet, cur.exit);
                    cur = step(cur);
                } while (!(cur == start));
                edges_.push_back(std::move(cycle));
            }
}

std::pair<const FaceGluing*, bool> DecoratedTriangulation::gluing_at(std::size_t tet,
                                                                     std::size_t face) const {
    for (const FaceGluing& g : gluings_) {
        if (g.tet_a == tet && g.face_a == face) return {&g, true};
        if (g.tet_b == tet && g.face_b == face) return {&g, false};
    }
    throw DomainError("invalid-gluing", "face " + slot_str(tet, face) + " is never glued");
}

std::vector<Flag> DecoratedTriangulation::face_triple(std::size_t tet, std::size_t face) const {
    std::vector<Flag> triple;
    triple.reserve(3);
    for (std::size_t v = 0; v < 4; ++v)
        if (v != face) triple.push_back(tetrahedra_[tet][v]);
    return triple;
}

GroupElement transporter(const std::vector<Flag>& triple_a, const std::vector<Flag>& triple_b) {
    if (triple_a.size() != 3 || triple_b.size() != 3)
        throw DomainError("shape", "a transporter needs two triples of flags");
    std::size_t n = triple_a[0].ambient_dim();
    for (const std::vector<Flag>* t : {&triple_a, &triple_b})
        for (const Flag& f : *t)
            if (f.ambient_dim() != n || !f.is_complete())
                throw DomainError("shape",
                                  "a transporter needs complete flags in one common dimension");

    std::optional<Matrix> frame_a;
    std::optional<Matrix> frame_b;
    bool found_pair = false;
    for (const auto& order : kPairOrders) {
        if (!is_opposite(triple_a[order[0]], triple_a[order[1]]) ||
            !is_opposite(triple_b[order[0]], triple_b[order[1]]))
            continue;
        found_pair = true;
        frame_a = canonical_frame(triple_a[order[0]], triple_a[order[1]], triple_a[order[2]]);
        frame_b = canonical_frame(triple_b[order[0]], triple_b[order[1]], triple_b[order[2]]);
        break;
    }
    if (!found_pair)
        throw DomainError("not-opposite", "no pair of flags is opposite in both triples");
    if (!frame_a || !frame_b)
        throw DomainError("nontrivial-stabilizer",
                          "the canonical frame is ambiguous: a frame coordinate of the third "
                          "flag's line vanishes");

    Matrix g = *frame_b * inverse(*frame_a);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!g.at(i, j).is_zero()) {
                g = (GaussianRational(1) / g.at(i, j)) * g;
                i = n;
                break;
            }
    for (std::size_t i = 0; i < 3; ++i)
        if (!moves_flag(g, triple_a[i], triple_b[i]))
            throw DomainError("not-equivalent", "the triples are not projectively equivalent");
    return GroupElement{g};
}

FaceMatchingReport check_face_matchings(const DecoratedTriangulation& t) {
    FaceMatchingReport report;
    for (std::size_t idx = 0; idx < t.gluings().size(); ++idx) {
        const FaceGluing& g = t.gluings()[idx];
        auto [source, target] = aligned_face_triples(t, g.tet_a, g.face_a);
        TripleRatioVector ra = triple_ratios(Configuration::complete(source));
        TripleRatioVector rb = triple_ratios(Configuration::complete(target));
        if (ra.n != rb.n || ra.entries != rb.entries) {
            report.all_match = false;
            report.mismatched_gluings.push_back(idx);
        }
    }
    return report;
}

GroupElement edge_holonomy(const DecoratedTriangulation& t, std::size_t edge) {
    if (edge >= t.edges().size())
        throw DomainError("unknown-edge",
                          "edge index " + std::to_string(edge) + " is out of range; there are " +
                              std::to_string(t.edges().size()) + " edge cycles");
    Matrix h = Matrix::identity(t.ambient_dim());
    for (const auto& [tet, face] : t.edges()[edge].crossings)
        h = crossing_transporter(t, tet, face).matrix * h;
    return GroupElement{h};
}

GroupElement path_holonomy(const DecoratedTriangulation& t, const PathCrossings& path) {
    Matrix h = Matrix::identity(t.ambient_dim());
    std::optional<std::size_t> arrived;
    for (std::size_t i = 0; i < path.size(); ++i) {
        auto [tet, face] = path[i];
        if (tet >= t.tetrahedron_count() || face > 3)
            throw DomainError("invalid-path", "path step " + std::to_string(i) +
                                                  " references a face that does not exist");
        if (arrived && *arrived != tet)
            throw DomainError("non-adjacent",
                              "path step " + std::to_string(i) + " leaves tetrahedron " +
                                  std::to_string(tet) + " but the previous crossing arrived in " +
                                  std::to_string(*arrived));
        auto [gl, a_side] = t.gluing_at(tet, face);
        h = crossing_transporter(t, tet, face).matrix * h;
        arrived = a_side ? gl->tet_b : gl->tet_a;
    }
    return GroupElement{h};
}

bool is_projectively_unipotent(const GroupElement& g) {
    const Matrix& m = g.matrix;
    if (!m.is_square() || m.rows() == 0)
        throw DomainError("shape", "a group element must be a nonempty square matrix");
    GaussianRational tr = m.trace();
    if (tr.is_zero()) return false;
    std::size_t n = m.rows();
    Matrix u = m - (tr / GaussianRational(static_cast<long>(n))) * Matrix::identity(n);
    Matrix p = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) p = p * u;
    return p.is_zero();
}

std::vector<std::string> classify_decoration(const DecoratedTriangulation& t) {
    std::size_t n = t.ambient_dim();
    std::vector<HermitianForm> corner{HermitianForm::lorentz(n)};
    std::vector<HermitianForm> anti{HermitianForm::split(4)};
    std::vector<std::string> labels;
    bool first = true;
    for (const auto& tet : t.tetrahedra()) {
        std::vector<std::string> mine;
        std::vector<LineHyperplaneFlag> lh;
        lh.reserve(4);
        for (const Flag& f : tet) lh.push_back(project_line_hyperplane(f));
        for (const RealFormMembership& m :
             classify_configuration(Configuration::line_hyperplane(lh), corner))
            if (m.all()) mine.push_back(m.label);
        if (n == 4) {
            std::vector<Flag> planes;
            planes.reserve(4);
            for (const Flag& f : tet) planes.push_back(Flag::plane(f.subspace(1)));
            for (const RealFormMembership& m :
                 classify_configuration(Configuration::planes(planes), anti))
                if (m.all() && std::find(mine.begin(), mine.end(), m.label) == mine.end())
                    mine.push_back(m.label);
        }
        if (first) {
            labels = std::move(mine);
            first = false;
        } else {
            std::vector<std::string> kept;
            for (const std::string& l : labels)
                if (std::find(mine.begin(), mine.end(), l) != mine.end()) kept.push_back(l);
            labels = std::move(kept);
        }
        if (labels.empty()) break;
    }
    return labels;
}

} // namespace flaginv
