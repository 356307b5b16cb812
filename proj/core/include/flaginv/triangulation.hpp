#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flaginv/flags.hpp"
#include "flaginv/gaussian.hpp"
#include "flaginv/matrix.hpp"

namespace flaginv {

// Invertible matrix considered up to nonzero scalar.  Holonomy results keep
// the raw product so the caller can read off the scalar of a trivial element
// and study lifts; transporters are normalized to leading entry 1.
struct GroupElement {
    Matrix matrix;

    // Scalar multiple of the identity: trivial in the projective group.
    bool is_trivial() const { return matrix.is_scalar(); }

    // The scalar of a trivial element; throws on a non-trivial one.
    GaussianRational scalar() const;
};

// Equality up to a nonzero scalar factor.
bool projectively_equal(const Matrix& a, const Matrix& b);
bool projectively_equal(const GroupElement& a, const GroupElement& b);

// Face f of a tetrahedron is the face opposite vertex f.  `bijection` is a
// permutation of {0,1,2,3} carrying vertices of tet_a to vertices of tet_b;
// it must send face_a to face_b, and it must be odd, which is exactly the
// orientation-reversing condition for a face pairing of oriented simplices.
struct FaceGluing {
    std::size_t tet_a = 0;
    std::size_t face_a = 0;
    std::size_t tet_b = 0;
    std::size_t face_b = 0;
    std::array<std::size_t, 4> bijection{};
};

// One wedge of a tetrahedron around an edge: the tetrahedron index and the
// edge's vertex pair, stored sorted.
struct EdgeIncidence {
    std::size_t tet = 0;
    std::array<std::size_t, 2> vertices{};
};

// A full turn around one edge of the glued complex.  crossings[i] is the
// (tetrahedron, exit face) step leading from incidences[i] to the next wedge,
// cyclically; both lists have the same length.
struct EdgeCycle {
    std::vector<EdgeIncidence> incidences;
    std::vector<std::pair<std::size_t, std::size_t>> crossings;
};

using PathCrossings = std::vector<std::pair<std::size_t, std::size_t>>;

// Ideal triangulation decorated with one complete flag per tetrahedron
// vertex.  Construction validates the combinatorial gluing data (every face
// glued exactly once, orientation-reversing vertex bijections), requires each
// tetrahedron's four-flag configuration to be generic and each face's triple
// to admit a canonical frame, and derives the edge cycles.  Immutable after
// validation.
class DecoratedTriangulation {
public:
    DecoratedTriangulation(std::vector<std::vector<Flag>> tetrahedra,
                           std::vector<FaceGluing> gluings,
                           std::map<std::string, PathCrossings> paths = {});

    std::size_t ambient_dim() const { return n_; }
    std::size_t tetrahedron_count() const { return tetrahedra_.size(); }
    const std::vector<std::vector<Flag>>& tetrahedra() const { return tetrahedra_; }
    const std::vector<FaceGluing>& gluings() const { return gluings_; }
    const std::vector<EdgeCycle>& edges() const { return edges_; }
    const std::map<std::string, PathCrossings>& paths() const { return paths_; }

    // The gluing containing the slot (tet, face) and whether the slot is the
    // a side.  Every slot has exactly one gluing after validation.
    std::pair<const FaceGluing*, bool> gluing_at(std::size_t tet, std::size_t face) const;

    // The three flags at the vertices of a face, in increasing vertex order.
    std::vector<Flag> face_triple(std::size_t tet, std::size_t face) const;

private:
    std::size_t n_ = 0;
    std::vector<std::vector<Flag>> tetrahedra_;
    std::vector<FaceGluing> gluings_;
    std::vector<EdgeCycle> edges_;
    std::map<std::string, PathCrossings> paths_;
};

// The unique projective motion carrying one generic triple of complete flags
// to another, or an error when none exists.  Built from the canonical frame
// of an opposite pair: the frame lines are the intersections F1_k meet
// F2_{n-k+1}, with scales fixed so the third flag's line has all coordinates
// equal.  The first pair that is opposite in both triples (pairs tried in the
// order 12, 13, 23) anchors the frame; the result is checked against every
// step of every flag of the original triples.
GroupElement transporter(const std::vector<Flag>& triple_a, const std::vector<Flag>& triple_b);

// Per-gluing verdicts of check_face_matchings.  A gluing matches when the two
// face triples, aligned by the vertex bijection, have equal triple-ratio
// vectors.
struct FaceMatchingReport {
    bool all_match = true;
    std::vector<std::size_t> mismatched_gluings;
};

FaceMatchingReport check_face_matchings(const DecoratedTriangulation& t);

// Composition of the crossing transporters once around edge cycle `edge`.
// A decoration is compatible along the edge exactly when this is scalar.
GroupElement edge_holonomy(const DecoratedTriangulation& t, std::size_t edge);

// Ordered composition of crossing transporters along a face path.  Each step
// (tet, face) must leave the tetrahedron the previous step arrived in; an
// empty path gives the identity.
GroupElement path_holonomy(const DecoratedTriangulation& t, const PathCrossings& path);

// True when g is unipotent in the projective group: the trace is nonzero and
// g minus (tr/n) times the identity is nilpotent.  Equivalently the
// characteristic polynomial is (T - tr/n)^n.
bool is_projectively_unipotent(const GroupElement& g);

// Real structures compatible with every tetrahedron of the decoration: the
// intersection over tetrahedra of the labels passed by the projected
// configurations.  The line-hyperplane projection is classified against the
// corner form of matching dimension; in dimension 4 the middle planes are
// additionally classified against the anti-diagonal form.
std::vector<std::string> classify_decoration(const DecoratedTriangulation& t);

} // namespace flaginv
