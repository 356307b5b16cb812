#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "flaginv/derangements.hpp"
#include "flaginv/flags.hpp"
#include "flaginv/matrix.hpp"
#include "flaginv/realforms.hpp"

namespace flaginv {

// Outcome of a semi-stability test.  When the verdict is positive and the
// configuration kind admits one, witness holds a derangement sigma whose
// invariant s_sigma does not vanish (for planes, the order-2 pairing whose
// two pairs are opposite).  reason names the obstruction when the verdict
// is negative and stays empty otherwise.
struct SemistabilityVerdict {
    bool semistable = false;
    std::optional<Derangement> witness;
    std::string reason;
};

// Line-hyperplane tuples: semi-stable iff some derangement sigma keeps every
// pairing phi_{sigma(i)}(v_i) nonzero.  Decided by bipartite matching on the
// grid adj[i][j] = (i != j and phi_j(v_i) != 0) rather than scanning all !r
// derangements; the matching, when found, is the witness.
SemistabilityVerdict semistable_line_hyperplane(const Configuration& c);

// Quadruples of planes in C^4: semi-stable iff one of the three pairings
// 12|34, 13|24, 14|23 (tried in that order) consists of two pairs of
// complementary planes.  The first such pairing is reported as its order-2
// derangement.
SemistabilityVerdict semistable_planes(const Configuration& c);

// Tuples of h-isotropic lines: semi-stable iff no single line occurs more
// than r/2 times, with projective line equality decided by exact
// cross-multiplication of generators.  For even r the verdict also carries
// an order-2 derangement sigma with prod_i h(v_i, v_{sigma(i)}) != 0
// whenever one exists; such a sigma exists exactly when the tuple is
// semi-stable.  Throws when a line fails to be isotropic for h.
SemistabilityVerdict semistable_isotropic_lines(const Configuration& c, const HermitianForm& h);

// Chart coordinates of a plane quadruple (W1, W2, graph(A2), graph(A1)):
// its orbit is closed iff both 2x2 matrices are semisimple and their ranks
// agree.
bool closed_orbit_planes(const Matrix& a1, const Matrix& a2);

// Dimension count for r line-hyperplane flags in general position in C^n:
// the stabilizer of a generic tuple has dimension max{0, n-r}^2 and the
// quotient of the semi-stable locus has dimension
// r^2 - 3r + 1 - min{0, n-r}^2.  Requires n, r >= 3.
struct GeneralPositionDimensions {
    long stabilizer = 0;
    long quotient = 0;
};
GeneralPositionDimensions stabilizer_dimension_general_position(std::size_t n, std::size_t r);

}  // namespace flaginv
