#pragma once

#include <string>

#include "flaginv/flags.hpp"
#include "flaginv/realforms.hpp"
#include "flaginv/triangulation.hpp"

namespace flaginv {

// JSON readers and writers for the documented input formats.  All scalars
// travel as exact text ("p/q", optionally "+r/s i") and round-trip the
// printers bit-exactly.  Structural problems (malformed JSON, missing or
// mistyped fields, bad scalar strings) raise ParseError; content that parses
// but is mathematically invalid raises DomainError from the validating
// constructors.  load_* variants read the file at `path` first and treat an
// unreadable file as a ParseError.

// Configuration files:
//   { "kind": "complete" | "line-hyperplane" | "planes" | "isotropic-lines",
//     "n": 3,
//     "flags": [ { "subspaces": [ [ ["1","0","0"] ], ... ] } ] }
// Each subspace is a list of generator vectors of length n; a complete flag
// lists its n-1 nested subspaces, a line-hyperplane flag the pair (line,
// hyperplane), planes and isotropic lines a single subspace.
Configuration parse_configuration(const std::string& text);
Configuration load_configuration(const std::string& path);
std::string configuration_to_json(const Configuration& c);

// Hermitian form files:  { "n": 3, "matrix": [ ["0","0","1"], ... ] }
// with the Gram matrix given row by row.
HermitianForm parse_hermitian_form(const std::string& text);
HermitianForm load_hermitian_form(const std::string& path);
std::string hermitian_form_to_json(const HermitianForm& h);

// Triangulation files:
//   { "n": 3,
//     "tetrahedra": [ { "flags": [ <complete flag>, x4 ] } ],
//     "gluings": [ { "tet_a": 0, "face_a": 0, "tet_b": 1, "face_b": 1,
//                    "bijection": [1,0,2,3] } ],
//     "paths": { "name": [ [tet, face], ... ] } }
// Face index = opposite vertex index; "paths" is optional.
DecoratedTriangulation parse_triangulation(const std::string& text);
DecoratedTriangulation load_triangulation(const std::string& path);
std::string triangulation_to_json(const DecoratedTriangulation& t);

}  // namespace flaginv
