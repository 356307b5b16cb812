#include "flaginv/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

#include "flaginv/errors.hpp"
#include "flaginv/gaussian.hpp"
#include "flaginv/matrix.hpp"

namespace flaginv {

namespace {

using nlohmann::ordered_json;

ordered_json parse_text(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("input is not well-formed JSON");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const ordered_json& field(const ordered_json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t size_field(const ordered_json& j, const char* key) {
    const ordered_json& v = field(j, key);
    if (!v.is_number_unsigned())
        throw ParseError(std::string("field \"") + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

GaussianRational scalar(const ordered_json& j) {
    if (!j.is_string()) throw ParseError("scalars must be strings like \"1/2\" or \"1+2i\"");
    return GaussianRational::parse(j.get<std::string>());
}

// A subspace is a non-empty list of generator vectors of length n, stored as
// the columns of the returned matrix.
Matrix subspace_matrix(const ordered_json& j, std::size_t n) {
    if (!j.is_array() || j.empty())
        throw ParseError("a subspace must be a non-empty list of generator vectors");
    Matrix m(n, j.size());
    for (std::size_t c = 0; c < j.size(); ++c) {
        const ordered_json& vec = j[c];
        if (!vec.is_array() || vec.size() != n)
            throw ParseError("every generator vector must list exactly n scalars");
        for (std::size_t r = 0; r < n; ++r) m.at(r, c) = scalar(vec[r]);
    }
    return m;
}

std::vector<Matrix> flag_subspaces(const ordered_json& j, std::size_t n) {
    const ordered_json& subs = field(j, "subspaces");
    if (!subs.is_array() || subs.empty())
        throw ParseError("field \"subspaces\" must be a non-empty list");
    std::vector<Matrix> out;
    for (const ordered_json& s : subs) out.push_back(subspace_matrix(s, n));
    return out;
}

Flag complete_flag(const ordered_json& j, std::size_t n) {
    std::vector<Matrix> subs = flag_subspaces(j, n);
    if (subs.size() + 1 != n)
        throw ParseError("a complete flag in dimension n lists exactly n-1 subspaces");
    return Flag(n, std::move(subs));
}

ordered_json subspace_json(const Matrix& m) {
    ordered_json vecs = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
        ordered_json vec = ordered_json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) vec.push_back(m.at(r, c).str());
        vecs.push_back(std::move(vec));
    }
    return vecs;
}

ordered_json flag_json(const Flag& f) {
    ordered_json subs = ordered_json::array();
    for (std::size_t k = 0; k < f.steps(); ++k) subs.push_back(subspace_json(f.subspace(k)));
    return ordered_json{{"subspaces", std::move(subs)}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

Configuration parse_configuration(const std::string& text) {
    ordered_json j = parse_text(text);
    const ordered_json& kind = field(j, "kind");
    if (!kind.is_string()) throw ParseError("field \"kind\" must be a string");
    std::string k = kind.get<std::string>();
    std::size_t n = size_field(j, "n");
    if (n == 0) throw ParseError("field \"n\" must be positive");
    const ordered_json& flags = field(j, "flags");
    if (!flags.is_array() || flags.empty())
        throw ParseError("field \"flags\" must be a non-empty list");

    if (k == "complete") {
        std::vector<Flag> out;
        for (const ordered_json& f : flags) out.push_back(complete_flag(f, n));
        return Configuration::complete(std::move(out));
    }
    if (k == "line-hyperplane") {
        std::vector<LineHyperplaneFlag> out;
        for (const ordered_json& f : flags) {
            std::vector<Matrix> subs = flag_subspaces(f, n);
            if (subs.size() != 2)
                throw ParseError(
                    "a line-hyperplane flag lists exactly two subspaces (line, hyperplane)");
            out.push_back(LineHyperplaneFlag::from_subspaces(subs[0], subs[1]));
        }
        return Configuration::line_hyperplane(std::move(out));
    }
    if (k == "planes") {
        std::vector<Flag> out;
        for (const ordered_json& f : flags) {
            std::vector<Matrix> subs = flag_subspaces(f, n);
            if (subs.size() != 1) throw ParseError("a plane lists exactly one subspace");
            out.push_back(Flag::plane(subs[0]));
        }
        return Configuration::planes(std::move(out));
    }
    if (k == "isotropic-lines") {
        std::vector<Flag> out;
        for (const ordered_json& f : flags) {
            std::vector<Matrix> subs = flag_subspaces(f, n);
            if (subs.size() != 1) throw ParseError("a line lists exactly one subspace");
            out.push_back(Flag::line(subs[0]));
        }
        return Configuration::isotropic_lines(std::move(out));
    }
    throw ParseError("unknown configuration kind \"" + k +
                     "\"; expected complete, line-hyperplane, planes, or isotropic-lines");
}

Configuration load_configuration(const std::string& path) {
    return parse_configuration(read_file(path));
}

std::string configuration_to_json(const Configuration& c) {
    ordered_json flags = ordered_json::array();
    std::string kind;
    switch (c.kind()) {
        case ConfigKind::Complete:
            kind = "complete";
            break;
        case ConfigKind::LineHyperplane:
            kind = "line-hyperplane";
            break;
        case ConfigKind::PlanesIn4:
            kind = "planes";
            break;
        case ConfigKind::IsotropicLines:
            kind = "isotropic-lines";
            break;
    }
    if (c.kind() == ConfigKind::LineHyperplane) {
        for (const LineHyperplaneFlag& f : c.pairs()) {
            ordered_json subs = ordered_json::array();
            subs.push_back(subspace_json(f.line()));
            subs.push_back(subspace_json(kernel_basis(f.form())));
            flags.push_back(ordered_json{{"subspaces", std::move(subs)}});
        }
    } else {
        for (const Flag& f : c.flags()) flags.push_back(flag_json(f));
    }
    return dump(ordered_json{{"kind", kind}, {"n", c.ambient_dim()}, {"flags", std::move(flags)}});
}

HermitianForm parse_hermitian_form(const std::string& text) {
    ordered_json j = parse_text(text);
    std::size_t n = size_field(j, "n");
    const ordered_json& rows = field(j, "matrix");
    if (!rows.is_array() || rows.size() != n)
        throw ParseError("field \"matrix\" must list exactly n rows");
    Matrix gram(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const ordered_json& row = rows[r];
        if (!row.is_array() || row.size() != n)
            throw ParseError("every Gram matrix row must list exactly n scalars");
        for (std::size_t c = 0; c < n; ++c) gram.at(r, c) = scalar(row[c]);
    }
    return HermitianForm(std::move(gram));
}

HermitianForm load_hermitian_form(const std::string& path) {
    return parse_hermitian_form(read_file(path));
}

std::string hermitian_form_to_json(const HermitianForm& h) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < h.dimension(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < h.dimension(); ++c) row.push_back(h.matrix().at(r, c).str());
        rows.push_back(std::move(row));
    }
    return dump(ordered_json{{"n", h.dimension()}, {"matrix", std::move(rows)}});
}

DecoratedTriangulation parse_triangulation(const std::string& text) {
    ordered_json j = parse_text(text);
    std::size_t n = size_field(j, "n");
    if (n == 0) throw ParseError("field \"n\" must be positive");

    const ordered_json& tets = field(j, "tetrahedra");
    if (!tets.is_array() || tets.empty())
        throw ParseError("field \"tetrahedra\" must be a non-empty list");
    std::vector<std::vector<Flag>> tetrahedra;
    for (const ordered_json& t : tets) {
        const ordered_json& fl = field(t, "flags");
        if (!fl.is_array() || fl.size() != 4)
            throw ParseError("every tetrahedron lists exactly four vertex flags");
        std::vector<Flag> flags;
        for (const ordered_json& f : fl) flags.push_back(complete_flag(f, n));
        tetrahedra.push_back(std::move(flags));
    }

    const ordered_json& gl = field(j, "gluings");
    if (!gl.is_array()) throw ParseError("field \"gluings\" must be a list");
    std::vector<FaceGluing> gluings;
    for (const ordered_json& g : gl) {
        FaceGluing fg;
        fg.tet_a = size_field(g, "tet_a");
        fg.face_a = size_field(g, "face_a");
        fg.tet_b = size_field(g, "tet_b");
        fg.face_b = size_field(g, "face_b");
        const ordered_json& bij = field(g, "bijection");
        if (!bij.is_array() || bij.size() != 4)
            throw ParseError("field \"bijection\" must list four vertex indices");
        for (std::size_t i = 0; i < 4; ++i) {
            if (!bij[i].is_number_unsigned())
                throw ParseError("bijection entries must be non-negative integers");
            fg.bijection[i] = bij[i].get<std::size_t>();
        }
        gluings.push_back(fg);
    }

    std::map<std::string, PathCrossings> paths;
    if (j.contains("paths")) {
        const ordered_json& ps = j.at("paths");
        if (!ps.is_object()) throw ParseError("field \"paths\" must be an object");
        for (const auto& [name, steps] : ps.items()) {
            if (!steps.is_array()) throw ParseError("every path must be a list of [tet, face]");
            PathCrossings crossings;
            for (const ordered_json& step : steps) {
                if (!step.is_array() || step.size() != 2 || !step[0].is_number_unsigned() ||
                    !step[1].is_number_unsigned())
                    throw ParseError("every path step must be a pair [tet, face]");
                crossings.emplace_back(step[0].get<std::size_t>(), step[1].get<std::size_t>());
            }
            paths.emplace(name, std::move(crossings));
        }
    }

    return DecoratedTriangulation(std::move(tetrahedra), std::move(gluings), std::move(paths));
}

DecoratedTriangulation load_triangulation(const std::string& path) {
    return parse_triangulation(read_file(path));
}

std::string triangulation_to_json(const DecoratedTriangulation& t) {
    ordered_json tets = ordered_json::array();
    for (const std::vector<Flag>& tet : t.tetrahedra()) {
        ordered_json flags = ordered_json::array();
        for (const Flag& f : tet) flags.push_back(flag_json(f));
        tets.push_back(ordered_json{{"flags", std::move(flags)}});
    }
    ordered_json gluings = ordered_json::array();
    for (const FaceGluing& g : t.gluings()) {
        ordered_json bij = ordered_json::array();
        for (std::size_t v : g.bijection) bij.push_back(v);
        gluings.push_back(ordered_json{{"tet_a", g.tet_a},
                                       {"face_a", g.face_a},
                                       {"tet_b", g.tet_b},
                                       {"face_b", g.face_b},
                                       {"bijection", std::move(bij)}});
    }
    ordered_json out{
        {"n", t.ambient_dim()}, {"tetrahedra", std::move(tets)}, {"gluings", std::move(gluings)}};
    if (!t.paths().empty()) {
        ordered_json ps = ordered_json::object();
        for (const auto& [name, crossings] : t.paths()) {
            ordered_json steps = ordered_json::array();
            for (const auto& [tet, face] : crossings)
                steps.push_back(ordered_json::array({tet, face}));
            ps[name] = std::move(steps);
        }
        out["paths"] = std::move(ps);
    }
    return dump(out);
}

}  // namespace flaginv
