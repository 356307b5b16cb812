#include "flaginv/cli.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flaginv/derangements.hpp"
#include "flaginv/errors.hpp"
#include "flaginv/flags.hpp"
#include "flaginv/gaussian.hpp"
#include "flaginv/invariants.hpp"
#include "flaginv/json_io.hpp"
#include "flaginv/matrix.hpp"
#include "flaginv/realforms.hpp"
#include "flaginv/semistability.hpp"
#include "flaginv/triangulation.hpp"

namespace flaginv {

namespace {

using nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json sigma_json(const Derangement& d) {
    ordered_json out = ordered_json::array();
    for (int v : d.one_based()) out.push_back(v);
    return out;
}

ordered_json point_json(const QuotientPoint& p) {
    ordered_json coords = ordered_json::array();
    for (const GaussianRational& x : p.coords()) coords.push_back(x.str());
    ordered_json out;
    out["space"] = quotient_space_name(p.space());
    out["coords"] = std::move(coords);
    return out;
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json index_array(const std::vector<std::size_t>& idx) {
    ordered_json out = ordered_json::array();
    for (std::size_t v : idx) out.push_back(v);
    return out;
}

HermitianForm resolve_form(const std::string& form_path, std::size_t n) {
    if (!form_path.empty()) return load_hermitian_form(form_path);
    return HermitianForm::lorentz(n);
}

DomainError kind_mismatch(const std::string& verb, const std::string& expected) {
    return DomainError("kind-mismatch", verb + " expects " + expected + " input");
}

ordered_json do_invariants(const Configuration& c, const std::string& form_path) {
    ordered_json report;
    ordered_json sections = ordered_json::array();
    switch (c.kind()) {
        case ConfigKind::LineHyperplane: {
            report["kind"] = "line-hyperplane";
            for (const Derangement& s : enumerate_derangements(static_cast<int>(c.size()))) {
                ordered_json entry;
                entry["sigma"] = sigma_json(s);
                entry["value"] = s_sigma(c, s).str();
                sections.push_back(std::move(entry));
            }
            break;
        }
        case ConfigKind::PlanesIn4: {
            report["kind"] = "planes";
            QuotientPoint p = planes_invariants(c);
            const char* pairings[] = {"1234", "1324", "1423"};
            for (std::size_t i = 0; i < 3; ++i) {
                ordered_json entry;
                entry["pairing"] = pairings[i];
                entry["value"] = p.coords()[i].str();
                sections.push_back(std::move(entry));
            }
            break;
        }
        case ConfigKind::IsotropicLines: {
            report["kind"] = "isotropic-lines";
            HermitianForm h = resolve_form(form_path, c.ambient_dim());
            MomentRay ray = moment_ray(c, h);
            std::vector<Derangement> slots = moment_slot_order(static_cast<int>(c.size()));
            for (std::size_t i = 0; i < slots.size(); ++i) {
                ordered_json entry;
                entry["sigma"] = sigma_json(slots[i]);
                entry["value"] = i < ray.real_part.size()
                                     ? ray.real_part[i].str()
                                     : ray.complex_part[i - ray.real_part.size()].str();
                sections.push_back(std::move(entry));
            }
            break;
        }
        case ConfigKind::Complete:
            throw kind_mismatch("invariants",
                                "line-hyperplane, planes, or isotropic-lines");
    }
    report["sections"] = std::move(sections);
    return report;
}

ordered_json do_semistable(const Configuration& c, const std::string& form_path) {
    SemistabilityVerdict v;
    switch (c.kind()) {
        case ConfigKind::LineHyperplane:
            v = semistable_line_hyperplane(c);
            break;
        case ConfigKind::PlanesIn4:
            v = semistable_planes(c);
            break;
        case ConfigKind::IsotropicLines:
            v = semistable_isotropic_lines(c, resolve_form(form_path, c.ambient_dim()));
            break;
        case ConfigKind::Complete:
            throw kind_mismatch("semistable",
                                "line-hyperplane, planes, or isotropic-lines");
    }
    ordered_json report;
    report["semistable"] = v.semistable;
    report["witness"] = v.witness ? sigma_json(*v.witness) : ordered_json(nullptr);
    report["reason"] = v.reason;
    return report;
}

ordered_json do_quotient(const Configuration& c, const std::string& form_path) {
    switch (c.kind()) {
        case ConfigKind::LineHyperplane:
            return point_json(quotient_point_line_hyperplane(c));
        case ConfigKind::PlanesIn4:
            return point_json(planes_invariants(c));
        case ConfigKind::IsotropicLines:
            return point_json(
                moment_ray(c, resolve_form(form_path, c.ambient_dim())).to_quotient_point());
        case ConfigKind::Complete:
            break;
    }
    throw kind_mismatch("quotient", "line-hyperplane, planes, or isotropic-lines");
}

ordered_json do_crossratio(const Configuration& c) {
    CrossRatioVector v = cross_ratios(c);
    ordered_json entries = ordered_json::array();
    for (const auto& [alpha, value] : v.entries) {
        ordered_json entry;
        entry["alpha"] = index_array(alpha);
        entry["value"] = value.str();
        entries.push_back(std::move(entry));
    }
    ordered_json report;
    report["n"] = v.n;
    report["entries"] = std::move(entries);
    return report;
}

ordered_json do_triratio(const Configuration& c) {
    TripleRatioVector v = triple_ratios(c);
    ordered_json entries = ordered_json::array();
    for (const auto& [alpha, value] : v.entries) {
        ordered_json entry;
        entry["alpha"] = index_array(alpha);
        entry["value"] = value.str();
        entries.push_back(std::move(entry));
    }
    ordered_json report;
    report["n"] = v.n;
    report["entries"] = std::move(entries);
    report["product"] = triple_ratio_product_check(c).str();
    return report;
}

ordered_json do_convert(const Configuration& c, const std::string& target) {
    CrossRatioVector chi = cross_ratios(c);
    if (target == "w") {
        ordered_json w;
        for (const auto& [name, value] : convert_chi_to_w(chi)) w[name] = value.str();
        ordered_json report;
        report["w"] = std::move(w);
        return report;
    }
    return point_json(convert_chi_to_planes(chi));
}

ordered_json do_classify(const Configuration& c, const std::vector<HermitianForm>& forms) {
    ordered_json labels = ordered_json::array();
    for (const RealFormMembership& m : classify_configuration(c, forms)) {
        ordered_json entry;
        entry["label"] = m.label;
        ordered_json members = ordered_json::array();
        for (bool b : m.member_passes) members.push_back(b);
        entry["members"] = std::move(members);
        entry["all"] = m.all();
        labels.push_back(std::move(entry));
    }
    ordered_json report;
    report["labels"] = std::move(labels);
    return report;
}

ordered_json do_holonomy(const DecoratedTriangulation& t, const std::string& path_name) {
    auto it = t.paths().find(path_name);
    if (it == t.paths().end())
        throw DomainError("unknown-path",
                          "the input defines no path named \"" + path_name + "\"");
    GroupElement h = path_holonomy(t, it->second);
    ordered_json report;
    report["path"] = path_name;
    report["trivial"] = h.is_trivial();
    report["scalar"] = h.is_trivial() ? ordered_json(h.scalar().str()) : ordered_json(nullptr);
    report["matrix"] = matrix_json(h.matrix);
    return report;
}

ordered_json do_check_triangulation(const DecoratedTriangulation& t) {
    FaceMatchingReport m = check_face_matchings(t);
    ordered_json report;
    report["n"] = t.ambient_dim();
    report["tetrahedra"] = t.tetrahedron_count();
    report["edges"] = t.edges().size();
    ordered_json matchings;
    matchings["all_match"] = m.all_match;
    matchings["mismatched_gluings"] = index_array(m.mismatched_gluings);
    report["matchings"] = std::move(matchings);

    bool consistent = m.all_match;
    if (m.all_match) {
        ordered_json holonomies = ordered_json::array();
        for (std::size_t e = 0; e < t.edges().size(); ++e) {
            GroupElement h = edge_holonomy(t, e);
            ordered_json entry;
            entry["incidences"] = t.edges()[e].incidences.size();
            entry["trivial"] = h.is_trivial();
            entry["scalar"] =
                h.is_trivial() ? ordered_json(h.scalar().str()) : ordered_json(nullptr);
            holonomies.push_back(std::move(entry));
            consistent = consistent && h.is_trivial();
        }
        report["edge_holonomies"] = std::move(holonomies);
    } else {
        report["edge_holonomies"] = nullptr;
    }
    report["consistent"] = consistent;
    ordered_json labels = ordered_json::array();
    for (const std::string& label : classify_decoration(t)) labels.push_back(label);
    report["real_forms"] = std::move(labels);
    return report;
}

std::string primitive_str(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "-";
    return v.dump();
}

// Plain-text rendering derived from the JSON report: dotted paths for nested
// objects, one line per array element unless every element is primitive.
void render_table(const ordered_json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            render_table(value, prefix.empty() ? key : prefix + "." + key, out);
        return;
    }
    if (j.is_array()) {
        bool all_primitive = true;
        for (const ordered_json& v : j) all_primitive = all_primitive && v.is_primitive();
        if (all_primitive) {
            out << prefix << ":";
            for (const ordered_json& v : j) out << " " << primitive_str(v);
            out << "\n";
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i)
            render_table(j[i], prefix + "[" + std::to_string(i) + "]", out);
        return;
    }
    out << prefix << ": " << primitive_str(j) << "\n";
}

int emit_error(std::ostream& out, const std::string& code, const std::string& message,
               int status) {
    ordered_json inner;
    inner["code"] = code;
    inner["message"] = message;
    ordered_json wrapper;
    wrapper["error"] = std::move(inner);
    out << dump(wrapper);
    return status;
}

std::vector<HermitianForm> resolve_classify_forms(std::size_t n, const std::string& names_csv,
                                                  const std::vector<std::string>& form_paths) {
    std::vector<HermitianForm> forms;
    if (names_csv.empty()) {
        forms.push_back(HermitianForm::lorentz(n));
        if (n == 4) forms.push_back(HermitianForm::split(4));
    } else {
        std::stringstream ss(names_csv);
        std::string name;
        while (std::getline(ss, name, ',')) {
            if (name == "lorentz")
                forms.push_back(HermitianForm::lorentz(n));
            else if (name == "split")
                forms.push_back(HermitianForm::split(n));
            else
                throw ParseError("unknown real form name \"" + name +
                                 "\"; expected lorentz or split");
        }
    }
    for (const std::string& path : form_paths) forms.push_back(load_hermitian_form(path));
    return forms;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants of flag configurations and decorated triangulations"};
    app.name("flaginv");
    app.require_subcommand(1);

    std::string input;
    std::string output = "json";
    std::string form_path;
    std::vector<std::string> form_paths;
    std::string real_forms_csv;
    std::string path_name;
    std::string convert_target;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", input, "input JSON file")->required();
        sub->add_option("--output", output, "report format (json or table)")
            ->check(CLI::IsMember({"json", "table"}));
    };
    auto add_form = [&](CLI::App* sub) {
        sub->add_option("--form", form_path,
                        "Hermitian form JSON file (default: the corner form)");
    };

    CLI::App* inv = app.add_subcommand(
        "invariants", "invariant sections of a configuration, one value per slot");
    add_common(inv);
    add_form(inv);
    CLI::App* semi =
        app.add_subcommand("semistable", "semi-stability verdict with witness derangement");
    add_common(semi);
    add_form(semi);
    CLI::App* quot =
        app.add_subcommand("quotient", "quotient point of a semi-stable configuration");
    add_common(quot);
    add_form(quot);
    CLI::App* cross =
        app.add_subcommand("crossratio", "cross-ratio coordinates of four complete flags");
    add_common(cross);
    CLI::App* tri =
        app.add_subcommand("triratio", "triple ratios of three complete flags and their product");
    add_common(tri);
    CLI::App* conv = app.add_subcommand(
        "convert", "convert the cross-ratios of four complete flags to other coordinates");
    add_common(conv);
    conv->add_option("--to", convert_target, "target coordinates")
        ->required()
        ->check(CLI::IsMember({"w", "planes"}));
    CLI::App* cls =
        app.add_subcommand("classify", "real structures compatible with a configuration");
    add_common(cls);
    cls->add_option("--real-forms", real_forms_csv,
                    "comma-separated built-in forms to test (lorentz, split)");
    cls->add_option("--form", form_paths, "additional Hermitian form JSON file (repeatable)");
    CLI::App* hol =
        app.add_subcommand("holonomy", "holonomy of a named path of a decorated triangulation");
    add_common(hol);
    hol->add_option("--path", path_name, "path name from the input's \"paths\" table")
        ->required();
    CLI::App* check = app.add_subcommand(
        "check-triangulation",
        "validate a decorated triangulation: face matchings and edge holonomies");
    add_common(check);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return emit_error(out, "usage", e.what(), 2);
    }

    try {
        ordered_json report;
        if (inv->parsed()) {
            report = do_invariants(load_configuration(input), form_path);
        } else if (semi->parsed()) {
            report = do_semistable(load_configuration(input), form_path);
        } else if (quot->parsed()) {
            report = do_quotient(load_configuration(input), form_path);
        } else if (cross->parsed()) {
            report = do_crossratio(load_configuration(input));
        } else if (tri->parsed()) {
            report = do_triratio(load_configuration(input));
        } else if (conv->parsed()) {
            report = do_convert(load_configuration(input), convert_target);
        } else if (cls->parsed()) {
            Configuration c = load_configuration(input);
            report = do_classify(c, resolve_classify_forms(c.ambient_dim(), real_forms_csv,
                                                           form_paths));
        } else if (hol->parsed()) {
            report = do_holonomy(load_triangulation(input), path_name);
        } else {
            report = do_check_triangulation(load_triangulation(input));
        }
        if (output == "table") {
            render_table(report, "", out);
        } else {
            out << dump(report);
        }
        return 0;
    } catch (const DomainError& e) {
        return emit_error(out, e.code(), e.what(), 1);
    } catch (const ParseError& e) {
        return emit_error(out, "parse", e.what(), 2);
    }
}

}  // namespace flaginv
