// Command-line front end for the inscribed-ellipse library.
//
// Exit codes: 0 success, 2 invalid geometry or parameter, 3 parse error,
// 4 I/O failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "besant/besant.hpp"
#include "besant/report.hpp"
#include "besant/svg.hpp"

namespace {

using besant::ConvexQuad;
using besant::Point;
using besant::Tolerance;
using json = besant::report::json;

std::optional<ConvexQuad> parse_quad(const std::string& text, const Tolerance& tol,
                                     std::string& err) {
    std::istringstream in(text);
    std::vector<Point> pts;
    std::string tok;
    while (in >> tok) {
        auto comma = tok.find(',');
        if (comma == std::string::npos) {
            err = "expected x,y pair, got '" + tok + "'";
            return std::nullopt;
        }
        try {
            size_t used = 0;
            double x = std::stod(tok.substr(0, comma), &used);
            if (used != comma) throw std::invalid_argument(tok);
            double y = std::stod(tok.substr(comma + 1), &used);
            if (used != tok.size() - comma - 1) throw std::invalid_argument(tok);
            pts.push_back({x, y});
        } catch (const std::exception&) {
            err = "cannot parse coordinate pair '" + tok + "'";
            return std::nullopt;
        }
    }
    if (pts.size() != 4) {
        err = "expected 4 vertices, got " + std::to_string(pts.size());
        return std::nullopt;
    }
    return ConvexQuad({pts[0], pts[1], pts[2], pts[3]}, tol);
}

void emit(const json& rep, bool as_json) {
    if (as_json) {
        std::cout << rep.dump(2) << "\n";
    } else {
        for (auto& [key, value] : rep.items())
            std::cout << key << ": " << value.dump() << "\n";
    }
}

struct Options {
    std::string vertices;
    std::string input_file;
    std::string svg_path;
    double r = 0.5;
    bool as_json = true;
};

int run_one(const std::string& command, const std::string& vertex_text, const Options& opt,
            const Tolerance& tol) {
    std::string err;
    std::optional<ConvexQuad> quad;
    try {
        quad = parse_quad(vertex_text, tol, err);
    } catch (const besant::NotConvex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (!quad) {
        std::cerr << "error: " << err << "\n";
        return 3;
    }
    try {
        if (command == "classify") {
            emit(besant::report::classify_report(*quad, tol), opt.as_json);
        } else if (command == "besant") {
            json rep = besant::report::besant_report(*quad, tol);
            if (!opt.svg_path.empty()) {
                besant::BesantResult res = besant::classify_besant(*quad, tol);
                std::ofstream out(opt.svg_path);
                if (!out) {
                    std::cerr << "error: cannot open " << opt.svg_path << "\n";
                    return 4;
                }
                out << besant::svg::besant_figure(*quad, res, tol);
                if (!out.good()) {
                    std::cerr << "error: write failed for " << opt.svg_path << "\n";
                    return 4;
                }
                rep["svg"] = opt.svg_path;
            }
            emit(rep, opt.as_json);
        } else if (command == "inscribe") {
            emit(besant::report::inscribe_report(*quad, opt.r, tol), opt.as_json);
        } else if (command == "maxarea") {
            emit(besant::report::maxarea_report(*quad, tol), opt.as_json);
        }
    } catch (const besant::ParamOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const besant::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inscribed ellipses, Besant quadrilaterals, and their foci"};
    app.require_subcommand(1);

    Options opt;
    double tolerance = 0.0;

    auto add_common = [&](CLI::App* sub, bool with_r, bool with_svg) {
        sub->add_option("--vertices", opt.vertices,
                        "four vertices as 'x,y x,y x,y x,y' (either orientation)");
        sub->add_option("--input-file", opt.input_file, "batch input, one quadrilateral per line");
        sub->add_option("--tolerance", tolerance, "relative predicate tolerance");
        sub->add_flag("--json,!--no-json", opt.as_json, "JSON output (default on)");
        if (with_r) sub->add_option("--r", opt.r, "inellipse family parameter in (0,1)");
        if (with_svg) sub->add_option("--svg", opt.svg_path, "write a figure to this path");
    };

    add_common(app.add_subcommand("classify", "canonical form, predicates, Besant decision"),
               false, false);
    add_common(app.add_subcommand("besant", "construct the Besant ellipse"), false, true);
    add_common(app.add_subcommand("inscribe", "inscribed ellipse at a given r, foci both ways"),
               true, false);
    add_common(app.add_subcommand("maxarea", "maximal-area inscribed ellipse"), false, false);

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();

    Tolerance tol = Tolerance::from_env();
    if (tolerance > 0.0) tol.rel = tolerance;

    if (!opt.input_file.empty()) {
        std::ifstream in(opt.input_file);
        if (!in) {
            std::cerr << "error: cannot open " << opt.input_file << "\n";
            return 4;
        }
        std::string line;
        int worst = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            worst = std::max(worst, run_one(command, line, opt, tol));
        }
        return worst;
    }
    if (opt.vertices.empty()) {
        std::cerr << "error: either --vertices or --input-file is required\n";
        return 3;
    }
    return run_one(command, opt.vertices, opt, tol);
}
