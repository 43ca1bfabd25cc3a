#pragma once

/// Command-line front end. Every capability is its own subcommand with
/// line-oriented, tab-separated output chosen for auditability; output
/// is byte-identical across runs, platforms, and thread counts.
///
/// Exit codes: 0 success or no violation found; 1 domain finding
/// (coloring violation, monochromatic-edge witness, solve budget
/// exceeded); 2 usage error; 3 input-format error.
///
/// Not part of the umbrella header: including this pulls in CLI11.

#include "udg/chromatic.hpp"
#include "udg/coloring.hpp"
#include "udg/density.hpp"
#include "udg/fixtures.hpp"
#include "udg/graph.hpp"
#include "udg/tiling.hpp"
#include "udg/unit_vectors.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace udg::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline unsigned threads_from_env() {
    const char* raw = std::getenv("UDG_THREADS");
    if (raw == nullptr) return 1;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1) return 1;
    return static_cast<unsigned>(std::min<long>(v, 64));
}

inline std::uint64_t parse_field_spec(const std::string& spec) {
    if (spec == "Q") return 0;
    const std::string prefix = "Qsqrt:";
    if (spec.rfind(prefix, 0) == 0) {
        const std::string digits = spec.substr(prefix.size());
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
            try {
                std::uint64_t m = std::stoull(digits);
                Quadratic::validate_tag(m);
                return m;
            } catch (const std::domain_error& e) {
                throw std::invalid_argument(e.what());
            } catch (const std::out_of_range&) {
                throw std::invalid_argument("field tag out of range");
            }
        }
    }
    throw std::invalid_argument("field must be Q or Qsqrt:<m>");
}

inline std::pair<Rational, Rational> parse_rational_pair(const std::string& text) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw std::invalid_argument("expected <x>,<y>");
    try {
        FieldValue x = parse_scalar(text.substr(0, comma));
        FieldValue y = parse_scalar(text.substr(comma + 1));
        if (!x.is_rational() || !y.is_rational())
            throw std::invalid_argument("rational scalars required");
        return {x.rational(), y.rational()};
    } catch (const ParseError& e) {
        throw std::invalid_argument(e.what());
    }
}

inline Rational parse_positive_rational(const std::string& text) {
    try {
        FieldValue v = parse_scalar(text);
        if (!v.is_rational() || v.rational().sign() <= 0)
            throw std::invalid_argument("positive rational required: " + text);
        return v.rational();
    } catch (const ParseError& e) {
        throw std::invalid_argument(e.what());
    }
}

inline Coloring parse_colors(const std::string& text) {
    Coloring colors;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t tab = line.rfind('\t');
        std::string token = (tab == std::string::npos) ? line.substr(first) : line.substr(tab + 1);
        try {
            std::size_t used = 0;
            int c = std::stoi(token, &used);
            if (used != token.size() || c < 0) throw std::invalid_argument("");
            colors.push_back(c);
        } catch (const std::exception&) {
            throw ParseError("color must be a non-negative integer", line_no, 1);
        }
    }
    return colors;
}

}  // namespace detail

/// Run one invocation; argv excludes the program name. Output goes to
/// `out`, diagnostics to `err`; the return value is the exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact unit-distance graph laboratory over the rationals and quadratic fields"};
    app.require_subcommand(1);

    auto* sc_unitvecs = app.add_subcommand("unitvecs", "Enumerate exact unit vectors");
    int uv_dim = 2;
    std::string uv_field = "Q";
    long long uv_bound = 1;
    sc_unitvecs->add_option("--dim", uv_dim, "Dimension (2, 3, or 4)")
        ->required()
        ->check(CLI::IsMember({2, 3, 4}));
    sc_unitvecs->add_option("--field", uv_field, "Field: Q or Qsqrt:<m>")->required();
    sc_unitvecs->add_option("--bound", uv_bound, "Denominator / height bound")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* sc_build = app.add_subcommand("build-graph", "Build the exact unit-distance graph");
    std::string bg_file;
    sc_build->add_option("points-file", bg_file, "Points file")->required();

    auto* sc_color = app.add_subcommand("color", "Color points with a canonical proper scheme");
    std::string col_scheme;
    std::string col_file;
    sc_color->add_option("--scheme", col_scheme, "Coloring scheme")
        ->required()
        ->check(CLI::IsMember({"parity"}));
    sc_color->add_option("points-file", col_file, "Points file")->required();

    auto* sc_verify = app.add_subcommand("verify", "Check a coloring for monochromatic edges");
    std::string vf_points, vf_colors;
    sc_verify->add_option("points-file", vf_points, "Points file")->required();
    sc_verify->add_option("colors-file", vf_colors, "Colors file (color or point<TAB>color lines)")
        ->required();

    auto* sc_solve = app.add_subcommand("solve", "Exact chromatic number with certificate");
    std::string sv_fixture, sv_file;
    int sv_max_k = 8;
    sc_solve->add_option("--fixture", sv_fixture, "Built-in graph fixture");
    sc_solve->add_option("points-file", sv_file, "Points file");
    sc_solve->add_option("--max-k", sv_max_k, "Color budget")->check(CLI::PositiveNumber);

    auto* sc_refute = app.add_subcommand(
        "refute-tiling",
        "Search a periodic polygonal coloring for a monochromatic unit edge. "
        "This refutes supplied candidate colorings only: finding no witness at the "
        "chosen grid and direction bounds proves nothing about other colorings.");
    std::string rt_file;
    long long rt_max_denom = 25;
    long long rt_grid = 30;
    sc_refute->add_option("tiling-file", rt_file, "Tiling file")->required();
    sc_refute->add_option("--max-denom", rt_max_denom, "Direction denominator bound")
        ->check(CLI::PositiveNumber);
    sc_refute->add_option("--grid", rt_grid, "Grid resolution per period")
        ->check(CLI::PositiveNumber);

    auto* sc_density = app.add_subcommand("density",
                                          "Estimate local color density in a tiling");
    std::string dn_file, dn_point, dn_eps;
    int dn_color = 0;
    long long dn_samples = 100000;
    std::uint64_t dn_seed = 0;
    sc_density->add_option("tiling-file", dn_file, "Tiling file")->required();
    sc_density->add_option("--point", dn_point, "Center point <x>,<y>")->required();
    sc_density->add_option("--color", dn_color, "Color index")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sc_density->add_option("--eps", dn_eps, "Disc radius (positive rational)")->required();
    sc_density->add_option("--samples", dn_samples, "Sample count")->check(CLI::PositiveNumber);
    sc_density->add_option("--seed", dn_seed, "RNG seed");

    auto* sc_approx = app.add_subcommand("approx-dir",
                                         "Rational unit vector within eps of a direction");
    std::string ad_target, ad_eps;
    sc_approx->add_option("--target", ad_target, "Target direction <x>,<y>")->required();
    sc_approx->add_option("--eps", ad_eps, "Distance bound (positive rational)")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);

        if (sc_unitvecs->parsed()) {
            std::uint64_t tag = detail::parse_field_spec(uv_field);
            std::vector<UnitVector> vecs;
            try {
                vecs = enum_unit_vectors(uv_dim, tag, uv_bound);
            } catch (const std::domain_error& e) {
                throw std::invalid_argument(e.what());
            }
            for (const auto& v : vecs) out << v.to_string() << "\n";
            return 0;
        }

        if (sc_build->parsed()) {
            UDGraph g = build_graph(parse_points(detail::read_file(bg_file)),
                                    detail::threads_from_env());
            out << "vertices=" << g.vertex_count() << "\n";
            out << "edges=" << g.edges().size() << "\n";
            for (const auto& [i, j] : g.edges()) out << "edge\t" << i << "\t" << j << "\n";
            for (const auto& comp : components(g)) {
                out << "component";
                for (std::size_t v : comp) out << "\t" << v;
                out << "\n";
            }
            return 0;
        }

        if (sc_color->parsed()) {
            for (const auto& p : parse_points(detail::read_file(col_file)))
                out << p.to_string() << "\t" << parity_color(p) << "\n";
            return 0;
        }

        if (sc_verify->parsed()) {
            std::vector<Point> points = parse_points(detail::read_file(vf_points));
            Coloring colors = detail::parse_colors(detail::read_file(vf_colors));
            if (colors.size() != points.size())
                throw ParseError("color count does not match point count");
            UDGraph g = build_graph(std::move(points), detail::threads_from_env());
            std::vector<Edge> bad = verify_coloring(g, colors);
            if (bad.empty()) {
                out << "proper\n";
                return 0;
            }
            for (const auto& [i, j] : bad) out << "violation\t" << i << "\t" << j << "\n";
            return 1;
        }

        if (sc_solve->parsed()) {
            if (sv_fixture.empty() == sv_file.empty())
                throw std::invalid_argument("give exactly one of --fixture or a points file");
            UDGraph g = sv_fixture.empty()
                            ? build_graph(parse_points(detail::read_file(sv_file)),
                                          detail::threads_from_env())
                            : fixture(sv_fixture);
            try {
                Certificate cert = exact_chromatic(g, sv_max_k);
                out << "chi=" << cert.chi << "\n";
                for (std::size_t v = 0; v < cert.witness.size(); ++v)
                    out << v << "\t" << cert.witness[v] << "\n";
                out << "method=" << cert.lower_bound_method << "\n";
                out << "nodes=" << cert.nodes_explored << "\n";
                return 0;
            } catch (const BudgetExceeded& e) {
                out << "budget-exceeded upper-bound=" << e.best_upper_bound() << "\n";
                return 1;
            }
        }

        if (sc_refute->parsed()) {
            Tiling t = parse_tiling(detail::read_file(rt_file));
            std::vector<UnitVector> dirs =
                angle_ordered(enum_unit_vectors(2, 0, rt_max_denom));
            auto witness = find_mono_unit_edge(t, dirs, rt_grid);
            if (witness) {
                out << "witness " << witness->x.to_string() << " " << witness->y.to_string()
                    << " color=" << witness->color << "\n";
                return 1;
            }
            out << "no-violation-found grid=" << rt_grid << " directions=" << dirs.size()
                << "\n";
            return 0;
        }

        if (sc_density->parsed()) {
            Tiling t = parse_tiling(detail::read_file(dn_file));
            auto [px, py] = detail::parse_rational_pair(dn_point);
            Rational eps = detail::parse_positive_rational(dn_eps);
            DensityEstimate est =
                estimate_density(t, dn_color, Vec2{px, py}, eps, dn_samples, dn_seed);
            out << "estimate=" << est.hits << "/" << est.samples << "\n";
            return 0;
        }

        if (sc_approx->parsed()) {
            auto [tx, ty] = detail::parse_rational_pair(ad_target);
            Rational eps = detail::parse_positive_rational(ad_eps);
            try {
                out << approx_direction(tx, ty, eps).to_string() << "\n";
            } catch (const std::domain_error& e) {
                throw std::invalid_argument(e.what());
            }
            return 0;
        }

        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace udg::cli
