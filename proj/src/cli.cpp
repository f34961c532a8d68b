#include "sigtau/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <new>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sigtau/billiard.hpp"
#include "sigtau/emit.hpp"
#include "sigtau/enumerate.hpp"
#include "sigtau/rational.hpp"
#include "sigtau/word.hpp"

namespace sigtau {

namespace {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Writes through a temp file and renames it into place, so readers never
// observe a half-written file.
void deliver(const std::string& bytes, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << bytes;
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot open \"" + tmp + "\" for writing");
        }
        f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        f.flush();
        if (!f) {
            throw std::runtime_error("write to \"" + tmp + "\" failed");
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact sigma/tau word calculus on coprime slopes", "sigtau"};
    app.require_subcommand(1);

    std::string slope_text;
    std::string word_text;
    std::string a_text;
    std::string b_text;
    std::string format_text;
    std::string out_path;
    unsigned k = 0;
    unsigned n = 0;
    unsigned n1 = 0;
    unsigned pmax = 0;
    unsigned grid_n = 0;
    unsigned kmax = 0;
    unsigned n1max = 0;
    unsigned nmax = 0;
    bool want_trace = false;
    bool want_float = false;
    bool count_only = false;
    bool want_svg = false;

    auto* cmd_encode = app.add_subcommand("encode", "Canonical word of a coprime slope");
    cmd_encode->add_option("slope", slope_text, "slope as q/p")->required();
    cmd_encode->callback(
        [&] { out << render_word(encode(parse_slope(slope_text))) << "\n"; });

    auto* cmd_decode = app.add_subcommand("decode", "Slope reached from 1/1 by a word");
    cmd_decode->add_option("word", word_text, "word, e.g. tstst or t2st, e for empty")
        ->required();
    cmd_decode->callback(
        [&] { out << format_slope(apply_word(parse_word(word_text), Slope(1, 1))) << "\n"; });

    auto* cmd_apply = app.add_subcommand("apply", "Apply a word to a slope");
    cmd_apply->add_option("word", word_text, "word to apply")->required();
    cmd_apply->add_option("slope", slope_text, "slope as q/p")->required();
    cmd_apply->callback([&] {
        out << format_slope(apply_word(parse_word(word_text), parse_slope(slope_text)))
            << "\n";
    });

    auto* cmd_steps = app.add_subcommand("steps", "Division steps of the Euclidean algorithm");
    cmd_steps->add_option("a", a_text, "first dividend")->required();
    cmd_steps->add_option("b", b_text, "first divisor")->required();
    cmd_steps->add_flag("--trace", want_trace, "also print dividend divisor quotient remainder per step");
    cmd_steps->callback([&] {
        EuclidTrace trace = euclid_trace(parse_positive_int(a_text), parse_positive_int(b_text));
        out << trace.step_count() << "\n";
        if (want_trace) {
            for (const DivisionStep& s : trace.steps) {
                out << s.dividend.str() << " " << s.divisor.str() << " " << s.quotient.str()
                    << " " << s.remainder.str() << "\n";
            }
        }
    });

    auto* cmd_fib = app.add_subcommand("fib", "Slope and word of the k-th power of sigma tau");
    cmd_fib->add_option("--k", k, "power")->required();
    cmd_fib->add_flag("--float", want_float, "append decimal slope value and distance to phi");
    cmd_fib->callback([&] {
        auto [word, slope] = fib_power(k);
        std::string line = format_slope(slope) + " " + render_word(word);
        if (want_float) {
            if (k < 1) {
                throw std::domain_error("fib: --float needs k >= 1");
            }
            using Real = boost::multiprecision::cpp_bin_float_50;
            double value = (Real(slope.q()) / Real(slope.p())).convert_to<double>();
            line += " " + fmt12(value) + " " + fmt12(golden_ratio_error(k));
        }
        out << line << "\n";
    });

    auto* cmd_enum = app.add_subcommand("enumerate", "All canonical words of one length");
    cmd_enum->add_option("--n", n, "word length")->required();
    cmd_enum->add_flag("--count-only", count_only, "print how many instead of listing");
    cmd_enum->callback([&] {
        if (count_only) {
            if (n > kWordLengthCap) {
                throw std::length_error("enumerate: n = " + std::to_string(n) +
                                        " exceeds cap " + std::to_string(kWordLengthCap));
            }
            out << count_words(n).str() << "\n";
            return;
        }
        for (const Word& w : words_of_length(n)) {
            out << render_word(w) << "\n";
        }
    });

    auto* cmd_endpoints = app.add_subcommand("endpoints", "Endpoints of all words of one length");
    cmd_endpoints->add_option("--n", n, "word length")->required();
    cmd_endpoints->callback([&] { out << endpoint_csv(endpoints_of_length(n).points); });

    auto* cmd_family = app.add_subcommand("family", "Lattice points of one single-sigma family");
    cmd_family->add_option("--n1", n1, "leading tau run")->required();
    cmd_family->add_option("--pmax", pmax, "largest p")->required();
    cmd_family->callback([&] {
        std::vector<Endpoint> rows;
        for (const auto& [p, q] : family_line_points(n1, pmax)) {
            rows.push_back({encode(Slope(q, p)), p, q});
        }
        out << endpoint_csv(rows);
    });

    auto* cmd_traj = app.add_subcommand("trajectory", "Fold a slope into the unit square");
    cmd_traj->add_option("slope", slope_text, "slope as q/p")->required();
    cmd_traj->add_flag("--svg", want_svg, "emit an SVG figure instead of the record");
    cmd_traj->add_option("--out", out_path, "write to this file (atomic) instead of stdout");
    cmd_traj->callback([&] {
        Trajectory t = fold_trajectory(parse_slope(slope_text));
        deliver(want_svg ? render_trajectory_svg(t, FigureStyle{}) : trajectory_record(t),
                out_path, out);
    });

    auto* cmd_grid = app.add_subcommand("gridmap", "Step-count grid over all pairs up to N");
    cmd_grid->add_option("--N", grid_n, "grid size")->required();
    cmd_grid->add_option("--format", format_text, "csv or pgm")->required();
    cmd_grid->add_option("--out", out_path, "write to this file (atomic) instead of stdout");
    cmd_grid->callback([&] {
        GridFormat format = parse_grid_format(format_text);
        deliver(write_step_grid(step_grid(grid_n), format), out_path, out);
    });

    auto* cmd_figure = app.add_subcommand("figure", "SVG figures");
    cmd_figure->require_subcommand(1);

    auto* fig_golden = cmd_figure->add_subcommand("golden", "Golden-ratio staircase");
    fig_golden->add_option("--kmax", kmax, "largest power of sigma tau")->required();
    fig_golden->add_option("--out", out_path, "write to this file (atomic) instead of stdout");
    fig_golden->callback(
        [&] { deliver(render_golden_construction_svg(kmax, FigureStyle{}), out_path, out); });

    auto* fig_family = cmd_figure->add_subcommand("family", "Single-sigma family rays");
    fig_family->add_option("--n1max", n1max, "largest leading tau run")->required();
    fig_family->add_option("--pmax", pmax, "largest p")->required();
    fig_family->add_option("--out", out_path, "write to this file (atomic) instead of stdout");
    fig_family->callback(
        [&] { deliver(render_family_svg(n1max, pmax, FigureStyle{}), out_path, out); });

    auto* fig_endpoints = cmd_figure->add_subcommand("endpoints", "Endpoint scatter by length");
    fig_endpoints->add_option("--nmax", nmax, "largest word length")->required();
    fig_endpoints->add_option("--out", out_path, "write to this file (atomic) instead of stdout");
    fig_endpoints->callback(
        [&] { deliver(render_endpoints_svg(nmax, FigureStyle{}), out_path, out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace sigtau
