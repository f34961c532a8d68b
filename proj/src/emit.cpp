#include "sigtau/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sigtau {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double rat_value(const Rat& r) {
    return static_cast<double>(r.num) / static_cast<double>(r.den);
}

// Affine map from the world box [0, extent]^2 onto the canvas, y up.
struct Frame {
    double scale;
    double size;
    double margin;

    double px(double x) const { return margin + x * scale; }
    double py(double y) const { return size - margin - y * scale; }
};

Frame make_frame(const FigureStyle& style, double extent) {
    double inner = style.canvas_size - 2.0 * style.margin;
    return Frame{inner / extent, static_cast<double>(style.canvas_size),
                 static_cast<double>(style.margin)};
}

std::string svg_open(const FigureStyle& style) {
    std::string s = std::to_string(style.canvas_size);
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + s + " " + s +
           "\" width=\"" + s + "\" height=\"" + s +
           "\">\n<rect width=\"" + s + "\" height=\"" + s + "\" fill=\"white\"/>\n";
}

const char kSvgClose[] = "</svg>\n";

std::string line(const Frame& f, double x0, double y0, double x1, double y1,
                 const std::string& stroke, double width, bool dashed = false,
                 const std::string& extra = "") {
    std::string out = "<line x1=\"" + fmt(f.px(x0)) + "\" y1=\"" + fmt(f.py(y0)) +
                      "\" x2=\"" + fmt(f.px(x1)) + "\" y2=\"" + fmt(f.py(y1)) +
                      "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) + "\"";
    if (dashed) {
        out += " stroke-dasharray=\"6 4\"";
    }
    return out + extra + "/>\n";
}

std::string circle(const Frame& f, double x, double y, double r, const std::string& fill,
                   const std::string& stroke = "", double stroke_width = 0) {
    std::string out = "<circle cx=\"" + fmt(f.px(x)) + "\" cy=\"" + fmt(f.py(y)) +
                      "\" r=\"" + fmt(r) + "\" fill=\"" + fill + "\"";
    if (!stroke.empty()) {
        out += " stroke=\"" + stroke + "\" stroke-width=\"" + fmt(stroke_width) + "\"";
    }
    return out + "/>\n";
}

std::string text_at(double px, double py, char body) {
    return "<text x=\"" + fmt(px) + "\" y=\"" + fmt(py) +
           "\" font-family=\"sans-serif\" font-size=\"16\" fill=\"black\">" + body +
           "</text>\n";
}

// Light unit lattice; skipped when the spacing would drop below a couple
// of pixels anyway.
std::string lattice(const Frame& f, long extent, double width) {
    if (extent > 100) {
        return "";
    }
    std::string out;
    for (long i = 0; i <= extent; ++i) {
        auto v = static_cast<double>(i);
        out += line(f, v, 0, v, static_cast<double>(extent), "#cccccc", width);
        out += line(f, 0, v, static_cast<double>(extent), v, "#cccccc", width);
    }
    return out;
}

const char kArrowDefs[] =
    "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
    "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto\">"
    "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#555555\"/></marker></defs>\n";

const std::string& palette_color(const FigureStyle& style, std::size_t index) {
    return style.palette[index % style.palette.size()];
}

}  // namespace

void validate_style(const FigureStyle& style) {
    if (style.canvas_size <= 2 * style.margin || style.margin < 0) {
        throw std::domain_error("FigureStyle: canvas must exceed twice the margin");
    }
    if (style.palette.empty()) {
        throw std::domain_error("FigureStyle: palette must not be empty");
    }
    if (style.stroke_width <= 0 || style.hair_width <= 0 || style.point_radius <= 0) {
        throw std::domain_error("FigureStyle: widths and radius must be positive");
    }
}

std::string render_trajectory_svg(const Trajectory& t, const FigureStyle& style) {
    validate_style(style);
    Frame f = make_frame(style, 1.0);
    std::string out = svg_open(style);
    out += "<rect x=\"" + fmt(f.px(0)) + "\" y=\"" + fmt(f.py(1)) + "\" width=\"" +
           fmt(f.scale) + "\" height=\"" + fmt(f.scale) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + fmt(style.stroke_width) +
           "\"/>\n";
    out += text_at(f.px(0) - 18, f.py(0) + 18, 'A');
    out += text_at(f.px(1) + 6, f.py(0) + 18, 'B');
    out += text_at(f.px(1) + 6, f.py(1) - 6, 'C');
    out += text_at(f.px(0) - 18, f.py(1) - 6, 'D');
    out += "<polyline fill=\"none\" stroke=\"" + palette_color(style, 0) +
           "\" stroke-width=\"" + fmt(style.stroke_width) +
           "\" stroke-linejoin=\"round\" stroke-linecap=\"round\" points=\"";
    for (std::size_t i = 0; i < t.points.size(); ++i) {
        if (i > 0) {
            out += " ";
        }
        out += fmt(f.px(rat_value(t.points[i].x))) + "," + fmt(f.py(rat_value(t.points[i].y)));
    }
    out += "\"/>\n";
    out += circle(f, 0, 0, style.point_radius, "black");
    return out + kSvgClose;
}

std::string render_golden_construction_svg(unsigned k_max, const FigureStyle& style) {
    validate_style(style);
    if (k_max < 1 || k_max > 30) {
        throw std::domain_error("render_golden_construction_svg: k_max must be in 1..30");
    }
    FibSequence fib = fib_sequence(k_max + 2);  // F_0 .. F_{k_max+1}
    auto at = [&](std::size_t i) { return fib[i].convert_to<double>(); };
    double extent = at(k_max + 1) + 1;
    Frame f = make_frame(style, extent);
    double phi = (1 + std::sqrt(5.0)) / 2;

    std::string out = svg_open(style);
    out += kArrowDefs;
    out += lattice(f, static_cast<long>(extent), style.hair_width);
    out += line(f, 0, 0, extent, 0, "black", style.hair_width);
    out += line(f, 0, 0, 0, extent, "black", style.hair_width);
    out += line(f, 0, 0, extent, extent, "#bbbbbb", style.hair_width);
    out += line(f, 0, 0, extent / phi, extent, "#888888", style.hair_width);
    out += line(f, 0, 0, extent, extent / phi, "#888888", style.hair_width);

    // P_k = (F_k, F_{k+1}) is reached from P_{k-1} through the tau image
    // O_{k-1} = (F_{k+1}, F_k): tau shears to the open circle, sigma
    // mirrors it back across the diagonal.
    const std::string marker = " marker-end=\"url(#arrow)\"";
    for (unsigned k = 0; k < k_max; ++k) {
        double tip_x = at(k + 2);
        double tip_y = at(k + 1);
        out += line(f, at(k), at(k + 1), tip_x, tip_y, "#555555", style.hair_width * 2,
                    false, marker);
        out += line(f, tip_x, tip_y, at(k + 1), at(k + 2), "#555555", style.hair_width * 2,
                    true, marker);
    }
    for (unsigned k = 0; k < k_max; ++k) {
        out += circle(f, at(k + 2), at(k + 1), style.point_radius, "white", "black",
                      style.hair_width * 2);
    }
    for (unsigned k = 0; k <= k_max; ++k) {
        out += circle(f, at(k), at(k + 1), style.point_radius, "black");
    }
    return out + kSvgClose;
}

std::string render_family_svg(unsigned n1_max, unsigned p_max, const FigureStyle& style) {
    validate_style(style);
    if (n1_max < 1) {
        throw std::domain_error("render_family_svg: n1_max must be >= 1");
    }
    if (p_max < 3) {
        throw std::domain_error("render_family_svg: p_max must be >= 3");
    }
    double extent = p_max + 1.0;
    Frame f = make_frame(style, extent);
    std::string out = svg_open(style);
    out += lattice(f, static_cast<long>(extent), style.hair_width);
    out += line(f, 0, 0, extent, 0, "black", style.hair_width);
    out += line(f, 0, 0, 0, extent, "black", style.hair_width);
    for (unsigned n1 = 1; n1 <= n1_max; ++n1) {
        out += line(f, 1, 0, extent, (extent - 1) / n1, "#888888", style.hair_width, true);
    }
    for (unsigned n1 = 1; n1 <= n1_max; ++n1) {
        for (const auto& [p, q] : family_line_points(n1, p_max)) {
            if (q < 2) {
                continue;  // drawn once below, as a pure-tau anchor
            }
            out += circle(f, p.convert_to<double>(), q.convert_to<double>(),
                          style.point_radius, palette_color(style, 0));
        }
    }
    for (unsigned p = 2; p <= p_max; ++p) {
        out += circle(f, p, 1, style.point_radius, palette_color(style, 4));
    }
    out += circle(f, 1, 0, style.point_radius, "black");
    return out + kSvgClose;
}

std::string render_endpoints_svg(unsigned n_max, const FigureStyle& style) {
    validate_style(style);
    if (n_max < 1) {
        throw std::domain_error("render_endpoints_svg: n_max must be >= 1");
    }
    std::vector<EndpointSet> sets;
    BigInt top = 0;
    for (unsigned n = 1; n <= n_max; ++n) {
        sets.push_back(endpoints_of_length(n));
        for (const Endpoint& e : sets.back().points) {
            top = std::max(top, std::max(e.p, e.q));
        }
    }
    double extent = top.convert_to<double>() + 1;
    Frame f = make_frame(style, extent);
    std::string out = svg_open(style);
    out += lattice(f, static_cast<long>(extent), style.hair_width);
    out += line(f, 0, 0, extent, 0, "black", style.hair_width);
    out += line(f, 0, 0, 0, extent, "black", style.hair_width);
    out += line(f, 0, 0, extent, extent, "#888888", style.hair_width);
    for (const EndpointSet& set : sets) {
        const std::string& color = palette_color(style, set.n - 1);
        for (const Endpoint& e : set.points) {
            out += circle(f, e.p.convert_to<double>(), e.q.convert_to<double>(),
                          style.point_radius, color);
        }
    }
    return out + kSvgClose;
}

GridFormat parse_grid_format(std::string_view text) {
    if (text == "csv") {
        return GridFormat::csv;
    }
    if (text == "pgm") {
        return GridFormat::pgm;
    }
    throw std::invalid_argument("grid format must be csv or pgm, not \"" +
                                std::string(text) + "\"");
}

std::string write_step_grid(const StepGrid& grid, GridFormat format) {
    if (format == GridFormat::csv) {
        std::string out = "p,q,steps\n";
        for (unsigned p = 1; p <= grid.n; ++p) {
            for (unsigned q = 1; q <= grid.n; ++q) {
                out += std::to_string(p) + "," + std::to_string(q) + "," +
                       std::to_string(grid.at(p, q)) + "\n";
            }
        }
        return out;
    }
    std::int64_t max = *std::max_element(grid.cells.begin(), grid.cells.end());
    std::string out = "P5\n" + std::to_string(grid.n) + " " + std::to_string(grid.n) +
                      "\n255\n";
    out.reserve(out.size() + grid.cells.size());
    for (unsigned row = 0; row < grid.n; ++row) {
        unsigned q = grid.n - row;  // q = N at the top of the image
        for (unsigned p = 1; p <= grid.n; ++p) {
            std::int64_t v = (static_cast<std::int64_t>(grid.at(p, q)) * 255 + max / 2) / max;
            out.push_back(static_cast<char>(static_cast<unsigned char>(v)));
        }
    }
    return out;
}

std::string endpoint_csv(const std::vector<Endpoint>& rows) {
    std::string out = "n,word,p,q\n";
    for (const Endpoint& e : rows) {
        out += word_length(e.word).str() + "," + render_word(e.word) + "," + e.p.str() +
               "," + e.q.str() + "\n";
    }
    return out;
}

}  // namespace sigtau
