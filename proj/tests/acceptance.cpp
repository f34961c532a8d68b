// Acceptance gate: one pass/fail line per criterion, exit 0 only if all
// pass. Usage: acceptance <sigtau-binary> <golden-dir>. Library pieces are
// exercised directly, the command-line interface through the real binary.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reflection_sim.hpp"
#include "sigtau/billiard.hpp"
#include "sigtau/emit.hpp"
#include "sigtau/enumerate.hpp"
#include "sigtau/rational.hpp"
#include "sigtau/word.hpp"

using namespace sigtau;

namespace {

// Tolerances pinned for the whole gate.
constexpr double kGoldenErrorBound = 1e-8;       // criterion 5, at k = 20
constexpr double kLengthRelTolerance = 1e-12;    // criterion 9, total length
constexpr double kPhiBandRelTolerance = 0.01;    // criterion 8, band location

struct Ctx {
    std::string exe;
    std::string golden_dir;
};

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') {
            out += "'\\''";
        } else {
            out += c;
        }
    }
    return out + "'";
}

// Runs `exe args...`, captures stdout byte-exactly, returns the exit code
// through *code. Stderr is dropped; the gate only judges stdout and codes.
bool run_cli(const Ctx& ctx, const std::string& args, std::string* out, int* code) {
    std::string cmd = shell_quote(ctx.exe) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return false;
    }
    out->clear();
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        out->append(buf, got);
    }
    int status = pclose(pipe);
    if (status < 0 || !WIFEXITED(status)) {
        return false;
    }
    *code = WEXITSTATUS(status);
    return true;
}

bool read_file(const std::string& path, std::string* out) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        return false;
    }
    out->assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    return true;
}

std::string fmt_count(std::size_t n) {
    return std::to_string(n);
}

bool c01_encode_decode(const Ctx& ctx, std::string* why) {
    std::string out;
    int code = -1;
    if (!run_cli(ctx, "encode 3/5", &out, &code) || code != 0 || out != "tstst\n") {
        *why = "encode 3/5 gave code " + std::to_string(code) + ", output \"" + out + "\"";
        return false;
    }
    if (!run_cli(ctx, "decode tstst", &out, &code) || code != 0 || out != "3/5\n") {
        *why = "decode tstst gave code " + std::to_string(code) + ", output \"" + out + "\"";
        return false;
    }
    return true;
}

bool c02_sigma_bound(const Ctx&, std::string* why) {
    for (unsigned n = 1; n <= 20; ++n) {
        std::uint64_t bound = n / 2;
        std::uint64_t seen = 0;
        for (const Word& w : words_of_length(n)) {
            std::uint64_t s = n_sigma(w);
            if (s > bound) {
                *why = "word " + render_word(w) + " of length " + fmt_count(n) + " has " +
                       fmt_count(s) + " sigmas, bound is " + fmt_count(bound);
                return false;
            }
            seen = std::max(seen, s);
        }
        if (seen != bound) {
            *why = "no word of length " + fmt_count(n) + " reaches the bound " +
                   fmt_count(bound);
            return false;
        }
        auto [claimed, witness] = max_n_sigma(n);
        if (claimed != bound || word_length(witness) != n || n_sigma(witness) != bound) {
            *why = "max_n_sigma(" + fmt_count(n) + ") returned a bad witness";
            return false;
        }
    }
    return true;
}

bool c03_step_offset(const Ctx&, std::string* why) {
    for (int p = 1; p <= 300; ++p) {
        for (int q = 1; q <= 300; ++q) {
            if (gcd(p, q) != 1) {
                continue;
            }
            std::uint64_t sigmas = n_sigma(encode(Slope(q, p)));
            std::uint64_t expect;
            if (q < p) {
                expect = euclid_trace(p, q).step_count() - 1;
            } else if (q > p) {
                expect = euclid_trace(q, p).step_count();
            } else {
                expect = 0;  // only 1/1, the empty word
            }
            if (sigmas != expect) {
                *why = "slope " + std::to_string(q) + "/" + std::to_string(p) + " has " +
                       fmt_count(sigmas) + " sigmas, step rule demands " + fmt_count(expect);
                return false;
            }
        }
    }
    return true;
}

bool c04_fibonacci_power(const Ctx&, std::string* why) {
    BigInt prev = 1, cur = 1;
    for (unsigned k = 0; k <= 90; ++k) {
        Slope s = fib_power(k).second;
        if (s.q() != cur || s.p() != prev) {
            *why = "fib_power(" + fmt_count(k) + ") is " + format_slope(s) +
                   ", recurrence gives " + cur.str() + "/" + prev.str();
            return false;
        }
        BigInt next = prev + cur;
        prev = cur;
        cur = next;
    }
    FibSequence f = fib_sequence(42);
    for (unsigned k = 1; k <= 40; ++k) {
        std::size_t steps = euclid_trace(f[k + 1], f[k]).step_count();
        if (steps != k) {
            *why = "euclid_trace(F_" + fmt_count(k + 1) + ", F_" + fmt_count(k) + ") took " +
                   fmt_count(steps) + " steps, not " + fmt_count(k);
            return false;
        }
    }
    return true;
}

bool c05_golden_decay(const Ctx&, std::string* why) {
    double at20 = golden_ratio_error(20);
    if (!(at20 < kGoldenErrorBound)) {
        *why = "golden_ratio_error(20) = " + std::to_string(at20) + " is not below 1e-8";
        return false;
    }
    double last = golden_ratio_error(1);
    for (unsigned k = 2; k <= 60; ++k) {
        double err = golden_ratio_error(k);
        if (!(err < last)) {
            *why = "error did not strictly decrease at k = " + fmt_count(k);
            return false;
        }
        last = err;
    }
    return true;
}

bool c06_word_counts(const Ctx&, std::string* why) {
    std::vector<std::size_t> spot = {1, 2, 3, 5};
    for (unsigned n = 1; n <= 4; ++n) {
        if (words_of_length(n).size() != spot[n - 1]) {
            *why = "words_of_length(" + fmt_count(n) + ") has the wrong size";
            return false;
        }
    }
    for (unsigned n = 0; n <= 20; ++n) {
        if (BigInt(words_of_length(n).size()) != fibonacci(n)) {
            *why = "word count at length " + fmt_count(n) + " is not F_n";
            return false;
        }
    }
    for (unsigned n = 1; n <= 20; ++n) {
        if (count_words_sigma_first_allowed(n) != fibonacci(n + 1)) {
            *why = "sigma-first count at length " + fmt_count(n) + " is not F_{n+1}";
            return false;
        }
    }
    return true;
}

bool c07_family_formula(const Ctx&, std::string* why) {
    for (int n1 = 0; n1 <= 50; ++n1) {
        for (int n2 = 1; n2 <= 50; ++n2) {
            Word w = n1 == 0 ? Word(true, {n2}) : Word(false, {n1, n2});
            if (single_sigma_slope(n1, n2) != apply_word(w, Slope(1, 1))) {
                *why = "closed form disagrees with word application at n1 = " +
                       std::to_string(n1) + ", n2 = " + std::to_string(n2);
                return false;
            }
        }
    }
    for (int n1 = 1; n1 <= 50; ++n1) {
        auto points = family_line_points(n1, 500);
        if (points.empty()) {
            *why = "family line " + std::to_string(n1) + " has no points below 500";
            return false;
        }
        for (const auto& [p, q] : points) {
            if (p - 1 != n1 * q || gcd(q, p) != 1) {
                *why = "family point (" + p.str() + ", " + q.str() + ") is off the line p-1 = " +
                       std::to_string(n1) + " q";
                return false;
            }
        }
    }
    return true;
}

bool c08_grid_maxima(const Ctx&, std::string* why) {
    StepGrid g = step_grid(233);
    std::int32_t best = 0;
    std::set<std::pair<unsigned, unsigned>> argmax;
    for (unsigned p = 1; p <= g.n; ++p) {
        for (unsigned q = 1; q <= g.n; ++q) {
            std::int32_t v = g.at(p, q);
            if (v > best) {
                best = v;
                argmax.clear();
            }
            if (v == best) {
                argmax.insert({p, q});
            }
        }
    }
    std::set<std::pair<unsigned, unsigned>> expect = {{144, 233}, {233, 144}};
    if (argmax != expect) {
        *why = "grid maxima are not exactly (144,233) and (233,144)";
        return false;
    }
    std::string pgm = write_step_grid(g, GridFormat::pgm);
    std::string header = "P5\n233 233\n255\n";
    if (pgm.rfind(header, 0) != 0 || pgm.size() != header.size() + 233u * 233u) {
        *why = "unexpected PGM layout";
        return false;
    }
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::set<std::pair<unsigned, unsigned>> brightest;
    for (std::size_t i = header.size(); i < pgm.size(); ++i) {
        if (static_cast<unsigned char>(pgm[i]) != 255) {
            continue;
        }
        std::size_t idx = i - header.size();
        unsigned q = 233 - static_cast<unsigned>(idx / 233);
        unsigned p = static_cast<unsigned>(idx % 233) + 1;
        brightest.insert({p, q});
        double band = std::min(std::fabs(q - phi * p), std::fabs(p - phi * q)) /
                      std::max(p, q);
        if (band > kPhiBandRelTolerance) {
            *why = "brightest pixel (" + std::to_string(p) + ", " + std::to_string(q) +
                   ") is off the golden band";
            return false;
        }
    }
    if (brightest != expect) {
        *why = "brightest PGM pixels do not sit at the grid maxima";
        return false;
    }
    return true;
}

bool c09_billiard_oracle(const Ctx&, std::string* why) {
    for (int p = 1; p <= 100; ++p) {
        for (int q = 1; q <= 100; ++q) {
            if (gcd(p, q) != 1) {
                continue;
            }
            std::string at = " at slope " + std::to_string(q) + "/" + std::to_string(p);
            Trajectory t = fold_trajectory(Slope(q, p));
            if (t.bounce_count() != static_cast<std::size_t>(p + q - 2)) {
                *why = "bounce count is not p+q-2" + at;
                return false;
            }
            reflsim::SimResult sim = reflsim::simulate(p, q);
            if (sim.corner != corner_label(t.end_corner)) {
                *why = "end corners disagree" + at;
                return false;
            }
            if (sim.path.size() != t.points.size()) {
                *why = "point counts disagree" + at;
                return false;
            }
            for (std::size_t i = 0; i < t.points.size(); ++i) {
                if (t.points[i].x.num != sim.path[i].x.num ||
                    t.points[i].x.den != sim.path[i].x.den ||
                    t.points[i].y.num != sim.path[i].y.num ||
                    t.points[i].y.den != sim.path[i].y.den) {
                    *why = "bounce point " + fmt_count(i) + " disagrees" + at;
                    return false;
                }
            }
            double total = 0.0;
            for (std::size_t i = 0; i + 1 < t.points.size(); ++i) {
                double dx = static_cast<double>(t.points[i + 1].x.num) / t.points[i + 1].x.den -
                            static_cast<double>(t.points[i].x.num) / t.points[i].x.den;
                double dy = static_cast<double>(t.points[i + 1].y.num) / t.points[i + 1].y.den -
                            static_cast<double>(t.points[i].y.num) / t.points[i].y.den;
                total += std::hypot(dx, dy);
            }
            double straight = trajectory_length(Slope(q, p)).second;
            if (std::fabs(total - straight) > kLengthRelTolerance * straight) {
                *why = "segment lengths do not add up to the diagonal" + at;
                return false;
            }
        }
    }
    return true;
}

bool c10_endpoint_sets(const Ctx&, std::string* why) {
    for (unsigned n = 1; n <= 12; ++n) {
        EndpointSet set = endpoints_of_length(n);
        if (BigInt(set.points.size()) != fibonacci(n)) {
            *why = "endpoint count at length " + fmt_count(n) + " is not F_n";
            return false;
        }
        std::set<std::pair<std::string, std::string>> seen;
        std::size_t below = 0;
        for (const Endpoint& e : set.points) {
            if (gcd(e.p, e.q) != 1) {
                *why = "endpoint (" + e.p.str() + ", " + e.q.str() + ") is not coprime";
                return false;
            }
            if (!seen.insert({e.p.str(), e.q.str()}).second) {
                *why = "endpoint (" + e.p.str() + ", " + e.q.str() + ") repeats at length " +
                       fmt_count(n);
                return false;
            }
            below += e.q < e.p;
        }
        if (n >= 2 && BigInt(below) != fibonacci(n - 1)) {
            *why = "below-diagonal count at length " + fmt_count(n) + " is not F_{n-1}";
            return false;
        }
    }
    return true;
}

bool c11_determinism(const Ctx& ctx, std::string* why) {
    // every subcommand, each with its pinned golden file where one exists
    std::vector<std::pair<std::string, std::string>> runs = {
        {"encode 3/5", "encode_3_5.txt"},
        {"decode tstst", "decode_tstst.txt"},
        {"apply t2st 1/1", ""},
        {"steps 5 3 --trace", "steps_5_3_trace.txt"},
        {"fib --k 4 --float", "fib_k4_float.txt"},
        {"enumerate --n 4", "enumerate_n4.txt"},
        {"endpoints --n 4", "endpoints_n4.csv"},
        {"family --n1 1 --pmax 9", "family_n1_1_pmax9.csv"},
        {"trajectory 2/3", "trajectory_2_3.txt"},
        {"trajectory 1/2 --svg", "trajectory_1_2.svg"},
        {"gridmap --N 3 --format csv", "gridmap_n3.csv"},
        {"gridmap --N 2 --format pgm", "gridmap_n2.pgm"},
        {"gridmap --N 233 --format pgm", ""},
        {"figure golden --kmax 4", "figure_golden_k4.svg"},
        {"figure family --n1max 1 --pmax 9", "figure_family_n1max1_pmax9.svg"},
        {"figure endpoints --nmax 4", "figure_endpoints_n4.svg"},
    };
    for (const auto& [args, golden] : runs) {
        std::string first, second;
        int code1 = -1, code2 = -1;
        if (!run_cli(ctx, args, &first, &code1) || !run_cli(ctx, args, &second, &code2)) {
            *why = "could not run \"" + args + "\"";
            return false;
        }
        if (code1 != 0 || code2 != 0) {
            *why = "\"" + args + "\" exited with " + std::to_string(code1) + "/" +
                   std::to_string(code2);
            return false;
        }
        if (first != second) {
            *why = "\"" + args + "\" differed between two runs";
            return false;
        }
        if (golden.empty()) {
            continue;
        }
        std::string want;
        if (!read_file(ctx.golden_dir + "/" + golden, &want)) {
            *why = "missing golden file " + golden;
            return false;
        }
        if (first != want) {
            *why = "\"" + args + "\" does not match golden file " + golden;
            return false;
        }
    }
    // emitters once more, straight through the library
    FigureStyle style;
    Trajectory t = fold_trajectory(Slope(2, 3));
    StepGrid g = step_grid(5);
    std::vector<Endpoint> rows = endpoints_of_length(4).points;
    bool stable =
        render_trajectory_svg(t, style) == render_trajectory_svg(t, style) &&
        render_golden_construction_svg(5, style) == render_golden_construction_svg(5, style) &&
        render_family_svg(2, 12, style) == render_family_svg(2, 12, style) &&
        render_endpoints_svg(5, style) == render_endpoints_svg(5, style) &&
        write_step_grid(g, GridFormat::csv) == write_step_grid(g, GridFormat::csv) &&
        write_step_grid(g, GridFormat::pgm) == write_step_grid(g, GridFormat::pgm) &&
        endpoint_csv(rows) == endpoint_csv(rows) &&
        trajectory_record(t) == trajectory_record(t);
    if (!stable) {
        *why = "an emitter changed its output between two calls";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::fprintf(stderr, "usage: acceptance <sigtau-binary> <golden-dir>\n");
        return 2;
    }
    Ctx ctx{argv[1], argv[2]};

    struct Criterion {
        int id;
        const char* name;
        std::function<bool(const Ctx&, std::string*)> check;
    };
    std::vector<Criterion> criteria = {
        {1, "encode/decode round trip on 3/5", c01_encode_decode},
        {2, "sigma-count bound floor(n/2) attained, all words to n = 20", c02_sigma_bound},
        {3, "sigma count = division steps with offset, all coprime pairs to 300", c03_step_offset},
        {4, "powers of st follow Fibonacci; Fibonacci pairs take exactly k steps", c04_fibonacci_power},
        {5, "golden-ratio error < 1e-8 at k = 20, strictly decreasing to k = 60", c05_golden_decay},
        {6, "word counts are Fibonacci; sigma-first variant shifts the index", c06_word_counts},
        {7, "single-sigma closed form and family line p - 1 = n1 q", c07_family_formula},
        {8, "grid maxima and brightest pixels exactly at (144,233), (233,144)", c08_grid_maxima},
        {9, "folding matches the reflection simulator, all coprime pairs to 100", c09_billiard_oracle},
        {10, "endpoint sets coprime, distinct, Fibonacci-counted to n = 12", c10_endpoint_sets},
        {11, "subcommands and emitters byte-identical across runs and goldens", c11_determinism},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        std::string why;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.check(ctx, &why);
        } catch (const std::exception& e) {
            why = std::string("unexpected exception: ") + e.what();
        }
        auto stop = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        std::printf("%s %2d  %s (%.1f ms)\n", ok ? "PASS" : "FAIL", c.id, c.name, ms);
        if (!ok) {
            std::printf("        %s\n", why.c_str());
            ++failed;
        }
    }
    if (failed == 0) {
        std::printf("all 11 criteria passed\n");
        return 0;
    }
    std::printf("%d of 11 criteria failed\n", failed);
    return 1;
}
