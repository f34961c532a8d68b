#include "sigtau/billiard.hpp"

#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace sigtau {

char corner_label(Corner c) {
    switch (c) {
        case Corner::A: return 'A';
        case Corner::B: return 'B';
        case Corner::C: return 'C';
        case Corner::D: return 'D';
    }
    throw std::logic_error("corner_label: bad corner");
}

std::pair<int, int> corner_coords(Corner c) {
    switch (c) {
        case Corner::A: return {0, 0};
        case Corner::B: return {1, 0};
        case Corner::C: return {1, 1};
        case Corner::D: return {0, 1};
    }
    throw std::logic_error("corner_coords: bad corner");
}

namespace {

Corner corner_at(int x, int y) {
    if (x == 0) {
        return y == 0 ? Corner::A : Corner::D;
    }
    return y == 0 ? Corner::B : Corner::C;
}

}  // namespace

Rat Rat::make(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::domain_error("Rat: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rat{num, den};
}

std::string format_rat(const Rat& r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rat fold_point(const Rat& u) {
    if (u.num < 0) {
        throw std::domain_error("fold_point: input must be >= 0");
    }
    std::int64_t period = 2 * u.den;
    std::int64_t r = u.num % period;
    if (r <= u.den) {
        return Rat::make(r, u.den);
    }
    return Rat::make(period - r, u.den);
}

std::pair<BigInt, BigInt> unfold_endpoint(const Slope& s) {
    return {s.p(), s.q()};
}

Corner end_corner(const Slope& s) {
    int x = s.p() % 2 == 0 ? 0 : 1;
    int y = s.q() % 2 == 0 ? 0 : 1;
    return corner_at(x, y);
}

std::pair<BigInt, double> trajectory_length(const Slope& s) {
    BigInt len2 = s.p() * s.p() + s.q() * s.q();
    using Real = boost::multiprecision::cpp_bin_float_50;
    double len = sqrt(Real(len2)).convert_to<double>();
    return {std::move(len2), len};
}

Trajectory fold_trajectory(const Slope& s) {
    const BigInt limit = BigInt(1) << 30;
    if (s.p() >= limit || s.q() >= limit) {
        throw std::length_error("fold_trajectory: p and q must be below 2^30");
    }
    const auto p = s.p().convert_to<std::int64_t>();
    const auto q = s.q().convert_to<std::int64_t>();

    Trajectory t{s, {}, end_corner(s), s.p() * s.p() + s.q() * s.q()};
    t.points.reserve(static_cast<std::size_t>(p + q));
    t.points.push_back({Rat{0, 1}, Rat{0, 1}});

    // Walk the crossing parameters i/p and j/q in increasing order; i q
    // never equals j p in range, or p and q would share a factor.
    std::int64_t i = 1;
    std::int64_t j = 1;
    while (i < p || j < q) {
        bool take_x;
        if (i < p && j < q) {
            std::int64_t lhs = i * q;
            std::int64_t rhs = j * p;
            if (lhs == rhs) {
                throw std::logic_error("fold_trajectory: tied crossing parameters");
            }
            take_x = lhs < rhs;
        } else {
            take_x = i < p;
        }
        Rat x;
        Rat y;
        if (take_x) {
            x = Rat{i % 2, 1};
            y = fold_point(Rat::make(q * i, p));
            ++i;
        } else {
            x = fold_point(Rat::make(p * j, q));
            y = Rat{j % 2, 1};
            ++j;
        }
        t.points.push_back({x, y});
    }

    auto [cx, cy] = corner_coords(t.end_corner);
    t.points.push_back({Rat{cx, 1}, Rat{cy, 1}});
    return t;
}

std::string trajectory_record(const Trajectory& t) {
    std::string out = t.slope.p().str() + " " + t.slope.q().str() + " " +
                      corner_label(t.end_corner) + " " +
                      std::to_string(t.segment_count()) + "\n";
    for (std::size_t k = 0; k + 1 < t.points.size(); ++k) {
        const RatPoint& a = t.points[k];
        const RatPoint& b = t.points[k + 1];
        out += format_rat(a.x) + " " + format_rat(a.y) + " " + format_rat(b.x) + " " +
               format_rat(b.y) + "\n";
    }
    return out;
}

}  // namespace sigtau
