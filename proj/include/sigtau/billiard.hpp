#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sigtau/rational.hpp"

namespace sigtau {

// Corners of the unit square, counterclockwise from the origin:
// A=(0,0), B=(1,0), C=(1,1), D=(0,1). The ball always starts at A.
enum class Corner { A, B, C, D };

char corner_label(Corner c);
std::pair<int, int> corner_coords(Corner c);

// Rational in lowest terms with denominator >= 1. Wide enough for every
// billiard coordinate: fold_trajectory keeps p, q below 2^30, so all
// intermediate products fit in 64 bits.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rat make(std::int64_t num, std::int64_t den);

    bool operator==(const Rat&) const = default;
};

std::string format_rat(const Rat& r);

struct RatPoint {
    Rat x;
    Rat y;

    bool operator==(const RatPoint&) const = default;
};

// Folds the unfolded coordinate back into [0, 1]: the period-2 triangle
// wave u mod 2, reflected down when it exceeds 1. Requires u >= 0.
Rat fold_point(const Rat& u);

// Lattice endpoint (p, q) of the straight unfolded path for slope q/p.
std::pair<BigInt, BigInt> unfold_endpoint(const Slope& s);

// The corner where the ball stops: coordinates (p mod 2, q mod 2). Never
// A, since coprime p, q cannot both be even.
Corner end_corner(const Slope& s);

// Squared length p^2 + q^2 of the full path, and its square root.
std::pair<BigInt, double> trajectory_length(const Slope& s);

// A corner-to-corner bounce path. points runs from (0,0) to the end
// corner; consecutive points bound one straight segment, so adjacency is
// shared by construction, and every interior point lies on a wall.
struct Trajectory {
    Slope slope;
    std::vector<RatPoint> points;
    Corner end_corner = Corner::A;
    BigInt length_squared;

    std::size_t segment_count() const { return points.size() - 1; }
    std::size_t bounce_count() const { return points.size() - 2; }
};

// Folds the straight path to (p, q) into the square: boundary crossings
// happen at the parameters i/p and j/q, which are pairwise distinct by
// coprimality, and each crossing folds to one bounce point. Segment count
// is p + q - 1. Slopes with p or q at 2^30 or above are a length error
// (the segment list itself would be astronomically long before any
// arithmetic could overflow).
Trajectory fold_trajectory(const Slope& s);

// Line-oriented record: header "p q end_corner segments", then one
// "x0 y0 x1 y1" quadruple per segment, every value as "num/den".
std::string trajectory_record(const Trajectory& t);

}  // namespace sigtau
