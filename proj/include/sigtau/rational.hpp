#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sigtau {

using BigInt = boost::multiprecision::cpp_int;

// Greatest common divisor by plain repeated division. Both arguments must
// be >= 1; anything else is a domain error.
BigInt gcd(const BigInt& a, const BigInt& b);

// A positive slope q/p in lowest terms. q is the numerator, p the
// denominator; the lattice endpoint of the unfolded trajectory is (p, q).
class Slope {
public:
    // Requires q >= 1, p >= 1 and gcd(q, p) = 1.
    Slope(BigInt q, BigInt p);

    const BigInt& q() const { return q_; }
    const BigInt& p() const { return p_; }

    bool operator==(const Slope&) const = default;

private:
    BigInt q_;
    BigInt p_;
};

// Divides out the common factor: reduce(3, 9) == Slope(1, 3).
Slope reduce(const BigInt& q, const BigInt& p);

struct DivisionStep {
    BigInt dividend;
    BigInt divisor;
    BigInt quotient;
    BigInt remainder;

    bool operator==(const DivisionStep&) const = default;
};

// Full run of the division algorithm. Every step satisfies
// dividend = quotient * divisor + remainder, consecutive steps rotate
// (divisor, remainder) into (dividend, divisor), and the last remainder
// is 0. The terminating zero-remainder step is counted.
struct EuclidTrace {
    std::vector<DivisionStep> steps;

    std::size_t step_count() const { return steps.size(); }

    // The divisor of the final step, i.e. gcd of the original pair.
    const BigInt& gcd() const { return steps.back().divisor; }
};

// Runs the division algorithm with first dividend a and first divisor b.
// a < b produces the usual swap step (a, b, 0, a), which is counted.
EuclidTrace euclid_trace(const BigInt& a, const BigInt& b);

// Slope text format "q/p", e.g. "3/5". Signs, whitespace, empty parts and
// leading zeros are syntax errors (std::invalid_argument). Zero components
// and, unless allow_reduce is set, non-reduced fractions are domain errors.
Slope parse_slope(std::string_view text, bool allow_reduce = false);
std::string format_slope(const Slope& s);

// Plain decimal integer >= 1. Syntax problems (signs, stray characters,
// leading zeros, empty input) are std::invalid_argument; the value zero is
// a domain error.
BigInt parse_positive_int(std::string_view text);

}  // namespace sigtau
