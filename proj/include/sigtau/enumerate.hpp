#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "sigtau/rational.hpp"
#include "sigtau/word.hpp"

namespace sigtau {

// Fibonacci numbers with the shifted indexing F_0 = F_1 = 1, F_2 = 2, ...
using FibSequence = std::vector<BigInt>;

// The first `count` values F_0 .. F_{count-1}.
FibSequence fib_sequence(std::size_t count);

BigInt fibonacci(std::size_t k);

// Number of canonical words of length n; equals F_n, with the empty word
// making count_words(0) = 1.
BigInt count_words(std::size_t n);

// Number of length-n strings over {sigma, tau} with no adjacent sigmas
// and rightmost symbol tau, when sigma may also stand first; equals
// F_{n+1}. Computed by the two-counter recurrence
//     M_sigma(m+1) = M_tau(m),  M_tau(m+1) = M_sigma(m) + M_tau(m)
// from the base M_sigma(1) = M_tau(1) = 1, not by a Fibonacci lookup.
BigInt count_words_sigma_first_allowed(std::size_t n);

inline constexpr unsigned kWordLengthCap = 30;

// All canonical words of length n, sorted by their rendered text ('s'
// before 't', digits before letters). Exactly count_words(n) entries.
// n above the cap is a length error.
std::vector<Word> words_of_length(unsigned n, unsigned cap = kWordLengthCap);

struct Endpoint {
    Word word;
    BigInt p;
    BigInt q;
};

// The lattice endpoints (p, q) reached from 1/1 by every word of length
// n, ordered like words_of_length. All points are coprime and distinct.
struct EndpointSet {
    unsigned n = 0;
    std::vector<Endpoint> points;
};

EndpointSet endpoints_of_length(unsigned n, unsigned cap = kWordLengthCap);

// Endpoint slope of tau^{n1} sigma tau^{n2}, which the closed form gives
// as (n2+1) / (n1 (n2+1) + 1). n1 = 0 collapses to the integer slope
// (n2+1)/1 of the word sigma tau^{n2}.
Slope single_sigma_slope(const BigInt& n1, const BigInt& n2);

// All lattice points (p, q) with p <= p_max on the line p - 1 = n1 q,
// i.e. the slope-1/n1 ray out of (1|0): the single-sigma family for this
// n1 plus its q = 1 pure-tau anchor. Every point is coprime.
std::vector<std::pair<BigInt, BigInt>> family_line_points(const BigInt& n1,
                                                          const BigInt& p_max);

// Largest sigma count over words of length n, floor(n/2), plus a witness:
// (sigma tau)^{n/2} for even n, tau (sigma tau)^{(n-1)/2} for odd.
std::pair<std::uint64_t, Word> max_n_sigma(unsigned n);

// Division-step counts for every pair 1 <= p, q <= N. Symmetric, 1 on
// the diagonal and rows/columns 1; cell values stay tiny (the worst case
// grows like log_phi N), so machine integers suffice.
struct StepGrid {
    unsigned n = 0;
    std::vector<std::int32_t> cells;  // row-major, p outer

    std::int32_t at(unsigned p, unsigned q) const {
        return cells[static_cast<std::size_t>(p - 1) * n + (q - 1)];
    }
};

// Step count of euclid_trace(max(a, b), min(a, b)) without the trace,
// on machine words.
std::int32_t division_steps(std::uint64_t a, std::uint64_t b);

inline constexpr unsigned kGridCap = 10000;

// Grid of division_steps over all pairs <= N, rows computed in parallel.
// step_grid_serial is the plain loop; both produce identical cells.
// N < 2 is a domain error, N above the cap a length error.
StepGrid step_grid(unsigned n, unsigned cap = kGridCap);
StepGrid step_grid_serial(unsigned n, unsigned cap = kGridCap);

}  // namespace sigtau
