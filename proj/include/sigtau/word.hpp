#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sigtau/rational.hpp"

namespace sigtau {

/*
 * Two maps act on slopes q/p with gcd(q, p) = 1:
 *
 *     sigma : q/p -> p/q        (mirror across the diagonal, involution)
 *     tau   : q/p -> q/(p+q)    (shear the endpoint by q in x)
 *
 * Every coprime slope is reached from 1/1 by exactly one composition of
 * the canonical shape
 *
 *     sigma^j tau^{n1} sigma tau^{n2} ... sigma tau^{nk}
 *
 * with j in {0, 1} and every run ni >= 1. Maps compose right to left, so
 * tau^{nk} acts first. Two sigmas are never adjacent (sigma is an
 * involution, a double application cancels) and a non-empty word always
 * ends in tau: a trailing sigma fixes 1/1 and would break uniqueness.
 *
 * Word stores j and the run lengths [n1..nk]; the forbidden shapes are
 * not representable. The empty word is the identity and maps to 1/1.
 *
 * Text form: 's' = sigma, 't' = tau, leftmost letter applied last. A run
 * renders as the letter followed by its length when above 1, so
 * tau tau sigma tau is "t2st". The empty word renders as "e".
 */
class Word {
public:
    // Empty word (identity).
    Word() = default;

    // Requires every run >= 1; a leading sigma additionally requires at
    // least one run.
    Word(bool leading_sigma, std::vector<BigInt> tau_runs);

    bool leading_sigma() const { return leading_sigma_; }
    const std::vector<BigInt>& tau_runs() const { return tau_runs_; }
    bool empty() const { return tau_runs_.empty(); }

    bool operator==(const Word&) const = default;

private:
    bool leading_sigma_ = false;
    std::vector<BigInt> tau_runs_;
};

std::uint64_t n_sigma(const Word& w);
BigInt n_tau(const Word& w);
BigInt word_length(const Word& w);

Slope apply_tau(const Slope& s);
Slope apply_sigma(const Slope& s);
Slope apply_word(const Word& w, const Slope& s);

// The unique canonical word taking 1/1 to s. encode(Slope(1, 1)) is the
// empty word, and apply_word(encode(s), 1/1) == s for every s.
Word encode(const Slope& s);

// k-fold power of the word sigma tau together with its endpoint slope
// F_{k+1}/F_k, where F_0 = F_1 = 1.
std::pair<Word, Slope> fib_power(unsigned k);

// |F_{k+1}/F_k - phi| with phi the golden ratio. The cancellation is
// carried out exactly on the integers (conjugate trick) and only the
// result is rounded to double, so the strict decay survives well past the
// point where ratio and phi round to the same double.
double golden_ratio_error(unsigned k);

std::string render_word(const Word& w);

// Accepts both plain ("tstst") and run-length ("t2st") spellings and "e"
// for the empty word. Rejects zero counts, adjacent sigmas, words ending
// in sigma and any stray character.
Word parse_word(std::string_view text);

}  // namespace sigtau
