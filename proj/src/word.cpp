#include "sigtau/word.hpp"

#include <cctype>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace sigtau {

Word::Word(bool leading_sigma, std::vector<BigInt> tau_runs)
    : leading_sigma_(leading_sigma), tau_runs_(std::move(tau_runs)) {
    for (const BigInt& run : tau_runs_) {
        if (run < 1) {
            throw std::invalid_argument("Word: tau runs must be >= 1");
        }
    }
    if (leading_sigma_ && tau_runs_.empty()) {
        throw std::invalid_argument("Word: a lone sigma is the identity on 1/1 and not a word");
    }
}

std::uint64_t n_sigma(const Word& w) {
    if (w.empty()) {
        return 0;
    }
    return (w.leading_sigma() ? 1 : 0) + (w.tau_runs().size() - 1);
}

BigInt n_tau(const Word& w) {
    BigInt total = 0;
    for (const BigInt& run : w.tau_runs()) {
        total += run;
    }
    return total;
}

BigInt word_length(const Word& w) {
    return n_tau(w) + n_sigma(w);
}

Slope apply_tau(const Slope& s) {
    return Slope(s.q(), s.p() + s.q());
}

Slope apply_sigma(const Slope& s) {
    return Slope(s.p(), s.q());
}

namespace {

// tau^n in one step: q/p -> q/(p + n q).
Slope apply_tau_run(const BigInt& n, const Slope& s) {
    return Slope(s.q(), s.p() + n * s.q());
}

}  // namespace

Slope apply_word(const Word& w, const Slope& s) {
    if (w.empty()) {
        return s;
    }
    const auto& runs = w.tau_runs();
    Slope current = apply_tau_run(runs.back(), s);
    for (std::size_t i = runs.size() - 1; i-- > 0;) {
        current = apply_tau_run(runs[i], apply_sigma(current));
    }
    if (w.leading_sigma()) {
        current = apply_sigma(current);
    }
    return current;
}

Word encode(const Slope& s) {
    bool leading_sigma = s.q() > s.p();
    // With the numerator below the denominator, each division step
    // q/p = tau^n sigma (r/q) peels one run; the run for q = 1 is p - 1
    // taus and closes the word.
    BigInt q = leading_sigma ? s.p() : s.q();
    BigInt p = leading_sigma ? s.q() : s.p();
    std::vector<BigInt> runs;
    while (q > 1) {
        runs.push_back(p / q);
        BigInt r = p % q;
        p = q;
        q = r;
    }
    if (p > 1) {
        runs.push_back(p - 1);
    } else if (!runs.empty()) {
        // p = q = 1 right after a division step cannot happen: a remainder
        // of 1 always leaves a final divisor >= 2.
        throw std::logic_error("encode: division chain ended on a sigma");
    }
    if (runs.empty()) {
        return Word();
    }
    return Word(leading_sigma, std::move(runs));
}

std::pair<Word, Slope> fib_power(unsigned k) {
    BigInt prev = 1;  // F_{k-1}, seeded with F_0 = 1
    BigInt curr = 1;  // F_k
    for (unsigned i = 0; i < k; ++i) {
        BigInt next = prev + curr;
        prev = curr;
        curr = next;
    }
    if (k == 0) {
        return {Word(), Slope(1, 1)};
    }
    return {Word(true, std::vector<BigInt>(k, 1)), Slope(curr, prev)};
}

double golden_ratio_error(unsigned k) {
    if (k < 1) {
        throw std::domain_error("golden_ratio_error: k must be >= 1");
    }
    // |F_{k+1}/F_k - phi| = |a - sqrt(5) b| / (2b) with a = 2F_{k+1} - F_k,
    // b = F_k.  Multiplying by the conjugate turns this into
    // |a^2 - 5b^2| / (2b (a + sqrt(5) b)): the only subtraction left is
    // exact integer arithmetic, so the value stays accurate long after the
    // difference itself drops below double precision.
    using Real = boost::multiprecision::cpp_bin_float_50;
    Slope slope = fib_power(k).second;
    BigInt a = 2 * slope.q() - slope.p();
    const BigInt& b = slope.p();
    BigInt disc = abs(a * a - 5 * b * b);
    Real denom = 2 * Real(b) * (Real(a) + sqrt(Real(5)) * Real(b));
    return (Real(disc) / denom).convert_to<double>();
}

std::string render_word(const Word& w) {
    if (w.empty()) {
        return "e";
    }
    std::string out;
    if (w.leading_sigma()) {
        out.push_back('s');
    }
    const auto& runs = w.tau_runs();
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (i > 0) {
            out.push_back('s');
        }
        out.push_back('t');
        if (runs[i] > 1) {
            out += runs[i].str();
        }
    }
    return out;
}

Word parse_word(std::string_view text) {
    if (text == "e") {
        return Word();
    }
    if (text.empty()) {
        throw std::invalid_argument("word: empty input (the empty word is spelled \"e\")");
    }

    struct Token {
        char letter;
        BigInt count;
    };
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        char letter = text[i];
        if (letter != 's' && letter != 't') {
            throw std::invalid_argument("word: bad character '" + std::string(1, letter) + "' in \"" +
                                        std::string(text) + "\"");
        }
        ++i;
        BigInt count = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::string digits;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                digits.push_back(text[i]);
                ++i;
            }
            count = BigInt(digits);
            if (count == 0) {
                throw std::invalid_argument("word: zero run count in \"" + std::string(text) + "\"");
            }
        }
        tokens.push_back({letter, count});
    }

    if (tokens.back().letter == 's') {
        throw std::invalid_argument("word: \"" + std::string(text) + "\" ends in sigma");
    }

    bool leading_sigma = false;
    std::vector<BigInt> runs;
    bool expect_tau = false;  // set right after a sigma
    for (std::size_t t = 0; t < tokens.size(); ++t) {
        const Token& tok = tokens[t];
        if (tok.letter == 's') {
            if (tok.count > 1 || expect_tau) {
                throw std::invalid_argument("word: adjacent sigmas in \"" + std::string(text) + "\"");
            }
            if (t == 0) {
                leading_sigma = true;
            }
            expect_tau = true;
        } else {
            if (!runs.empty() && !expect_tau) {
                // Adjacent tau tokens merge into one run.
                runs.back() += tok.count;
            } else {
                runs.push_back(tok.count);
            }
            expect_tau = false;
        }
    }
    return Word(leading_sigma, std::move(runs));
}

}  // namespace sigtau
