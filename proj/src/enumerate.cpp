#include "sigtau/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sigtau {

FibSequence fib_sequence(std::size_t count) {
    FibSequence values;
    values.reserve(count);
    BigInt prev = 1;
    BigInt curr = 1;
    for (std::size_t i = 0; i < count; ++i) {
        values.push_back(prev);
        BigInt next = prev + curr;
        prev = curr;
        curr = next;
    }
    return values;
}

BigInt fibonacci(std::size_t k) {
    BigInt prev = 1;
    BigInt curr = 1;
    for (std::size_t i = 0; i < k; ++i) {
        BigInt next = prev + curr;
        prev = curr;
        curr = next;
    }
    return prev;
}

BigInt count_words(std::size_t n) {
    return fibonacci(n);
}

BigInt count_words_sigma_first_allowed(std::size_t n) {
    if (n < 1) {
        throw std::domain_error("count_words_sigma_first_allowed: n must be >= 1");
    }
    BigInt m_sigma = 1;  // length-m strings starting with sigma
    BigInt m_tau = 1;    // ... starting with tau
    for (std::size_t m = 1; m < n; ++m) {
        BigInt next_sigma = m_tau;
        BigInt next_tau = m_sigma + m_tau;
        m_sigma = next_sigma;
        m_tau = next_tau;
    }
    return m_sigma + m_tau;
}

namespace {

// Appends every run list [n1..nk] with sum ni + (k-1) = budget, i.e. all
// tails of canonical words that still have `budget` symbols to fill.
template <typename Emit>
void compose_runs(unsigned budget, std::vector<BigInt>& runs, Emit&& emit) {
    for (unsigned r = 1; r <= budget; ++r) {
        runs.push_back(r);
        if (r == budget) {
            emit(runs);
        } else if (budget >= r + 2) {
            // one symbol pays for the separating sigma
            compose_runs(budget - r - 1, runs, emit);
        }
        runs.pop_back();
    }
}

}  // namespace

std::vector<Word> words_of_length(unsigned n, unsigned cap) {
    if (n > cap) {
        throw std::length_error("words_of_length: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
    }
    if (n == 0) {
        return {Word()};
    }
    std::vector<Word> words;
    std::vector<BigInt> runs;
    for (unsigned j = 0; j <= 1 && j < n; ++j) {
        compose_runs(n - j, runs, [&](const std::vector<BigInt>& r) {
            words.emplace_back(j == 1, r);
        });
    }
    std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
        return render_word(a) < render_word(b);
    });
    return words;
}

EndpointSet endpoints_of_length(unsigned n, unsigned cap) {
    if (n < 1) {
        throw std::domain_error("endpoints_of_length: n must be >= 1");
    }
    EndpointSet set;
    set.n = n;
    Slope start(1, 1);
    for (Word& w : words_of_length(n, cap)) {
        Slope s = apply_word(w, start);
        set.points.push_back({std::move(w), s.p(), s.q()});
    }
    return set;
}

Slope single_sigma_slope(const BigInt& n1, const BigInt& n2) {
    if (n1 < 0 || n2 < 1) {
        throw std::domain_error("single_sigma_slope: need n1 >= 0 and n2 >= 1");
    }
    return Slope(n2 + 1, n1 * (n2 + 1) + 1);
}

std::vector<std::pair<BigInt, BigInt>> family_line_points(const BigInt& n1,
                                                          const BigInt& p_max) {
    if (n1 < 1) {
        throw std::domain_error("family_line_points: n1 must be >= 1");
    }
    if (p_max < 2) {
        throw std::domain_error("family_line_points: p_max must be >= 2");
    }
    std::vector<std::pair<BigInt, BigInt>> points;
    for (BigInt q = 1;; ++q) {
        BigInt p = n1 * q + 1;
        if (p > p_max) {
            break;
        }
        points.emplace_back(p, q);
    }
    return points;
}

std::pair<std::uint64_t, Word> max_n_sigma(unsigned n) {
    if (n < 1) {
        throw std::domain_error("max_n_sigma: n must be >= 1");
    }
    std::uint64_t bound = n / 2;
    if (n % 2 == 0) {
        return {bound, Word(true, std::vector<BigInt>(n / 2, 1))};
    }
    return {bound, Word(false, std::vector<BigInt>(n / 2 + 1, 1))};
}

std::int32_t division_steps(std::uint64_t a, std::uint64_t b) {
    std::int32_t count = 0;
    while (b != 0) {
        std::uint64_t r = a % b;
        a = b;
        b = r;
        ++count;
    }
    return count;
}

namespace {

StepGrid make_grid(unsigned n, unsigned cap) {
    if (n < 2) {
        throw std::domain_error("step_grid: N must be >= 2");
    }
    if (n > cap) {
        throw std::length_error("step_grid: N = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
    }
    StepGrid grid;
    grid.n = n;
    grid.cells.resize(static_cast<std::size_t>(n) * n);
    return grid;
}

std::int32_t cell_value(unsigned p, unsigned q) {
    return p >= q ? division_steps(p, q) : division_steps(q, p);
}

}  // namespace

StepGrid step_grid(unsigned n, unsigned cap) {
    StepGrid grid = make_grid(n, cap);
    const auto size = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t p = 1; p <= size; ++p) {
        for (std::int64_t q = 1; q <= size; ++q) {
            grid.cells[static_cast<std::size_t>(p - 1) * n + (q - 1)] =
                cell_value(static_cast<unsigned>(p), static_cast<unsigned>(q));
        }
    }
    return grid;
}

StepGrid step_grid_serial(unsigned n, unsigned cap) {
    StepGrid grid = make_grid(n, cap);
    for (unsigned p = 1; p <= n; ++p) {
        for (unsigned q = 1; q <= n; ++q) {
            grid.cells[static_cast<std::size_t>(p - 1) * n + (q - 1)] = cell_value(p, q);
        }
    }
    return grid;
}

}  // namespace sigtau
