#include "sigtau/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace sigtau {

namespace {

void require_positive(const BigInt& v, const char* name) {
    if (v < 1) {
        throw std::domain_error(std::string(name) + " must be a positive integer");
    }
}

}  // namespace

BigInt gcd(const BigInt& a, const BigInt& b) {
    require_positive(a, "gcd: a");
    require_positive(b, "gcd: b");
    BigInt x = a;
    BigInt y = b;
    while (y != 0) {
        BigInt r = x % y;
        x = y;
        y = r;
    }
    return x;
}

Slope::Slope(BigInt q, BigInt p) : q_(std::move(q)), p_(std::move(p)) {
    require_positive(q_, "Slope: q");
    require_positive(p_, "Slope: p");
    if (gcd(q_, p_) != 1) {
        throw std::domain_error("Slope: q/p must be in lowest terms");
    }
}

Slope reduce(const BigInt& q, const BigInt& p) {
    require_positive(q, "reduce: q");
    require_positive(p, "reduce: p");
    BigInt g = gcd(q, p);
    return Slope(q / g, p / g);
}

EuclidTrace euclid_trace(const BigInt& a, const BigInt& b) {
    require_positive(a, "euclid_trace: a");
    require_positive(b, "euclid_trace: b");
    EuclidTrace trace;
    BigInt dividend = a;
    BigInt divisor = b;
    while (true) {
        BigInt quotient = dividend / divisor;
        BigInt remainder = dividend % divisor;
        trace.steps.push_back({dividend, divisor, quotient, remainder});
        if (remainder == 0) {
            break;
        }
        dividend = divisor;
        divisor = remainder;
    }
    return trace;
}

namespace {

BigInt parse_positive_decimal(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw std::invalid_argument("slope: missing integer in \"" + std::string(whole) + "\"");
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("slope: bad character '" + std::string(1, c) + "' in \"" +
                                        std::string(whole) + "\"");
        }
    }
    if (text.size() > 1 && text.front() == '0') {
        throw std::invalid_argument("slope: leading zero in \"" + std::string(whole) + "\"");
    }
    return BigInt(std::string(text));
}

}  // namespace

Slope parse_slope(std::string_view text, bool allow_reduce) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw std::invalid_argument("slope: expected \"q/p\", got \"" + std::string(text) + "\"");
    }
    BigInt q = parse_positive_decimal(text.substr(0, slash), text);
    BigInt p = parse_positive_decimal(text.substr(slash + 1), text);
    if (q == 0 || p == 0) {
        throw std::domain_error("slope: components must be nonzero in \"" + std::string(text) + "\"");
    }
    if (allow_reduce) {
        return reduce(q, p);
    }
    if (gcd(q, p) != 1) {
        throw std::domain_error("slope: \"" + std::string(text) + "\" is not in lowest terms");
    }
    return Slope(q, p);
}

std::string format_slope(const Slope& s) {
    return s.q().str() + "/" + s.p().str();
}

BigInt parse_positive_int(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("integer: empty input");
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("integer: bad character '" + std::string(1, c) +
                                        "' in \"" + std::string(text) + "\"");
        }
    }
    if (text.size() > 1 && text.front() == '0') {
        throw std::invalid_argument("integer: leading zero in \"" + std::string(text) + "\"");
    }
    BigInt value{std::string(text)};
    if (value == 0) {
        throw std::domain_error("integer: must be >= 1, got \"" + std::string(text) + "\"");
    }
    return value;
}

}  // namespace sigtau
