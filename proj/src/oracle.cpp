#include "apartition/oracle.hpp"

#include <stdexcept>

namespace apartition {

namespace {

// Multiplies the series by 1/(1-q^a), truncated.
void geometric_pass(std::vector<Integer>& c, std::uint64_t a) {
    for (std::size_t i = a; i < c.size(); ++i) c[i] += c[i - a];
}

SeriesTruncation expand(const IntegerMultiset& a, std::uint64_t exponent_factor,
                        std::size_t n_max) {
    std::vector<Integer> c(n_max + 1);
    c[0] = 1;
    if (n_max > 0) {
        IntegerMultiset finite = a.truncate(n_max);
        for (const auto& [elem, mu] : finite.counts()) {
            std::uint64_t passes;
            if (__builtin_mul_overflow(mu, exponent_factor, &passes))
                throw std::overflow_error("series exponent overflow");
            for (std::uint64_t p = 0; p < passes; ++p) geometric_pass(c, elem);
        }
    }
    return {std::move(c)};
}

}  // namespace

SeriesTruncation count_partitions_dp(const IntegerMultiset& a, std::size_t n_max) {
    return expand(a, 1, n_max);
}

SeriesTruncation count_colored_series(const IntegerMultiset& a, std::uint64_t k,
                                      std::size_t n_max) {
    if (k == 0) throw std::invalid_argument("colored counting requires k >= 1");
    return expand(a, k, n_max);
}

namespace {

void enumerate(const std::vector<std::uint64_t>& parts, std::size_t idx, std::uint64_t sum,
               std::uint64_t n_max, std::vector<Integer>& tally) {
    tally[sum] += 1;
    for (std::size_t i = idx; i < parts.size(); ++i)
        if (sum + parts[i] <= n_max) enumerate(parts, i, sum + parts[i], n_max, tally);
}

}  // namespace

SeriesTruncation enumerate_colored_brute(const IntegerMultiset& a, std::uint64_t k,
                                         std::size_t n_max) {
    if (n_max > 12) throw std::invalid_argument("brute enumeration is capped at n_max <= 12");
    if (k == 0) throw std::invalid_argument("colored counting requires k >= 1");
    std::vector<Integer> tally(n_max + 1);
    if (n_max == 0) {
        tally[0] = 1;
        return {std::move(tally)};
    }
    // One entry per (part, copy, color) species; only the part value matters
    // for the sum, distinct species stay distinct.
    std::vector<std::uint64_t> parts;
    IntegerMultiset finite = a.truncate(n_max);
    for (const auto& [elem, mu] : finite.counts())
        for (std::uint64_t copy = 0; copy < mu; ++copy)
            for (std::uint64_t color = 0; color < k; ++color) parts.push_back(elem);
    enumerate(parts, 0, 0, n_max, tally);
    return {std::move(tally)};
}

}  // namespace apartition
