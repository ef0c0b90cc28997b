#pragma once

#include "apartition/multiset.hpp"
#include "apartition/rational.hpp"

#include <cstdint>
#include <vector>

namespace apartition {

// Counting oracles for A-partitions, independent of the polynomial
// recurrence: integer-only series arithmetic, no rationals anywhere.
// Used as ground truth for f[n](k).

// Truncated power series with exact integer coefficients;
// coefficients[n] is the q^n coefficient, 0 <= n <= bound.
struct SeriesTruncation {
    std::vector<Integer> coefficients;

    std::size_t bound() const { return coefficients.size() - 1; }
};

// p_A(n) for 0 <= n <= n_max: expands prod_{a in A} (1-q^a)^(-mu(a)) by
// applying one geometric pass per copy of each element.
SeriesTruncation count_partitions_dp(const IntegerMultiset& a, std::size_t n_max);

// k-colored counts: same expansion with exponent k * mu(a) per element.
SeriesTruncation count_colored_series(const IntegerMultiset& a, std::uint64_t k,
                                      std::size_t n_max);

// Second, enumeration-based oracle for tiny n: walks every multiset of
// (part, copy index, color) triples in canonical order and tallies sums.
// Rejects n_max > 12 (std::invalid_argument) to bound the explosion.
SeriesTruncation enumerate_colored_brute(const IntegerMultiset& a, std::uint64_t k,
                                         std::size_t n_max);

}  // namespace apartition
