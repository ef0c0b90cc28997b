#pragma once

#include "apartition/multiset.hpp"
#include "apartition/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace apartition {

// The polynomial family attached to an A-partition function: f[n](k) counts
// the k-colored A-partitions of n. Built bottom-up from the divisor-sum
// recurrence
//
//     f[0] = 1,    f[n] = (x/n) * sum_{j=1..n} sigma_A(j) * f[n-j],
//
// which expands prod_{a in A} (1 - q^a)^(-x) as a power series in q.
// Once built, a sequence is immutable and safe to share across threads.
struct PolySequence {
    IntegerMultiset multiset;
    std::size_t upto = 0;
    std::vector<Polynomial> f;          // size upto + 1
    std::vector<std::uint64_t> sigma;   // sigma[j - 1] = sigma_A(j), 1 <= j <= upto
    bool degenerate = false;            // mu(1) == 0: f[1] = 0 and degrees collapse
};

PolySequence build_sequence(const IntegerMultiset& a, std::size_t upto);

// g[n] = sum_{j=1..n} sigma_A(j)/j * f[n-j]; identical to f[n]' as an exact
// polynomial identity. g[0] is the zero polynomial.
std::vector<Polynomial> derivative_sequence(const PolySequence& s);

// f[n+1] - f[n]. Throws std::out_of_range unless n + 1 <= s.upto.
Polynomial delta(const PolySequence& s, std::size_t n);

// x(x+1)...(x+n-1)/n!, the sequence for the singleton multiset {1}.
// Evaluates to binomial(x+n-1, n) at integers.
Polynomial closed_form_singleton(std::size_t n);

// Coefficients of the rising factorial x(x+1)...(x+n-1), lowest degree
// first: the unsigned Stirling numbers of the first kind c(n, i). Equals
// n! * closed_form_singleton(n).
std::vector<Integer> stirling_coefficients(std::size_t n);

// Exact integer f[n](k): the number of k-colored A-partitions of n.
// A non-integral value cannot occur; it is reported as std::logic_error
// since it would indicate an internal arithmetic fault.
Integer evaluate_colored(const PolySequence& s, std::size_t n, std::uint64_t k);

}  // namespace apartition
