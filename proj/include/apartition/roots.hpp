#pragma once

#include "apartition/multiset.hpp"
#include "apartition/polynomial.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace apartition {

struct RootRecord {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::complex<double> root;
    // |p(root)| relative to the coefficient magnitude at the root,
    // sum_i |c_i| |root|^i; <= 1e-8 after polishing.
    double residual = 0;
};

// All deg(p) complex roots of p, with multiplicity. Exact zero roots are
// deflated first; the rest run through Aberth-Ehrlich simultaneous iteration
// on the double-converted coefficients, then Newton polishing. Sorted by
// (re, im). Throws std::runtime_error naming the polynomial if the iteration
// does not converge.
std::vector<RootRecord> find_roots(const Polynomial& p);

// Roots of f[a] f[b] - f[a+b] for all 1 <= a <= a_max, 1 <= b <= b_max,
// flattened in (a, b, root) order.
std::vector<RootRecord> figure_dataset(const IntegerMultiset& a, std::uint64_t a_max,
                                       std::uint64_t b_max);

}  // namespace apartition
