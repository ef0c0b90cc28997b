#pragma once

#include "apartition/partition_poly.hpp"

#include <atomic>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace apartition {

// Verification of the Bessenrodt-Ono-type inequality
//
//     f[a](x) * f[b](x) > f[a+b](x)
//
// over finite families, with exact classification of every instance.

// Exact sign classification of f[a](x) f[b](x) - f[a+b](x) at one point.
// Exactly one of {strict, equality, violated()} holds.
struct BOReport {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    Rational x;
    Rational difference;    // f[a](x) f[b](x) - f[a+b](x)
    bool strict = false;    // difference > 0
    bool equality = false;  // difference == 0

    bool violated() const { return !strict && !equality; }
};

// f[a] * f[b] - f[a+b], exact. Requires a, b >= 1 and a + b <= s.upto.
Polynomial difference_poly(const PolySequence& s, std::uint64_t a, std::uint64_t b);

BOReport check_bo(const PolySequence& s, std::uint64_t a, std::uint64_t b, const Rational& x);

struct SweepInstance {
    std::string multiset;  // canonical spec
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    Rational x;
    Rational difference;
};

// Outcome of an exhaustive family verification. Only the non-strict
// instances are listed; checked counts everything.
struct SweepSummary {
    std::string family;
    std::uint64_t checked = 0;
    std::vector<SweepInstance> violations;  // difference < 0
    std::vector<SweepInstance> equalities;  // difference == 0
    bool complete = true;                   // false after a cancelled run
};

struct SweepOptions {
    unsigned workers = 1;
    bool deep = false;  // lifts the desk-scale guards; expect hours at full range
    // When set, workers stop at the next instance boundary and the partial
    // summary comes back marked incomplete.
    const std::atomic<bool>* cancel = nullptr;
};

constexpr std::uint64_t kNoSumCap = ~std::uint64_t{0};

// For every pair 1 <= b <= a with a <= a_max, b <= b_max and a + b <= sum_max,
// classifies check_bo at x = 3 for every subset A of {1, ..., a+b} with 1 in A.
// Elements above a+b cannot occur in a partition of a, b or a+b, so the
// subset universe legitimately stops there.
// Desk guard unless deep: the effective max sum min(a_max + b_max, sum_max)
// must be <= 16 (subset universes up to 2^15). Expected outcome: no
// violations, equalities exactly at (a, b) = (1, 1) with 2 in A.
SweepSummary sweep_sets_at_3(std::uint64_t a_max, std::uint64_t b_max,
                             std::uint64_t sum_max = kNoSumCap, const SweepOptions& opt = {});

// Same sweep at x = 5 over every multiset on {1, ..., a+b} with mu(1) = 1 and
// mu(j) <= j, for all pairs a >= b >= 1 with a + b <= sum_max.
// Desk guard unless deep: sum_max <= 9. Expected outcome: no violations,
// equalities exactly at (1, 1) with mu(2) = 2.
SweepSummary sweep_multisets_at_5(std::uint64_t sum_max, const SweepOptions& opt = {});

// Classifies check_bo for every pair b <= a with a + b <= s.upto at each grid
// point. Grid values must be exact rationals; the sequence must not be
// degenerate (mu(1) >= 1).
SweepSummary sweep_pairs(const PolySequence& s, const std::vector<Rational>& x_grid);

// True when a summary matches the expected theorem pattern: zero violations
// and every equality sitting exactly where the equality case lives.
bool matches_expected_sets3(const SweepSummary& summary);
bool matches_expected_multisets5(const SweepSummary& summary);

// f_{{1,2},n}(3) in closed form: a quasi-polynomial of degree 5 whose
// coefficients depend on n mod 2. Exact.
Rational quasi_poly_12_at_3(std::uint64_t n);

// Scalar companions of the inductive bounds: positivity is spot-checked on a
// grid in double precision (they involve ln, so no exact route exists).
enum class AuxFunction {
    Psi3,  // (x+1)(x+2) - 4x(1 + ln 2x),      expected >= 0 for x >= 15
    psi3,  // (x+1)(x+2) - 2x(1 + ln 2x),      expected >  0 for x >= 3
    Psi4,  // (x+1)(x+2)(x+3)(x+4) - 48x(4x-1), expected >= 0 for x >= 9
    psi4,  // (x+1)(x+2)(x+3)(x+4) - 96x^2+24x, expected >  0 for x > 0
};

AuxFunction aux_function_from_name(std::string_view name);
const char* aux_function_name(AuxFunction f);
double aux_function_value(AuxFunction f, double x);

struct AuxReport {
    AuxFunction which = AuxFunction::Psi3;
    Rational lo, hi, step;
    std::uint64_t points = 0;
    double min_value = 0;
    double argmin = 0;
    bool pass = false;          // min >= 0 (Psi*) or min > 0 (psi*)
    bool within_slack = false;  // |min| <= 1e-9: verdict numerically marginal
    bool numeric_error = false; // NaN or overflow on the grid
};

// Evaluates the function at lo, lo+step, ... (hi included) in double
// precision and reports the minimum. Grid points are exact rationals, so
// there is no stepping drift. Spot-check, not a proof.
AuxReport check_aux_positivity(AuxFunction which, const Rational& lo, const Rational& hi,
                               const Rational& step);

struct MonotonicityReport {
    std::uint64_t comparisons = 0;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
};

// Exact verification, at each grid point x >= 1, of
//   f[n](x) <= f[n+1](x)          (strict when x > 1), n >= 0,
//   1 <= g[n](x) < g[n+1](x)      for the derivative family, n >= 1.
// Throws std::domain_error for degenerate sequences (mu(1) = 0).
MonotonicityReport check_monotonicity(const PolySequence& s, const std::vector<Rational>& x_grid);

}  // namespace apartition
