#include "apartition/bo_verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace apartition {

Polynomial difference_poly(const PolySequence& s, std::uint64_t a, std::uint64_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("difference_poly requires a, b >= 1");
    if (a + b > s.upto) throw std::out_of_range("difference_poly: a+b exceeds the built range");
    return s.f[a] * s.f[b] - s.f[a + b];
}

BOReport check_bo(const PolySequence& s, std::uint64_t a, std::uint64_t b, const Rational& x) {
    if (a < 1 || b < 1) throw std::invalid_argument("check_bo requires a, b >= 1");
    if (a + b > s.upto) throw std::out_of_range("check_bo: a+b exceeds the built range");
    BOReport r;
    r.a = a;
    r.b = b;
    r.x = x;
    r.difference = s.f[a](x) * s.f[b](x) - s.f[a + b](x);
    int sg = sign(r.difference);
    r.strict = sg > 0;
    r.equality = sg == 0;
    return r;
}

namespace {

std::vector<std::vector<std::uint64_t>> divisor_table(std::uint64_t up) {
    std::vector<std::vector<std::uint64_t>> div(up + 1);
    for (std::uint64_t d = 1; d <= up; ++d)
        for (std::uint64_t j = d; j <= up; j += d) div[j].push_back(d);
    return div;
}

// Scalar twin of build_sequence at a fixed x; what the exhaustive sweeps run
// per instance instead of a full polynomial build.
void value_sequence(const std::vector<std::uint64_t>& sigma, const Rational& x,
                    std::vector<Rational>& out) {
    std::size_t s = sigma.size();
    out.assign(s + 1, Rational(0));
    out[0] = 1;
    Rational acc;
    for (std::size_t n = 1; n <= s; ++n) {
        acc = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            if (sigma[j - 1] == 0) continue;
            acc += out[n - j] * static_cast<unsigned long>(sigma[j - 1]);
        }
        acc *= x;
        out[n] = acc / static_cast<unsigned long>(n);
    }
}

struct RawInstance {
    std::uint64_t sum = 0;    // a + b
    std::uint64_t order = 0;  // enumeration index of the multiset in its group
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    Rational difference;
    std::string spec;
};

struct ChunkResult {
    std::uint64_t checked = 0;
    std::vector<RawInstance> violations;
    std::vector<RawInstance> equalities;
};

template <typename Body>
void run_partitioned(std::uint64_t total, unsigned workers, std::vector<ChunkResult>& out,
                     const Body& body) {
    auto n = static_cast<unsigned>(
        std::min<std::uint64_t>(std::max(1u, workers), std::max<std::uint64_t>(1, total)));
    out.assign(n, {});
    if (n == 1) {
        body(0, total, out[0]);
        return;
    }
    std::uint64_t chunk = (total + n - 1) / n;
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(n);
    for (unsigned i = 0; i < n; ++i) {
        std::uint64_t lo = i * chunk;
        std::uint64_t hi = std::min(total, lo + chunk);
        threads.emplace_back([&, i, lo, hi] {
            try {
                body(lo, hi, out[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// Merges chunk results into a summary with instances in canonical order,
// independent of enumeration and worker count. The theorem sweeps run at a
// single x, stamped here.
SweepSummary finalize(std::string family, const Rational& x,
                      std::vector<std::vector<ChunkResult>>&& groups) {
    SweepSummary summary;
    summary.family = std::move(family);
    std::vector<RawInstance> violations, equalities;
    for (auto& group : groups)
        for (auto& chunk : group) {
            summary.checked += chunk.checked;
            std::move(chunk.violations.begin(), chunk.violations.end(),
                      std::back_inserter(violations));
            std::move(chunk.equalities.begin(), chunk.equalities.end(),
                      std::back_inserter(equalities));
        }
    auto key_less = [](const RawInstance& l, const RawInstance& r) {
        return std::tie(l.sum, l.spec, l.a, l.b) < std::tie(r.sum, r.spec, r.a, r.b);
    };
    std::sort(violations.begin(), violations.end(), key_less);
    std::sort(equalities.begin(), equalities.end(), key_less);
    auto emit = [&x](std::vector<RawInstance>& raw, std::vector<SweepInstance>& out) {
        out.reserve(raw.size());
        for (auto& inst : raw)
            out.push_back({std::move(inst.spec), inst.a, inst.b, x, std::move(inst.difference)});
    };
    emit(violations, summary.violations);
    emit(equalities, summary.equalities);
    return summary;
}

}  // namespace

SweepSummary sweep_sets_at_3(std::uint64_t a_max, std::uint64_t b_max, std::uint64_t sum_max,
                             const SweepOptions& opt) {
    if (a_max < 1 || b_max < 1) throw std::invalid_argument("sweep requires a_max, b_max >= 1");
    std::uint64_t s_hi = std::min(a_max + b_max, sum_max);
    if (!opt.deep && s_hi > 16)
        throw std::invalid_argument(
            "resource guard exceeded: set sweep needs max a+b <= 16 (got " +
            std::to_string(s_hi) + "); rerun with deep enabled");

    const Rational x(3);
    auto divisors = divisor_table(s_hi);
    std::vector<std::vector<ChunkResult>> groups;
    for (std::uint64_t s = 2; s <= s_hi; ++s) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // (a, b), b <= a
        for (std::uint64_t b = 1; b <= std::min(b_max, s / 2); ++b) {
            std::uint64_t a = s - b;
            if (a <= a_max) pairs.emplace_back(a, b);
        }
        if (pairs.empty()) continue;
        std::uint64_t masks = std::uint64_t{1} << (s - 1);  // elements 2..s free, 1 fixed
        std::vector<ChunkResult> chunks;
        run_partitioned(masks, opt.workers, chunks,
                        [&](std::uint64_t lo, std::uint64_t hi, ChunkResult& res) {
            std::vector<std::uint64_t> mu(s + 1, 0), sigma(s);
            std::vector<Rational> vals;
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                if (opt.cancel && opt.cancel->load(std::memory_order_relaxed)) return;
                mu[1] = 1;
                for (std::uint64_t e = 2; e <= s; ++e) mu[e] = (mask >> (e - 2)) & 1;
                for (std::uint64_t j = 1; j <= s; ++j) {
                    std::uint64_t sum = 0;
                    for (std::uint64_t d : divisors[j]) sum += d * mu[d];
                    sigma[j - 1] = sum;
                }
                value_sequence(sigma, x, vals);
                for (auto [a, b] : pairs) {
                    Rational diff = vals[a] * vals[b] - vals[s];
                    ++res.checked;
                    int sg = sign(diff);
                    if (sg > 0) continue;
                    std::string spec = "1";
                    for (std::uint64_t e = 2; e <= s; ++e)
                        if (mu[e]) spec += "," + std::to_string(e);
                    RawInstance inst{s, mask, a, b, std::move(diff), std::move(spec)};
                    (sg == 0 ? res.equalities : res.violations).push_back(std::move(inst));
                }
            }
        });
        groups.push_back(std::move(chunks));
        if (opt.cancel && opt.cancel->load(std::memory_order_relaxed)) break;
    }
    SweepSummary summary =
        finalize("sets x=3 a<=" + std::to_string(a_max) + " b<=" + std::to_string(b_max) +
                     " a+b<=" + std::to_string(s_hi),
                 x, std::move(groups));
    summary.complete = !(opt.cancel && opt.cancel->load(std::memory_order_relaxed));
    return summary;
}

SweepSummary sweep_multisets_at_5(std::uint64_t sum_max, const SweepOptions& opt) {
    if (sum_max < 2) throw std::invalid_argument("sweep requires sum_max >= 2");
    if (!opt.deep && sum_max > 9)
        throw std::invalid_argument(
            "resource guard exceeded: multiset sweep needs sum_max <= 9 (got " +
            std::to_string(sum_max) + "); rerun with deep enabled");

    const Rational x(5);
    auto divisors = divisor_table(sum_max);
    std::vector<std::vector<ChunkResult>> groups;
    for (std::uint64_t s = 2; s <= sum_max; ++s) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
        for (std::uint64_t b = 1; b <= s / 2; ++b) pairs.emplace_back(s - b, b);
        // Mixed-radix index over (mu_2, ..., mu_s), mu_e in 0..e.
        std::uint64_t total = 1;
        for (std::uint64_t e = 2; e <= s; ++e) total *= e + 1;
        std::vector<ChunkResult> chunks;
        run_partitioned(total, opt.workers, chunks,
                        [&](std::uint64_t lo, std::uint64_t hi, ChunkResult& res) {
            std::vector<std::uint64_t> mu(s + 1, 0), sigma(s);
            std::vector<Rational> vals;
            for (std::uint64_t index = lo; index < hi; ++index) {
                if (opt.cancel && opt.cancel->load(std::memory_order_relaxed)) return;
                std::uint64_t rest = index;
                mu[1] = 1;
                for (std::uint64_t e = 2; e <= s; ++e) {
                    mu[e] = rest % (e + 1);
                    rest /= e + 1;
                }
                for (std::uint64_t j = 1; j <= s; ++j) {
                    std::uint64_t sum = 0;
                    for (std::uint64_t d : divisors[j]) sum += d * mu[d];
                    sigma[j - 1] = sum;
                }
                value_sequence(sigma, x, vals);
                for (auto [a, b] : pairs) {
                    Rational diff = vals[a] * vals[b] - vals[s];
                    ++res.checked;
                    int sg = sign(diff);
                    if (sg > 0) continue;
                    std::string spec = "1";
                    for (std::uint64_t e = 2; e <= s; ++e)
                        for (std::uint64_t c = 0; c < mu[e]; ++c) spec += "," + std::to_string(e);
                    RawInstance inst{s, index, a, b, std::move(diff), std::move(spec)};
                    (sg == 0 ? res.equalities : res.violations).push_back(std::move(inst));
                }
            }
        });
        groups.push_back(std::move(chunks));
        if (opt.cancel && opt.cancel->load(std::memory_order_relaxed)) break;
    }
    SweepSummary summary =
        finalize("multisets x=5 mu(1)=1 mu(j)<=j a+b<=" + std::to_string(sum_max), x,
                 std::move(groups));
    summary.complete = !(opt.cancel && opt.cancel->load(std::memory_order_relaxed));
    return summary;
}

SweepSummary sweep_pairs(const PolySequence& s, const std::vector<Rational>& x_grid) {
    if (s.degenerate)
        throw std::domain_error("pair sweep requires 1 in A (mu(1) >= 1)");
    SweepSummary summary;
    std::string grid_text;
    for (const Rational& x : x_grid) {
        if (!grid_text.empty()) grid_text += ",";
        grid_text += pretty_string(x);
    }
    summary.family = "pairs multiset=" + s.multiset.spec() + " upto=" + std::to_string(s.upto) +
                     " x=" + grid_text;
    std::string spec = s.multiset.spec();
    for (std::uint64_t a = 1; a + 1 <= s.upto; ++a)
        for (std::uint64_t b = 1; b <= a && a + b <= s.upto; ++b)
            for (const Rational& x : x_grid) {
                BOReport r = check_bo(s, a, b, x);
                ++summary.checked;
                if (r.strict) continue;
                SweepInstance inst{spec, a, b, x, r.difference};
                (r.equality ? summary.equalities : summary.violations).push_back(std::move(inst));
            }
    return summary;
}

bool matches_expected_sets3(const SweepSummary& summary) {
    if (!summary.violations.empty()) return false;
    for (const auto& inst : summary.equalities) {
        if (inst.a != 1 || inst.b != 1) return false;
        if (IntegerMultiset::parse(inst.multiset).multiplicity(2) == 0) return false;
    }
    return true;
}

bool matches_expected_multisets5(const SweepSummary& summary) {
    if (!summary.violations.empty()) return false;
    for (const auto& inst : summary.equalities) {
        if (inst.a != 1 || inst.b != 1) return false;
        if (IntegerMultiset::parse(inst.multiset).multiplicity(2) != 2) return false;
    }
    return true;
}

Rational quasi_poly_12_at_3(std::uint64_t n) {
    Rational v(static_cast<unsigned long>(n));
    Rational n2 = v * v, n3 = n2 * v, n4 = n3 * v, n5 = n4 * v;
    if (n % 2 == 0)
        return n5 / 960u + n4 * 3u / 128u + n3 * 19u / 96u + n2 * 25u / 32u + v * 173u / 120u + 1u;
    return n5 / 960u + n4 * 3u / 128u + n3 * 19u / 96u + n2 * 49u / 64u + v * 1249u / 960u +
           make_rational(91, 128);
}

AuxFunction aux_function_from_name(std::string_view name) {
    if (name == "Psi3") return AuxFunction::Psi3;
    if (name == "psi3") return AuxFunction::psi3;
    if (name == "Psi4") return AuxFunction::Psi4;
    if (name == "psi4") return AuxFunction::psi4;
    throw std::invalid_argument("unknown function '" + std::string(name) +
                                "' (expected Psi3, psi3, Psi4 or psi4)");
}

const char* aux_function_name(AuxFunction f) {
    switch (f) {
        case AuxFunction::Psi3: return "Psi3";
        case AuxFunction::psi3: return "psi3";
        case AuxFunction::Psi4: return "Psi4";
        case AuxFunction::psi4: return "psi4";
    }
    return "?";
}

double aux_function_value(AuxFunction f, double x) {
    switch (f) {
        case AuxFunction::Psi3: return (x + 1) * (x + 2) - 4 * x * (1 + std::log(2 * x));
        case AuxFunction::psi3: return (x + 1) * (x + 2) - 2 * x * (1 + std::log(2 * x));
        case AuxFunction::Psi4:
            return (x + 1) * (x + 2) * (x + 3) * (x + 4) - 48 * x * (4 * x - 1);
        case AuxFunction::psi4:
            return (x + 1) * (x + 2) * (x + 3) * (x + 4) - 96 * x * x + 24 * x;
    }
    return 0;
}

AuxReport check_aux_positivity(AuxFunction which, const Rational& lo, const Rational& hi,
                               const Rational& step) {
    if (!(lo < hi)) throw std::invalid_argument("aux grid requires lo < hi");
    if (!(step > 0)) throw std::invalid_argument("aux grid requires step > 0");
    AuxReport rep;
    rep.which = which;
    rep.lo = lo;
    rep.hi = hi;
    rep.step = step;
    bool strict = which == AuxFunction::psi3 || which == AuxFunction::psi4;

    auto probe = [&](const Rational& t) {
        double xd = t.get_d();
        double v = aux_function_value(which, xd);
        ++rep.points;
        if (!std::isfinite(v)) {
            rep.numeric_error = true;
            rep.min_value = v;
            rep.argmin = xd;
            return false;
        }
        if (rep.points == 1 || v < rep.min_value) {
            rep.min_value = v;
            rep.argmin = xd;
        }
        return true;
    };

    Rational t = lo;
    while (t <= hi) {
        if (!probe(t)) break;
        t += step;
    }
    if (!rep.numeric_error && t - step != hi) probe(hi);

    if (!rep.numeric_error) {
        rep.pass = strict ? rep.min_value > 0 : rep.min_value >= 0;
        rep.within_slack = std::fabs(rep.min_value) <= 1e-9;
    }
    return rep;
}

MonotonicityReport check_monotonicity(const PolySequence& s, const std::vector<Rational>& x_grid) {
    if (s.degenerate)
        throw std::domain_error("monotonicity check requires 1 in A (mu(1) >= 1)");
    for (const Rational& x : x_grid)
        if (x < 1) throw std::invalid_argument("monotonicity grid values must be >= 1");

    MonotonicityReport rep;
    auto g = derivative_sequence(s);
    std::vector<Rational> fv(s.upto + 1), gv(s.upto + 1);
    for (const Rational& x : x_grid) {
        for (std::size_t n = 0; n <= s.upto; ++n) {
            fv[n] = s.f[n](x);
            gv[n] = g[n](x);
        }
        bool strict_zone = x > 1;
        for (std::size_t n = 0; n + 1 <= s.upto; ++n) {
            ++rep.comparisons;
            bool ok = strict_zone ? fv[n] < fv[n + 1] : fv[n] <= fv[n + 1];
            if (!ok)
                rep.failures.push_back("f[" + std::to_string(n) + "](" + pretty_string(x) +
                                       ") vs f[" + std::to_string(n + 1) + "]: " +
                                       pretty_string(fv[n]) + " vs " + pretty_string(fv[n + 1]));
        }
        for (std::size_t n = 1; n <= s.upto; ++n) {
            ++rep.comparisons;
            if (gv[n] < 1)
                rep.failures.push_back("f'[" + std::to_string(n) + "](" + pretty_string(x) +
                                       ") = " + pretty_string(gv[n]) + " < 1");
        }
        for (std::size_t n = 1; n + 1 <= s.upto; ++n) {
            ++rep.comparisons;
            if (!(gv[n] < gv[n + 1]))
                rep.failures.push_back("f'[" + std::to_string(n) + "](" + pretty_string(x) +
                                       ") vs f'[" + std::to_string(n + 1) + "]: " +
                                       pretty_string(gv[n]) + " vs " + pretty_string(gv[n + 1]));
        }
    }
    return rep;
}

}  // namespace apartition
