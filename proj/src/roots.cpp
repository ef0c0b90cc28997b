#include "apartition/roots.hpp"

#include "apartition/bo_verify.hpp"
#include "apartition/partition_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace apartition {

namespace {

using Complex = std::complex<double>;

// ~64 correct mantissa bits: the nearest double plus the residue it misses.
long double to_long_double(const Integer& v) {
    double hi = v.get_d();
    Integer rest = v - Integer(hi);
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

struct ConvertedPoly {
    std::vector<double> d;         // drives the Aberth iteration
    std::vector<long double> ld;   // extended precision for the final polish
};

// Rational coefficients scaled by their common denominator, then normalized
// by the largest magnitude. Scaling keeps the roots and loses no relative
// precision per coefficient.
ConvertedPoly convert(const std::vector<Rational>& coef) {
    Integer den(1);
    for (const auto& c : coef) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ConvertedPoly out;
    out.d.resize(coef.size());
    out.ld.resize(coef.size());
    long double biggest = 0;
    for (std::size_t i = 0; i < coef.size(); ++i) {
        Integer scaled = coef[i].get_num() * (den / coef[i].get_den());
        out.ld[i] = to_long_double(scaled);
        biggest = std::max(biggest, fabsl(out.ld[i]));
    }
    for (std::size_t i = 0; i < coef.size(); ++i) {
        out.ld[i] /= biggest;
        out.d[i] = static_cast<double>(out.ld[i]);
    }
    return out;
}

Complex eval(const std::vector<double>& c, Complex z, Complex* deriv = nullptr) {
    Complex p = 0, d = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
        d = d * z + p;
        p = p * z + c[k];
    }
    if (deriv) *deriv = d;
    return p;
}

double coefficient_scale(const std::vector<double>& c, double r) {
    double s = 0, pw = 1;
    for (double v : c) {
        s += std::fabs(v) * pw;
        pw *= r;
    }
    return s;
}

// Initial guesses from the Newton polygon of (i, log|c_i|): each upper-hull
// edge of slope -log r contributes its horizontal span worth of starting
// points on the circle of radius r. Handles the wide dynamic range the
// difference polynomials have without any conditioning heuristics.
std::vector<Complex> initial_guesses(const std::vector<double>& c) {
    std::size_t n = c.size() - 1;
    std::vector<std::pair<std::size_t, double>> pts;
    for (std::size_t i = 0; i <= n; ++i)
        if (c[i] != 0) pts.emplace_back(i, std::log(std::fabs(c[i])));
    std::vector<std::pair<std::size_t, double>> hull;  // upper convex hull
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            double cross = (static_cast<double>(b.first - a.first)) * (p.second - a.second) -
                           (static_cast<double>(p.first - a.first)) * (b.second - a.second);
            if (cross >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<Complex> z;
    z.reserve(n);
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        std::size_t span = hull[e + 1].first - hull[e].first;
        double r = std::exp((hull[e].second - hull[e + 1].second) /
                            static_cast<double>(span));
        if (!std::isfinite(r) || r <= 0) r = 1.0;
        for (std::size_t k = 0; k < span; ++k) {
            double theta = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(span) +
                           0.7 + 0.3 * static_cast<double>(e);
            z.push_back(std::polar(r, theta));
        }
    }
    while (z.size() < n) z.push_back(std::polar(1.0, 0.7 * static_cast<double>(z.size())));
    return z;
}

std::vector<Complex> aberth(const std::vector<double>& c, const Polynomial& context) {
    std::size_t n = c.size() - 1;
    std::vector<Complex> z = initial_guesses(c);
    std::vector<bool> frozen(n, false);

    // A root is done when further correction is below double resolution or
    // the residual is at the evaluation noise floor.
    const double eps = std::numeric_limits<double>::epsilon();
    auto noise_floor = [&](Complex at) { return 8 * eps * coefficient_scale(c, std::abs(at)); };

    const int max_iter = 400;
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_frozen = true;
        for (std::size_t k = 0; k < n; ++k) {
            if (frozen[k]) continue;
            Complex dp;
            Complex p = eval(c, z[k], &dp);
            if (std::abs(p) <= noise_floor(z[k])) {
                frozen[k] = true;
                continue;
            }
            all_frozen = false;
            if (dp == Complex(0)) {
                z[k] += Complex(1e-8, 1e-8);
                continue;
            }
            Complex w = p / dp;
            Complex repulsion = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            Complex denom = 1.0 - w * repulsion;
            if (denom == Complex(0)) {
                z[k] += Complex(1e-8, -1e-8);
                continue;
            }
            Complex delta = w / denom;
            z[k] -= delta;
            if (std::abs(delta) <= 2 * eps * (1 + std::abs(z[k]))) frozen[k] = true;
        }
        if (all_frozen) return z;
    }
    // The iteration can stall cycling in the last ulps; accept if every root
    // already sits at a solid backward error.
    for (std::size_t k = 0; k < n; ++k) {
        double scale = coefficient_scale(c, std::max(1.0, std::abs(z[k])));
        if (std::abs(eval(c, z[k])) > 1e-10 * scale)
            throw std::runtime_error("root finding did not converge for polynomial " +
                                     context.str());
    }
    return z;
}

void newton_polish(const std::vector<long double>& c, Complex& z) {
    std::complex<long double> zl(z.real(), z.imag());
    for (int i = 0; i < 4; ++i) {
        std::complex<long double> p = 0, d = 0;
        for (std::size_t k = c.size(); k-- > 0;) {
            d = d * zl + p;
            p = p * zl + c[k];
        }
        if (!(std::abs(d) > 0)) break;
        std::complex<long double> step = p / d;
        if (!std::isfinite(static_cast<double>(step.real())) ||
            !std::isfinite(static_cast<double>(step.imag())))
            break;
        zl -= step;
    }
    z = Complex(static_cast<double>(zl.real()), static_cast<double>(zl.imag()));
}

}  // namespace

std::vector<RootRecord> find_roots(const Polynomial& p) {
    if (p.degree() < 1) throw std::invalid_argument("find_roots requires degree >= 1");

    // Exact deflation of the zero roots: strip low-order zero coefficients.
    const auto& coef = p.coefficients();
    std::size_t shift = 0;
    while (shift < coef.size() && coef[shift] == 0) ++shift;

    std::vector<RootRecord> records;
    for (std::size_t i = 0; i < shift; ++i) records.push_back({0, 0, Complex(0, 0), 0.0});

    if (coef.size() - shift > 1) {
        ConvertedPoly c = convert(std::vector<Rational>(coef.begin() + shift, coef.end()));
        auto zs = aberth(c.d, p);
        for (auto& z : zs) {
            newton_polish(c.ld, z);
            double scale = coefficient_scale(c.d, std::max(1.0, std::abs(z)));
            double residual = std::abs(eval(c.d, z)) / scale;
            records.push_back({0, 0, z, residual});
        }
    }

    std::sort(records.begin(), records.end(), [](const RootRecord& l, const RootRecord& r) {
        if (l.root.real() != r.root.real()) return l.root.real() < r.root.real();
        return l.root.imag() < r.root.imag();
    });
    return records;
}

std::vector<RootRecord> figure_dataset(const IntegerMultiset& a, std::uint64_t a_max,
                                       std::uint64_t b_max) {
    if (a_max < 1 || b_max < 1) throw std::invalid_argument("figure bounds must be >= 1");
    PolySequence s = build_sequence(a, a_max + b_max);
    std::vector<RootRecord> out;
    for (std::uint64_t i = 1; i <= a_max; ++i)
        for (std::uint64_t j = 1; j <= b_max; ++j) {
            Polynomial diff = difference_poly(s, i, j);
            std::vector<RootRecord> roots;
            try {
                roots = find_roots(diff);
            } catch (const std::runtime_error& e) {
                throw std::runtime_error("figure entry a=" + std::to_string(i) +
                                         " b=" + std::to_string(j) + ": " + e.what());
            }
            for (auto& r : roots) {
                r.a = i;
                r.b = j;
                out.push_back(r);
            }
        }
    return out;
}

}  // namespace apartition
