#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace apartition {

// A finite or infinite multiset A of positive integers, represented by its
// multiplicity function mu. Finite multisets are stored explicitly; the
// infinite families are kept as rules and only materialized via truncate():
//
//   naturals     mu(a) = 1
//   plane        mu(a) = a
//   kregular:k   mu(a) = 1 iff k does not divide a   (k >= 2)
//   mcolor:m:S   mu(a) = m * mu_S(a)
//
// Values are immutable after construction and safe to share across threads.
class IntegerMultiset {
public:
    enum class Kind { Explicit, Naturals, Plane, KRegular, MColor };

    // Empty multiset (mu == 0 everywhere).
    IntegerMultiset() = default;

    // counts maps element -> multiplicity; zero multiplicities are dropped.
    // Throws std::invalid_argument if any element is 0.
    static IntegerMultiset from_counts(std::map<std::uint64_t, std::uint64_t> counts);
    static IntegerMultiset naturals();
    static IntegerMultiset plane();
    static IntegerMultiset k_regular(std::uint64_t k);  // k >= 2
    static IntegerMultiset m_color(std::uint64_t m, IntegerMultiset base);  // m >= 1

    Kind kind() const { return kind_; }
    bool finite() const;

    // mu(a); a >= 1.
    std::uint64_t multiplicity(std::uint64_t a) const;

    // Restricted divisor sum: sum over divisors d of i of d * mu(d).
    // Zero is possible whenever 1 is not in A; callers that rely on
    // positivity (the theorem verifiers) must check mu(1) themselves.
    std::uint64_t sigma(std::uint64_t i) const;

    // Explicit multiset of all elements <= bound with their multiplicities.
    // bound >= 1. Leaves sigma(i) unchanged for every i <= bound.
    IntegerMultiset truncate(std::uint64_t bound) const;

    // Canonical spec string, parse-compatible: explicit multisets print as a
    // sorted comma list with repetition ("1,2,2,3"), rules by name.
    std::string spec() const;

    // Grammar:  spec := list | "naturals" | "plane" | "kregular:" INT
    //                        | "mcolor:" INT ":" spec
    //           list := INT ("," INT)*
    // No whitespace. Throws std::invalid_argument with a character position.
    static IntegerMultiset parse(std::string_view text);

    // Explicit kind only: element -> multiplicity, sorted by element.
    const std::map<std::uint64_t, std::uint64_t>& counts() const;

    bool operator==(const IntegerMultiset& other) const;

private:
    Kind kind_ = Kind::Explicit;
    std::map<std::uint64_t, std::uint64_t> counts_;       // Explicit
    std::uint64_t param_ = 0;                             // k or m
    std::shared_ptr<const IntegerMultiset> base_;         // MColor
};

}  // namespace apartition
