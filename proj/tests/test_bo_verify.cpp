#include "apartition/bo_verify.hpp"

#include "apartition/serialize.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace apartition;
using apartition::testing::ms;
using apartition::testing::poly;
using apartition::testing::rat;

TEST_CASE("difference polynomials match the closed forms") {
    auto s12 = build_sequence(ms("1,2"), 3);
    CHECK(difference_poly(s12, 1, 1) == poly({rat(0), rat(-3, 2), rat(1, 2)}));  // x(x-3)/2
    CHECK(difference_poly(s12, 2, 1) ==
          poly({rat(0), rat(-1, 3), rat(0), rat(1, 3)}));  // x(x-1)(x+1)/3, 3 not in A

    auto s122 = build_sequence(ms("1,2,2"), 2);
    CHECK(difference_poly(s122, 1, 1) == poly({rat(0), rat(-5, 2), rat(1, 2)}));  // x(x-5)/2

    auto s1333 = build_sequence(ms("1,3,3,3"), 3);
    CHECK(difference_poly(s1333, 2, 1) ==
          poly({rat(0), rat(-10, 3), rat(0), rat(1, 3)}));  // x(x^2-10)/3

    auto nat = build_sequence(ms("naturals"), 7);
    for (std::uint64_t a = 1; a <= 4; ++a)
        for (std::uint64_t b = 1; a + b <= 7; ++b)
            CHECK(difference_poly(nat, a, b) == difference_poly(nat, b, a));

    CHECK_THROWS_AS(difference_poly(s12, 2, 2), std::out_of_range);
    CHECK_THROWS_AS(difference_poly(s12, 0, 1), std::invalid_argument);
}

TEST_CASE("check_bo classification is the sign of the difference polynomial") {
    auto s12 = build_sequence(ms("1,2"), 2);
    auto r = check_bo(s12, 1, 1, rat(3));
    CHECK(r.equality);
    CHECK_FALSE(r.strict);
    CHECK_FALSE(r.violated());
    CHECK(r.difference == 0);

    auto singleton = build_sequence(ms("1"), 2);
    auto r2 = check_bo(singleton, 1, 1, rat(3));
    CHECK(r2.strict);
    CHECK(r2.difference == 3);

    auto s122 = build_sequence(ms("1,2,2"), 2);
    CHECK(check_bo(s122, 1, 1, rat(5)).equality);

    // below the threshold the inequality genuinely fails
    auto r3 = check_bo(s12, 1, 1, rat(2));
    CHECK(r3.violated());
    CHECK(r3.difference == -1);

    // the scalar route equals evaluating the difference polynomial
    auto nat = build_sequence(ms("naturals"), 6);
    for (std::uint64_t a = 1; a <= 3; ++a)
        for (std::uint64_t b = 1; b <= a; ++b)
            for (const Rational& x : {rat(3), rat(7, 2), rat(10)})
                CHECK(check_bo(nat, a, b, x).difference == difference_poly(nat, a, b)(x));
}

TEST_CASE("base values behind the x=3 cases") {
    auto f3_at_3 = [](const char* spec) {
        return evaluate_colored(build_sequence(ms(spec), 3), 3, 3);
    };
    CHECK(f3_at_3("1,2,3") == 22);
    CHECK(f3_at_3("1,2") == 19);
    CHECK(f3_at_3("1,3") == 13);
    CHECK(f3_at_3("1") == 10);

    auto f2_at_5 = [](const char* spec) {
        return evaluate_colored(build_sequence(ms(spec), 2), 2, 5);
    };
    CHECK(f2_at_5("1,2,2") == 25);
    CHECK(f2_at_5("1,2") == 20);
    CHECK(f2_at_5("1") == 15);
}

TEST_CASE("set sweep at x=3: tiny ranges") {
    auto summary = sweep_sets_at_3(1, 1);
    CHECK(summary.checked == 2);  // subsets {1} and {1,2}
    CHECK(summary.violations.empty());
    REQUIRE(summary.equalities.size() == 1);
    CHECK(summary.equalities[0].multiset == "1,2");
    CHECK(summary.equalities[0].a == 1);
    CHECK(summary.equalities[0].b == 1);
    CHECK(summary.equalities[0].x == 3);
    CHECK(summary.equalities[0].difference == 0);
    CHECK(matches_expected_sets3(summary));

    // pairs (1,1), (2,1), (3,1) with subset universes of size 2, 4, 8
    auto wider = sweep_sets_at_3(3, 1, 4);
    CHECK(wider.checked == 2 + 4 + 8);
    CHECK(wider.violations.empty());
    CHECK(wider.equalities.size() == 1);
}

TEST_CASE("set sweep matches per-instance check_bo") {
    auto summary = sweep_sets_at_3(3, 2, 4);
    std::vector<SweepInstance> expected_eq, expected_viol;
    std::uint64_t checked = 0;
    for (std::uint64_t s = 2; s <= 4; ++s)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (s - 1)); ++mask) {
            std::map<std::uint64_t, std::uint64_t> counts{{1, 1}};
            for (std::uint64_t e = 2; e <= s; ++e)
                if ((mask >> (e - 2)) & 1) counts[e] = 1;
            auto a_set = IntegerMultiset::from_counts(counts);
            auto seq = build_sequence(a_set, s);
            for (std::uint64_t b = 1; b <= std::min<std::uint64_t>(2, s / 2); ++b) {
                std::uint64_t a = s - b;
                if (a > 3) continue;
                auto rep = check_bo(seq, a, b, rat(3));
                ++checked;
                if (rep.equality)
                    expected_eq.push_back({a_set.spec(), a, b, rat(3), rep.difference});
                else if (rep.violated())
                    expected_viol.push_back({a_set.spec(), a, b, rat(3), rep.difference});
            }
        }
    CHECK(summary.checked == checked);
    REQUIRE(summary.equalities.size() == expected_eq.size());
    CHECK(summary.violations.size() == expected_viol.size());
    for (std::size_t i = 0; i < expected_eq.size(); ++i) {
        CHECK(summary.equalities[i].multiset == expected_eq[i].multiset);
        CHECK(summary.equalities[i].difference == expected_eq[i].difference);
    }
}

TEST_CASE("multiset sweep at x=5: tiny ranges") {
    auto summary = sweep_multisets_at_5(3);
    // s=2: mu(2) in {0,1,2} -> 3 instances; s=3: (2+1)(3+1) = 12 instances
    CHECK(summary.checked == 3 + 12);
    CHECK(summary.violations.empty());
    REQUIRE(summary.equalities.size() == 1);
    CHECK(summary.equalities[0].multiset == "1,2,2");
    CHECK(summary.equalities[0].a == 1);
    CHECK(summary.equalities[0].b == 1);
    CHECK(summary.equalities[0].x == 5);
    CHECK(matches_expected_multisets5(summary));
}

TEST_CASE("sweeps are deterministic across worker counts") {
    auto one = sweep_sets_at_3(3, 3, kNoSumCap, {1, false});
    auto three = sweep_sets_at_3(3, 3, kNoSumCap, {3, false});
    CHECK(to_json(one) == to_json(three));

    auto m1 = sweep_multisets_at_5(5, {1, false});
    auto m4 = sweep_multisets_at_5(5, {4, false});
    CHECK(to_json(m1) == to_json(m4));
}

TEST_CASE("cancellation yields a partial summary marked incomplete") {
    std::atomic<bool> cancel{true};
    auto summary = sweep_sets_at_3(3, 3, kNoSumCap, {2, false, &cancel});
    CHECK_FALSE(summary.complete);
    CHECK(summary.checked == 0);  // flag was up before the first instance

    std::atomic<bool> off{false};
    auto full = sweep_multisets_at_5(4, {2, false, &off});
    CHECK(full.complete);
}

TEST_CASE("desk guards") {
    CHECK_THROWS_AS(sweep_sets_at_3(9, 9), std::invalid_argument);
    CHECK_THROWS_AS(sweep_multisets_at_5(10), std::invalid_argument);
    // deep lifts the guard; keep the range tiny here
    CHECK_NOTHROW(sweep_sets_at_3(2, 2, kNoSumCap, {1, true}));
    // a sum cap brings a large box under the guard
    CHECK_NOTHROW(sweep_sets_at_3(9, 9, 6));
    CHECK_THROWS_AS(sweep_sets_at_3(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(sweep_multisets_at_5(1), std::invalid_argument);
}

TEST_CASE("expected-pattern helpers reject anything off the known equality cases") {
    SweepSummary bogus;
    bogus.family = "test";
    bogus.checked = 1;
    bogus.equalities.push_back({"1,3", 1, 1, rat(3), rat(0)});
    CHECK_FALSE(matches_expected_sets3(bogus));  // equality without 2 in A

    SweepSummary off_pair;
    off_pair.equalities.push_back({"1,2", 2, 1, rat(3), rat(0)});
    CHECK_FALSE(matches_expected_sets3(off_pair));

    SweepSummary with_violation;
    with_violation.violations.push_back({"1,2", 1, 1, rat(3), rat(-1)});
    CHECK_FALSE(matches_expected_sets3(with_violation));

    SweepSummary mu_one;
    mu_one.equalities.push_back({"1,2", 1, 1, rat(5), rat(0)});  // mu(2)=1, not 2
    CHECK_FALSE(matches_expected_multisets5(mu_one));
}

TEST_CASE("pair sweep over one multiset") {
    auto s = build_sequence(ms("1,2,3,4,5"), 6);
    auto summary = sweep_pairs(s, {rat(3), rat(7, 2), rat(4), rat(10)});
    CHECK(summary.violations.empty());
    REQUIRE(summary.equalities.size() == 1);
    CHECK(summary.equalities[0].a == 1);
    CHECK(summary.equalities[0].b == 1);
    CHECK(summary.equalities[0].x == 3);

    auto m = build_sequence(ms("1,2,2,3,5,5,5"), 6);
    auto msum = sweep_pairs(m, {rat(5), rat(11, 2), rat(6), rat(10)});
    CHECK(msum.violations.empty());
    REQUIRE(msum.equalities.size() == 1);
    CHECK(msum.equalities[0].x == 5);

    auto degenerate = build_sequence(ms("2,3"), 4);
    CHECK_THROWS_AS(sweep_pairs(degenerate, {rat(3)}), std::domain_error);
}

TEST_CASE("grid invariants with and without the equality trigger") {
    std::vector<Rational> grid3{rat(3), rat(7, 2), rat(4), rat(10)};
    std::vector<Rational> grid5{rat(5), rat(11, 2), rat(6), rat(10)};

    // sets without 2: strict everywhere on the x >= 3 grid
    for (const char* spec : {"1,3", "kregular:2"}) {
        auto summary = sweep_pairs(build_sequence(ms(spec), 6), grid3);
        CHECK(summary.violations.empty());
        CHECK(summary.equalities.empty());
    }

    // mu(2) = 2: equality exactly at (1,1), x = 5
    auto plane = sweep_pairs(build_sequence(ms("plane"), 6), grid5);
    CHECK(plane.violations.empty());
    REQUIRE(plane.equalities.size() == 1);
    CHECK(plane.equalities[0].a == 1);
    CHECK(plane.equalities[0].b == 1);
    CHECK(plane.equalities[0].x == 5);

    // mu(2) = 1: strict on the x >= 5 grid
    auto ms123 = sweep_pairs(build_sequence(ms("1,2,3"), 6), grid5);
    CHECK(ms123.violations.empty());
    CHECK(ms123.equalities.empty());
}

TEST_CASE("quasi-polynomial for {1,2} at x=3") {
    CHECK(quasi_poly_12_at_3(0) == 1);
    CHECK(quasi_poly_12_at_3(1) == 3);
    CHECK(quasi_poly_12_at_3(2) == 9);
    auto s = build_sequence(ms("1,2"), 40);
    for (std::uint64_t n = 0; n <= 40; ++n)
        CHECK(quasi_poly_12_at_3(n) == Rational(evaluate_colored(s, n, 3)));
}

TEST_CASE("auxiliary positivity grids") {
    auto psi3_rep = check_aux_positivity(AuxFunction::Psi3, rat(15), rat(100), rat(1, 4));
    CHECK(psi3_rep.pass);
    CHECK(psi3_rep.argmin == 15.0);
    CHECK_FALSE(psi3_rep.within_slack);
    CHECK_FALSE(psi3_rep.numeric_error);

    CHECK(check_aux_positivity(AuxFunction::psi3, rat(3), rat(100), rat(1, 4)).pass);
    CHECK(check_aux_positivity(AuxFunction::Psi4, rat(9), rat(100), rat(1, 4)).pass);
    CHECK(check_aux_positivity(AuxFunction::psi4, rat(1, 4), rat(100), rat(1, 4)).pass);

    // below its domain edge the bound genuinely dips negative
    auto fail_rep = check_aux_positivity(AuxFunction::Psi3, rat(1), rat(2), rat(1, 4));
    CHECK_FALSE(fail_rep.pass);
    CHECK(fail_rep.min_value < 0);

    CHECK_THROWS_AS(check_aux_positivity(AuxFunction::Psi3, rat(2), rat(2), rat(1, 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_aux_positivity(AuxFunction::Psi3, rat(1), rat(2), rat(0)),
                    std::invalid_argument);

    // ln of a non-positive argument is a numeric failure, not a verdict
    auto nan_rep = check_aux_positivity(AuxFunction::Psi3, rat(-1), rat(1), rat(1, 2));
    CHECK(nan_rep.numeric_error);
    CHECK_FALSE(nan_rep.pass);

    CHECK(aux_function_from_name("psi4") == AuxFunction::psi4);
    CHECK_THROWS_AS(aux_function_from_name("Psi5"), std::invalid_argument);
}

TEST_CASE("monotonicity verification") {
    std::vector<Rational> grid{rat(1), rat(3, 2), rat(2), rat(3), rat(15, 2), rat(10)};
    for (const char* spec : {"naturals", "plane", "1,2,2,3,5,5,5"}) {
        auto s = build_sequence(ms(spec), 12);
        auto rep = check_monotonicity(s, grid);
        CHECK(rep.pass());
        CHECK(rep.comparisons > 0);
    }
    // the singleton hits equality at x=1, which is permitted
    auto singleton = build_sequence(ms("1"), 10);
    CHECK(check_monotonicity(singleton, grid).pass());

    auto degenerate = build_sequence(ms("2,3"), 4);
    CHECK_THROWS_AS(check_monotonicity(degenerate, grid), std::domain_error);
    auto s = build_sequence(ms("1,2"), 4);
    CHECK_THROWS_AS(check_monotonicity(s, {rat(1, 2)}), std::invalid_argument);
}
