#include "apartition/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

using apartition::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("poly prints the sequence") {
    auto r = cli({"poly", "--multiset", "1,2,3,4,5", "--upto", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "f[0] = 1"));
    CHECK(contains(r.out, "f[1] = x"));
    CHECK(contains(r.out, "f[2] = 1/2*x^2 + 3/2*x"));
    CHECK(contains(r.out, "f[3] = 1/6*x^3 + 3/2*x^2 + 4/3*x"));
    CHECK(contains(r.out, "sigma: 1 3 4"));

    auto j = cli({"poly", "--multiset", "1,2", "--upto", "2", "--json"});
    CHECK(j.code == 0);
    CHECK(contains(j.out, "\"multiset\": \"1,2\""));
    CHECK(contains(j.out, "\"1/2\""));
}

TEST_CASE("eval takes integers and fractions, rejects decimals") {
    auto r = cli({"eval", "--multiset", "1,2", "--n", "2", "--x", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "9\n");

    auto frac = cli({"eval", "--multiset", "1,2", "--n", "2", "--x", "7/2"});
    CHECK(frac.code == 0);
    CHECK(frac.out == "91/8\n");  // (7/2)(7/2+3)/2

    auto bad = cli({"eval", "--multiset", "1,2", "--n", "2", "--x", "2.5"});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "error:"));
}

TEST_CASE("colored and oracle agree on the classic values") {
    auto r = cli({"oracle", "colored", "--multiset", "naturals", "--k", "1", "--upto", "4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "4 5"));

    auto c = cli({"colored", "--multiset", "naturals", "--k", "1", "--upto", "4"});
    CHECK(c.code == 0);
    CHECK(contains(c.out, "4 5"));

    auto p = cli({"oracle", "partitions", "--multiset", "1,2,2,3,3", "--upto", "4"});
    CHECK(p.code == 0);
    CHECK(contains(p.out, "4 8"));

    auto b = cli({"oracle", "brute", "--multiset", "1,2", "--k", "1", "--upto", "4"});
    CHECK(b.code == 0);
    CHECK(contains(b.out, "4 3"));

    auto guard = cli({"oracle", "brute", "--multiset", "1", "--k", "1", "--upto", "13"});
    CHECK(guard.code == 2);
    CHECK(contains(guard.err, "error:"));
}

TEST_CASE("bo check reports the classification in the exit code") {
    auto eq = cli({"bo", "check", "--multiset", "1,2", "--a", "1", "--b", "1", "--x", "3"});
    CHECK(eq.code == 0);
    CHECK(contains(eq.out, "equality"));

    auto strict = cli({"bo", "check", "--multiset", "1", "--a", "1", "--b", "1", "--x", "3"});
    CHECK(strict.code == 0);
    CHECK(contains(strict.out, "strict difference=3"));

    auto viol = cli({"bo", "check", "--multiset", "1,2", "--a", "1", "--b", "1", "--x", "2"});
    CHECK(viol.code == 1);
    CHECK(contains(viol.out, "violated"));
}

TEST_CASE("bo diff prints the difference polynomial") {
    auto r = cli({"bo", "diff", "--multiset", "1,2", "--a", "1", "--b", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/2*x^2 - 3/2*x\n");
}

TEST_CASE("bo sweeps succeed on their expected patterns") {
    auto sets = cli({"bo", "sweep-sets3", "--a-max", "2", "--b-max", "2"});
    CHECK(sets.code == 0);
    CHECK(contains(sets.out, "expected-pattern: OK"));

    auto multis = cli({"bo", "sweep-multisets5", "--sum-max", "4"});
    CHECK(multis.code == 0);
    CHECK(contains(multis.out, "equalities: 1"));

    auto guarded = cli({"bo", "sweep-sets3", "--a-max", "9", "--b-max", "9"});
    CHECK(guarded.code == 2);
    CHECK(contains(guarded.err, "resource guard"));

    auto pair = cli({"bo", "sweep", "--multiset", "1,2,3,4,5", "--upto", "5"});
    CHECK(pair.code == 0);
    CHECK(contains(pair.out, "violations: 0"));
}

TEST_CASE("APARTITION_WORKERS sets the default worker count") {
    setenv("APARTITION_WORKERS", "3", 1);
    auto r = cli({"bo", "sweep-sets3", "--a-max", "2", "--b-max", "2", "--json"});
    unsetenv("APARTITION_WORKERS");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"complete\": true"));
}

TEST_CASE("sweep output is byte-identical across worker counts") {
    std::vector<std::string> base{"bo", "sweep-sets3", "--a-max", "3", "--b-max",
                                  "3",  "--json"};
    auto one = base;
    one.insert(one.end(), {"--workers", "1"});
    auto four = base;
    four.insert(four.end(), {"--workers", "4"});
    auto r1 = cli(one);
    auto r4 = cli(four);
    CHECK(r1.code == 0);
    CHECK(r1.out == r4.out);
}

TEST_CASE("quasi12 verifies against the recurrence") {
    auto r = cli({"bo", "quasi12", "--upto", "30", "--verify"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "verify: OK"));
    CHECK(contains(r.out, "0 1\n"));
    CHECK(contains(r.out, "2 9\n"));
}

TEST_CASE("aux positivity from the command line") {
    auto r = cli({"bo", "aux", "--which", "Psi3", "--hi", "100"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "PASS"));

    auto fail = cli({"bo", "aux", "--which", "Psi3", "--lo", "1", "--hi", "2"});
    CHECK(fail.code == 1);
    CHECK(contains(fail.out, "FAIL"));

    auto unknown = cli({"bo", "aux", "--which", "Psi9"});
    CHECK(unknown.code == 2);

    auto nan = cli({"bo", "aux", "--which", "Psi3", "--lo=-1", "--hi", "1"});
    CHECK(nan.code == 3);
}

TEST_CASE("monotone rejects degenerate multisets") {
    auto ok = cli({"bo", "monotone", "--multiset", "naturals", "--upto", "8"});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "PASS"));

    auto degenerate = cli({"bo", "monotone", "--multiset", "2,3", "--upto", "4"});
    CHECK(degenerate.code == 2);
    CHECK(contains(degenerate.err, "error:"));
}

TEST_CASE("roots figure formats") {
    auto csv = cli({"roots", "figure", "--multiset", "1,2", "--a-max", "1", "--b-max", "1",
                    "--csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("a,b,re,im,residual\n", 0) == 0);
    CHECK(contains(csv.out, "1,1,0,0,0"));
    CHECK(contains(csv.out, "1,1,3,"));

    auto both = cli({"roots", "figure", "--multiset", "1,2", "--a-max", "1", "--b-max", "1",
                     "--csv", "--json"});
    CHECK(both.code == 2);

    auto plain = cli({"roots", "figure", "--multiset", "1,2", "--a-max", "1", "--b-max", "1"});
    CHECK(plain.code == 0);
    CHECK(contains(plain.out, "a=1 b=1"));
}

TEST_CASE("usage errors") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"poly", "--upto", "3"}).code == 2);
    CHECK(cli({"poly", "--multiset", "0,1", "--upto", "3"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}
