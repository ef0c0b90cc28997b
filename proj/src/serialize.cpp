#include "apartition/serialize.hpp"

#include <cstdio>

namespace apartition {

Json to_json(const Polynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(fraction_string(c));
    return coeffs;
}

Json to_json(const PolySequence& s) {
    Json j;
    j["multiset"] = s.multiset.spec();
    j["upto"] = s.upto;
    j["sigma"] = s.sigma;
    Json polys = Json::array();
    for (const auto& f : s.f) polys.push_back(to_json(f));
    j["f"] = std::move(polys);
    return j;
}

Json to_json(const BOReport& r) {
    Json j;
    j["a"] = r.a;
    j["b"] = r.b;
    j["x"] = fraction_string(r.x);
    j["difference"] = fraction_string(r.difference);
    j["strict"] = r.strict;
    j["equality"] = r.equality;
    return j;
}

Json to_json(const SweepInstance& inst) {
    Json j;
    j["multiset"] = inst.multiset;
    j["a"] = inst.a;
    j["b"] = inst.b;
    j["x"] = fraction_string(inst.x);
    j["difference"] = fraction_string(inst.difference);
    return j;
}

Json to_json(const SweepSummary& summary) {
    Json j;
    j["family"] = summary.family;
    j["checked"] = summary.checked;
    j["complete"] = summary.complete;
    Json v = Json::array(), e = Json::array();
    for (const auto& inst : summary.violations) v.push_back(to_json(inst));
    for (const auto& inst : summary.equalities) e.push_back(to_json(inst));
    j["violations"] = std::move(v);
    j["equalities"] = std::move(e);
    return j;
}

Json to_json(const AuxReport& rep) {
    Json j;
    j["function"] = aux_function_name(rep.which);
    j["lo"] = fraction_string(rep.lo);
    j["hi"] = fraction_string(rep.hi);
    j["step"] = fraction_string(rep.step);
    j["points"] = rep.points;
    j["min"] = rep.min_value;
    j["argmin"] = rep.argmin;
    j["pass"] = rep.pass;
    j["within_slack"] = rep.within_slack;
    j["numeric_error"] = rep.numeric_error;
    return j;
}

Json monotonicity_json(const PolySequence& s, const std::vector<Rational>& grid,
                       const MonotonicityReport& rep) {
    Json j;
    j["multiset"] = s.multiset.spec();
    j["upto"] = s.upto;
    Json g = Json::array();
    for (const auto& x : grid) g.push_back(fraction_string(x));
    j["grid"] = std::move(g);
    j["comparisons"] = rep.comparisons;
    j["pass"] = rep.pass();
    j["failures"] = rep.failures;
    return j;
}

Json series_json(const std::string& multiset_spec, std::uint64_t k, const SeriesTruncation& t) {
    Json j;
    j["multiset"] = multiset_spec;
    j["k"] = k;
    j["upto"] = t.bound();
    Json c = Json::array();
    for (const auto& v : t.coefficients) c.push_back(v.get_str());
    j["coefficients"] = std::move(c);
    return j;
}

Json roots_json(const std::string& multiset_spec, std::uint64_t a_max, std::uint64_t b_max,
                const std::vector<RootRecord>& records) {
    Json j;
    j["multiset"] = multiset_spec;
    j["a_max"] = a_max;
    j["b_max"] = b_max;
    Json rows = Json::array();
    for (const auto& r : records) {
        Json row;
        row["a"] = r.a;
        row["b"] = r.b;
        row["re"] = r.root.real();
        row["im"] = r.root.imag();
        row["residual"] = r.residual;
        rows.push_back(std::move(row));
    }
    j["roots"] = std::move(rows);
    return j;
}

std::string roots_csv(const std::vector<RootRecord>& records) {
    std::string out = "a,b,re,im,residual\n";
    char buf[128];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%llu,%llu,%.15g,%.15g,%.15g\n",
                      static_cast<unsigned long long>(r.a), static_cast<unsigned long long>(r.b),
                      r.root.real(), r.root.imag(), r.residual);
        out += buf;
    }
    return out;
}

}  // namespace apartition
