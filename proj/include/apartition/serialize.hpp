#pragma once

#include "apartition/bo_verify.hpp"
#include "apartition/oracle.hpp"
#include "apartition/partition_poly.hpp"
#include "apartition/roots.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace apartition {

// Wire formats. Polynomials serialize as coefficient lists of "num/den"
// strings, lowest degree first; series coefficients as decimal strings
// (they outgrow 64 bits quickly).
using Json = nlohmann::ordered_json;

Json to_json(const Polynomial& p);
Json to_json(const PolySequence& s);
Json to_json(const BOReport& r);
Json to_json(const SweepInstance& inst);
Json to_json(const SweepSummary& summary);
Json to_json(const AuxReport& rep);
Json monotonicity_json(const PolySequence& s, const std::vector<Rational>& grid,
                       const MonotonicityReport& rep);
Json series_json(const std::string& multiset_spec, std::uint64_t k, const SeriesTruncation& t);
Json roots_json(const std::string& multiset_spec, std::uint64_t a_max, std::uint64_t b_max,
                const std::vector<RootRecord>& records);

// "a,b,re,im,residual" header, one row per root, 15 significant digits,
// LF line endings.
std::string roots_csv(const std::vector<RootRecord>& records);

}  // namespace apartition
