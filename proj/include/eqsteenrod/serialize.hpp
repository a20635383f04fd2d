#pragma once

// JSON and TSV emitters for the value types, plus the parsers needed to
// round-trip them. All output is deterministic: rows follow the canonical
// orders of the owning modules and JSON objects have sorted keys.

#include <string>
#include <vector>

#include "json.hpp"

#include "eqsteenrod/eqfun.hpp"
#include "eqsteenrod/gs_e2.hpp"
#include "eqsteenrod/koszul.hpp"
#include "eqsteenrod/mult_structure.hpp"
#include "eqsteenrod/rep_ring.hpp"
#include "eqsteenrod/splitting.hpp"

namespace eqsteenrod {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"level": k, "triv": t, "sign": s, "lambda": [m_1, ...]}. An induced degree
// uses the same object at level H.
Json to_json(const RealRep& v);
RealRep real_rep_from_json(const Json& j, int ambient_n);
Json to_json(const InducedDegree& d);
InducedDegree induced_degree_from_json(const Json& j, int ambient_n);

// {"rep": "abab", "stab": k, "size": m}
Json to_json(const OrbitRecord<EqFn>& r);
OrbitRecord<EqFn> orbit_record_from_json(const Json& j);

// {"seq": [...], "stab": k, "deg": {...}, "orbit": m, "dim": d}, with
// "tau0": true added for mod-2 doubled summands.
Json to_json(const Summand& s);
Summand summand_from_json(const Json& j, int ambient_n);
Json to_json(const std::vector<Summand>& list);

// {"asigma": e, "tau": [i, ...], "xi": {"i": e, ...}}
Json to_json(const TauMonomial& x);
TauMonomial tau_monomial_from_json(const Json& j);

Json to_json(const ROC2Degree& d);

// Columns c, s, homological, rank.
std::string ranks_tsv(const BigradedRanks& ranks);
Json ranks_json(const BigradedRanks& ranks);
BigradedRanks ranks_from_json(const Json& j);

std::string summands_tsv(const std::vector<Summand>& list);
/// Columns dim, induced_from, fixed_dims (comma separated, C_1 first), count.
std::string cell_table_tsv(const CellTable& table, int ambient_n);
Json cell_table_json(const CellTable& table, int ambient_n);

// E_2 chart: columns c, s, w, count.
std::string e2_chart_tsv(const E2Basis& basis);
Json e2_chart_json(const E2Basis& basis);
/// Dots at (underlying dimension, filtration weight), one per generator.
std::string e2_chart_svg(const E2Basis& basis);

}  // namespace eqsteenrod
