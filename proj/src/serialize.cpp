#include "eqsteenrod/serialize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace eqsteenrod {

namespace {

template <class T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad field \"") + key + "\": " + e.what());
    }
}

std::string join(const std::vector<std::int64_t>& xs, char sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << sep;
        out << xs[i];
    }
    return out.str();
}

}  // namespace

Json to_json(const RealRep& v) {
    const auto lambdas = v.lambdas();
    return Json{{"level", v.level().k},
                {"triv", v.triv()},
                {"sign", v.sign_mult()},
                {"lambda", std::vector<std::int64_t>(lambdas.begin(), lambdas.end())}};
}

RealRep real_rep_from_json(const Json& j, int ambient_n) {
    const Subgroup level = Subgroup::make(field<int>(j, "level"), ambient_n);
    return RealRep(level, field<std::int64_t>(j, "triv"), field<std::int64_t>(j, "sign"),
                   field<std::vector<std::int64_t>>(j, "lambda"));
}

Json to_json(const InducedDegree& d) { return to_json(d.rep); }

InducedDegree induced_degree_from_json(const Json& j, int ambient_n) {
    return InducedDegree(real_rep_from_json(j, ambient_n));
}

Json to_json(const OrbitRecord<EqFn>& r) {
    return Json{{"rep", r.representative.to_string()}, {"stab", r.stabilizer.k}, {"size", r.orbit_size}};
}

OrbitRecord<EqFn> orbit_record_from_json(const Json& j) {
    const EqFn f = EqFn::parse(field<std::string>(j, "rep"));
    return {f, Subgroup::make(field<int>(j, "stab"), f.n()), field<std::int64_t>(j, "size")};
}

Json to_json(const Summand& s) {
    Json j{{"seq", s.seq.words()},
           {"stab", s.stab.k},
           {"deg", to_json(s.degree)},
           {"orbit", s.orbit_size},
           {"dim", s.underlying_dim}};
    if (s.tau0) j["tau0"] = true;
    return j;
}

Summand summand_from_json(const Json& j, int ambient_n) {
    const EqFnSeq seq = EqFnSeq::parse(ambient_n, field<std::vector<std::string>>(j, "seq"));
    const bool tau0 = j.contains("tau0") && field<bool>(j, "tau0");
    return Summand{seq,
                   Subgroup::make(field<int>(j, "stab"), ambient_n),
                   induced_degree_from_json(j.at("deg"), ambient_n),
                   field<std::int64_t>(j, "orbit"),
                   field<std::int64_t>(j, "dim"),
                   tau0};
}

Json to_json(const std::vector<Summand>& list) {
    Json arr = Json::array();
    for (const Summand& s : list) arr.push_back(to_json(s));
    return arr;
}

Json to_json(const TauMonomial& x) {
    Json xi = Json::object();
    for (const auto& [i, e] : x.xi_exps) xi[std::to_string(i)] = e;
    return Json{{"asigma", x.a_sigma_exp}, {"tau", x.tau_indices()}, {"xi", xi}};
}

TauMonomial tau_monomial_from_json(const Json& j) {
    TauMonomial m = TauMonomial::taus(field<std::vector<int>>(j, "tau"));
    m.a_sigma_exp = field<std::int64_t>(j, "asigma");
    if (m.a_sigma_exp < 0) throw ParseError("asigma must be >= 0");
    const Json xi = field<Json>(j, "xi");
    if (!xi.is_object()) throw ParseError("xi must be an object");
    for (const auto& [key, value] : xi.items()) {
        int index = 0;
        try {
            index = std::stoi(key);
        } catch (const std::exception&) {
            throw ParseError("xi key is not an integer: " + key);
        }
        const auto e = value.get<std::int64_t>();
        if (index < 1 || e < 0) throw ParseError("xi entries need index >= 1 and exponent >= 0");
        if (e > 0) m.xi_exps[index] = e;
    }
    return m;
}

Json to_json(const ROC2Degree& d) { return Json{{"c", d.c}, {"s", d.s}}; }

std::string ranks_tsv(const BigradedRanks& ranks) {
    std::ostringstream out;
    out << "c\ts\thomological\trank\n";
    for (const auto& [bd, r] : ranks) {
        out << bd.internal.c << '\t' << bd.internal.s << '\t' << bd.homological << '\t' << r << '\n';
    }
    return out.str();
}

Json ranks_json(const BigradedRanks& ranks) {
    Json arr = Json::array();
    for (const auto& [bd, r] : ranks) {
        arr.push_back(Json{{"c", bd.internal.c}, {"s", bd.internal.s}, {"homological", bd.homological}, {"rank", r}});
    }
    return arr;
}

BigradedRanks ranks_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("ranks must be an array");
    BigradedRanks out;
    for (const Json& row : j) {
        const Bidegree bd{ROC2Degree{field<std::int64_t>(row, "c"), field<std::int64_t>(row, "s")},
                          field<int>(row, "homological")};
        const auto r = field<std::int64_t>(row, "rank");
        if (r < 0) throw ParseError("ranks are nonnegative");
        if (!out.emplace(bd, r).second) throw ParseError("duplicate bidegree");
    }
    return out;
}

std::string summands_tsv(const std::vector<Summand>& list) {
    std::ostringstream out;
    out << "dim\tstab\torbit\tdegree\ttau0\tseq\n";
    for (const Summand& s : list) {
        std::string seq;
        for (const std::string& w : s.seq.words()) seq += (seq.empty() ? "" : ",") + w;
        out << s.underlying_dim << '\t' << s.stab.name() << '\t' << s.orbit_size << '\t';
        out << s.degree.rep.to_string() << '\t' << (s.tau0 ? 1 : 0) << '\t' << (seq.empty() ? "-" : seq) << '\n';
    }
    return out.str();
}

std::string cell_table_tsv(const CellTable& table, int ambient_n) {
    std::ostringstream out;
    out << "dim\tinduced_from\tfixed_dims\tcount\n";
    for (const auto& [key, count] : table.rows) {
        out << key.underlying_dim << '\t' << Subgroup::make(key.induced_from, ambient_n).name() << '\t'
            << join(key.fixed_dims, ',') << '\t' << count << '\n';
    }
    return out.str();
}

Json cell_table_json(const CellTable& table, int ambient_n) {
    Json arr = Json::array();
    for (const auto& [key, count] : table.rows) {
        arr.push_back(Json{{"dim", key.underlying_dim},
                           {"induced_from", Subgroup::make(key.induced_from, ambient_n).k},
                           {"fixed_dims", key.fixed_dims},
                           {"count", count}});
    }
    return arr;
}

std::string e2_chart_tsv(const E2Basis& basis) {
    std::ostringstream out;
    out << "c\ts\tw\tcount\n";
    for (const auto& [key, count] : basis.chart()) {
        out << key.first.c << '\t' << key.first.s << '\t' << key.second << '\t' << count << '\n';
    }
    return out.str();
}

Json e2_chart_json(const E2Basis& basis) {
    Json rows = Json::array();
    for (const auto& [key, count] : basis.chart()) {
        rows.push_back(Json{{"c", key.first.c}, {"s", key.first.s}, {"w", key.second}, {"count", count}});
    }
    Json names = Json::array();
    for (const E2Entry& e : basis.entries) {
        names.push_back(Json{{"name", e.name()}, {"c", e.degree.c}, {"s", e.degree.s}, {"w", e.weight}});
    }
    return Json{{"cutoff", basis.cutoff}, {"tau_floor", basis.tau_floor}, {"chart", rows}, {"generators", names}};
}

std::string e2_chart_svg(const E2Basis& basis) {
    constexpr int cell = 40;
    constexpr int margin = 40;
    std::int64_t max_w = 0;
    for (const E2Entry& e : basis.entries) max_w = std::max(max_w, e.weight);
    const std::int64_t width = margin * 2 + (basis.cutoff + 1) * cell;
    const std::int64_t height = margin * 2 + (max_w + 1) * cell;

    // Group generators by (dim, weight) so that stacked dots stay readable.
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<const E2Entry*>> cells;
    for (const E2Entry& e : basis.entries) cells[{e.degree.dim(), e.weight}].push_back(&e);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"monospace\" font-size=\"10\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::int64_t x = 0; x <= basis.cutoff; ++x) {
        const std::int64_t px = margin + x * cell + cell / 2;
        out << "<line x1=\"" << px << "\" y1=\"" << margin << "\" x2=\"" << px << "\" y2=\"" << height - margin
            << "\" stroke=\"#ddd\"/>\n";
        out << "<text x=\"" << px << "\" y=\"" << height - margin / 2 << "\" text-anchor=\"middle\">" << x
            << "</text>\n";
    }
    for (std::int64_t w = 0; w <= max_w; ++w) {
        const std::int64_t py = height - margin - w * cell - cell / 2;
        out << "<line x1=\"" << margin << "\" y1=\"" << py << "\" x2=\"" << width - margin << "\" y2=\"" << py
            << "\" stroke=\"#ddd\"/>\n";
        out << "<text x=\"" << margin / 2 << "\" y=\"" << py + 3 << "\" text-anchor=\"middle\">" << w << "</text>\n";
    }
    for (const auto& [pos, list] : cells) {
        const std::int64_t cx = margin + pos.first * cell + cell / 2;
        const std::int64_t cy = height - margin - pos.second * cell - cell / 2;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::int64_t dx = static_cast<std::int64_t>(i) * 6 - static_cast<std::int64_t>(list.size() - 1) * 3;
            out << "<circle cx=\"" << cx + dx << "\" cy=\"" << cy << "\" r=\"3\" fill=\"black\"><title>"
                << list[i]->name() << " " << list[i]->degree.to_string() << "</title></circle>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace eqsteenrod
