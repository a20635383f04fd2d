#include "cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "cli/config.hpp"
#include "cli/verify.hpp"
#include "eqsteenrod/gs_e2.hpp"
#include "eqsteenrod/koszul.hpp"
#include "eqsteenrod/serialize.hpp"
#include "eqsteenrod/splitting.hpp"

namespace eqsteenrod::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string format = "tsv";
    std::string out_path;
    std::string config_path;
    bool seedless = false;

    int n = 1;
    int gen_index = 1;
    std::string profile = "mu";
    bool mod2 = false;
    int max_index = 0;
    int dim = 8;
    bool check = false;

    int big_n = 1;
    bool compare = false;

    std::string e2_profile = "bp";
    bool collapse = false;
    bool permanent = false;

    bool all = false;
    std::vector<std::string> only;
    int max_n = 4;
    int cutoff = -1;
};

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

void require_n(int n) {
    if (n < 1 || n > 4) throw SizeError("n out of range: " + std::to_string(n) + " (expected 1..4)");
}

void require_dim(int d) {
    if (d < 0) throw UsageError("--dim must be >= 0");
}

void require_not_svg(const RunConfig& c, const char* command) {
    if (c.format == "svg") throw UsageError(std::string("--format svg is only available for e2, not ") + command);
}

GeneratorProfile make_profile(const std::string& name, bool mod2, int max_index) {
    return name == "bp" ? GeneratorProfile::bp(mod2, max_index) : GeneratorProfile::mu(mod2, max_index);
}

int cmd_decompose(const RunConfig& c, std::ostream& out) {
    require_n(c.n);
    require_not_svg(c, "decompose");
    if (c.gen_index < 1) throw UsageError("--gen-index must be >= 1");
    const auto list = norm_summands(c.n, c.gen_index);
    if (c.format == "json") {
        out << Json{{"n", c.n}, {"gen_index", c.gen_index}, {"summands", to_json(list)}}.dump(2) << '\n';
    } else {
        out << summands_tsv(list);
    }
    return kOk;
}

int cmd_basis(const RunConfig& c, std::ostream& out) {
    require_n(c.n);
    require_dim(c.dim);
    require_not_svg(c, "basis");
    const GeneratorProfile profile = make_profile(c.profile, c.mod2, c.max_index);
    const auto list = basis_up_to(c.n, profile, c.dim);
    const CellTable table = cell_table(list);

    std::vector<std::pair<std::string, bool>> checks;
    if (c.check) {
        checks.emplace_back("basis_series",
                            orbit_weighted_series(list, c.dim) == expected_basis_series(c.n, profile, c.dim));
        for (std::int64_t d : profile.materialize(c.dim)) {
            checks.emplace_back("tensor_expansion d=" + std::to_string(d), tensor_expansion_check(c.n, static_cast<int>(d)));
        }
    }
    bool ok = true;
    for (const auto& [name, passed] : checks) ok = ok && passed;

    if (c.format == "json") {
        Json j{{"n", c.n},
               {"profile", c.profile},
               {"mod2", c.mod2},
               {"cutoff", c.dim},
               {"summands", to_json(list)},
               {"cells", cell_table_json(table, c.n)}};
        if (c.check) {
            Json cj = Json::object();
            for (const auto& [name, passed] : checks) cj[name] = verdict(passed);
            j["checks"] = cj;
        }
        out << j.dump(2) << '\n';
    } else {
        out << cell_table_tsv(table, c.n);
        for (const auto& [name, passed] : checks) out << "# check " << name << ' ' << verdict(passed) << '\n';
    }
    return ok ? kOk : kCheckFailed;
}

int cmd_tor(const RunConfig& c, std::ostream& out) {
    require_dim(c.dim);
    require_not_svg(c, "tor");
    if (c.big_n < 0 || c.big_n > 64) throw UsageError("--N must be in 0..64");
    const KoszulComplex cx = build_complex(PolyGenerators::standard(c.big_n), c.big_n, c.dim);
    const BigradedRanks ranks = homology_ranks(cx);

    bool ok = true;
    std::vector<std::pair<std::string, bool>> checks;
    if (c.compare) {
        checks.emplace_back("d_squared_zero", cx.differential_squares_to_zero());
        checks.emplace_back("expected_ranks", ranks == expected_ranks(c.big_n, c.dim));
        for (const auto& [name, passed] : checks) ok = ok && passed;
    }
    if (c.format == "json") {
        Json j{{"N", c.big_n}, {"cutoff", c.dim}, {"ranks", ranks_json(ranks)}};
        if (c.compare) {
            Json cj = Json::object();
            for (const auto& [name, passed] : checks) cj[name] = verdict(passed);
            j["compare"] = cj;
        }
        out << j.dump(2) << '\n';
    } else {
        out << ranks_tsv(ranks);
        for (const auto& [name, passed] : checks) out << "# compare " << name << ' ' << verdict(passed) << '\n';
    }
    return ok ? kOk : kCheckFailed;
}

std::string exps_string(const std::vector<std::vector<std::int64_t>>& exps) {
    std::string s;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (i) s += ";";
        for (std::size_t j = 0; j < exps[i].size(); ++j) s += (j ? "," : "") + std::to_string(exps[i][j]);
    }
    return s.empty() ? "-" : s;
}

int cmd_e2_general(const RunConfig& c, std::ostream& out) {
    if (c.format == "svg") throw UsageError("--format svg requires n = 1");
    const auto records = e2_basis_general(c.n, make_profile(c.e2_profile, false, 0), c.dim);
    if (c.format == "json") {
        Json arr = Json::array();
        for (const auto& r : records) {
            arr.push_back(Json{{"seq", r.seq.words()},
                               {"m", r.m_exps},
                               {"tau0", r.tau0},
                               {"stab", r.stab.k},
                               {"orbit", r.orbit_size},
                               {"dim", r.underlying_dim},
                               {"w", r.weight}});
        }
        out << Json{{"n", c.n}, {"cutoff", c.dim}, {"orbits", arr}}.dump(2) << '\n';
    } else {
        out << "dim\tw\tstab\torbit\tseq\tm\n";
        for (const auto& r : records) {
            std::string seq;
            for (const auto& w : r.seq.words()) seq += (seq.empty() ? "" : ",") + w;
            out << r.underlying_dim << '\t' << r.weight << '\t' << r.stab.name() << '\t' << r.orbit_size << '\t'
                << (seq.empty() ? "-" : seq) << '\t' << exps_string(r.m_exps) << '\n';
        }
    }
    return kOk;
}

int cmd_e2(const RunConfig& c, std::ostream& out) {
    require_n(c.n);
    require_dim(c.dim);
    if (c.collapse && c.n != 1) throw UsageError("--collapse-check requires n = 1");
    if (c.collapse && c.dim > 20) throw UsageError("--collapse-check supports --dim <= 20");
    if (c.permanent && c.n != 1) throw UsageError("--permanent-cycles requires n = 1");
    if (c.n != 1) return cmd_e2_general(c, out);

    const E2Basis basis = e2_basis(make_profile(c.e2_profile, false, 0), 1, c.dim);
    bool ok = true;
    std::optional<bool> collapsed;
    if (c.collapse) {
        collapsed = collapse_check(c.dim);
        ok = *collapsed;
    }
    const auto audits = c.permanent ? permanent_cycle_report(c.dim) : std::vector<PermanentCycleAudit>{};

    if (c.format == "svg") {
        out << e2_chart_svg(basis);
    } else if (c.format == "json") {
        Json j = e2_chart_json(basis);
        if (collapsed) j["collapse_check"] = verdict(*collapsed);
        if (c.permanent) {
            Json arr = Json::array();
            for (const auto& a : audits) {
                Json targets = Json::array();
                for (const auto& t : a.targets) targets.push_back(t.name());
                arr.push_back(Json{{"tau", a.tau_index},
                                   {"degree", to_json(a.tau_degree)},
                                   {"targets", targets},
                                   {"excluded", a.excluded},
                                   {"reason", a.reason}});
            }
            j["permanent_cycles"] = arr;
        }
        out << j.dump(2) << '\n';
    } else {
        out << e2_chart_tsv(basis);
        if (collapsed) out << "# collapse_check D=" << c.dim << ' ' << verdict(*collapsed) << '\n';
        for (const auto& a : audits) {
            out << "# permanent t" << a.tau_index << ' ' << a.tau_degree.to_string() << " targets=" << a.targets.size()
                << ' ' << (a.excluded ? "excluded" : "open") << ": " << a.reason << '\n';
        }
    }
    return ok ? kOk : kCheckFailed;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    require_not_svg(c, "verify");
    std::vector<std::string> names;
    if (c.all) {
        names = check_names();
    } else {
        for (const auto& name : c.only) {
            if (!is_check_name(name)) throw UsageError("unknown check: " + name);
            if (std::ranges::find(names, name) == names.end()) names.push_back(name);
        }
    }
    if (names.empty()) throw UsageError("no checks selected (use --all or --only NAME)");
    if (c.max_n < 1 || c.max_n > 4) throw SizeError("n out of range: --max-n " + std::to_string(c.max_n) + " (expected 1..4)");

    VerifyOptions options;
    options.max_n = c.max_n;
    if (c.cutoff >= 0) options.cutoff = c.cutoff;
    const auto results = run_checks(names, options);
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;

    if (c.format == "json") {
        Json arr = Json::array();
        for (const auto& r : results) {
            arr.push_back(Json{{"check", r.name}, {"params", r.params}, {"result", verdict(r.passed)}, {"detail", r.detail}});
        }
        out << Json{{"checks", arr}, {"passed", passed}, {"total", results.size()}}.dump(2) << '\n';
    } else {
        out << "check\tparams\tresult\tdetail\n";
        for (const auto& r : results) {
            out << r.name << '\t' << r.params << '\t' << verdict(r.passed) << '\t' << r.detail << '\n';
        }
        out << "summary\t" << passed << "/" << results.size() << " passed\n";
    }
    return passed == results.size() ? kOk : kCheckFailed;
}

/// Fills every option that was not given on the command line from the
/// config map. Keys naming no option of any command are rejected.
void apply_config(CLI::App& app, CLI::App* sub, const std::map<std::string, std::string>& config) {
    std::set<std::string> known;
    auto collect = [&](CLI::App* a) {
        for (const CLI::Option* opt : a->get_options()) {
            for (const auto& name : opt->get_lnames()) known.insert(name);
        }
    };
    collect(&app);
    for (CLI::App* s : app.get_subcommands({})) collect(s);
    for (const auto& [key, value] : config) {
        if (!known.contains(key)) throw UsageError("config: unknown key '" + key + "'");
    }
    for (CLI::App* a : {&app, sub}) {
        for (CLI::Option* opt : a->get_options()) {
            if (opt->count() > 0) continue;
            for (const auto& name : opt->get_lnames()) {
                const auto it = config.find(name);
                if (it == config.end() || name == "config") continue;
                if (opt->get_expected_max() > 1) {
                    std::stringstream ss(it->second);
                    std::string item;
                    while (std::getline(ss, item, ',')) opt->add_result(item);
                } else {
                    opt->add_result(it->second);
                }
                try {
                    opt->run_callback();
                } catch (const CLI::Error& e) {
                    throw UsageError("config: " + name + ": " + e.what());
                }
            }
        }
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Equivariant dual Steenrod algebra computations for G = C_{2^n}", "eqsteenrod"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"tsv", "json", "svg"}));
    app.add_option("--out", c.out_path, "Write the report to PATH");
    app.add_option("--config", c.config_path, "Flat key = value file; flags take precedence");
    app.add_flag("--seedless", c.seedless, "Deterministic run (always on; accepted for scripts)");

    CLI::App* decompose = app.add_subcommand("decompose", "Norm of S^(i rho_2 + 1) + S^0 as induced spheres");
    decompose->add_option("--n", c.n, "Group exponent, G = C_{2^n}");
    decompose->add_option("--gen-index", c.gen_index, "Generator index i");

    CLI::App* basis = app.add_subcommand("basis", "Relative dual Steenrod algebra basis up to a dimension");
    basis->add_option("--n", c.n, "Group exponent");
    basis->add_option("--profile", c.profile, "Generator degrees")->check(CLI::IsMember({"mu", "bp"}));
    basis->add_flag("--mod2", c.mod2, "Include the degree-1 exterior class");
    basis->add_option("--max-index", c.max_index, "Largest generator index (0 = no limit)");
    basis->add_option("--dim", c.dim, "Underlying dimension cutoff");
    basis->add_flag("--check", c.check, "Compare against the product series");

    CLI::App* tor = app.add_subcommand("tor", "Koszul homology at C_2 over F_2");
    tor->add_option("--N", c.big_n, "Generator index bound");
    tor->add_option("--dim", c.dim, "Underlying dimension cutoff");
    tor->add_flag("--compare", c.compare, "Compare against the closed form");

    CLI::App* e2 = app.add_subcommand("e2", "E_2 basis of the slice spectral sequence and collapse check");
    e2->add_option("--n", c.n, "Group exponent (collapse check needs 1)");
    e2->add_option("--dim", c.dim, "Underlying dimension cutoff");
    e2->add_option("--profile", c.e2_profile, "Generator degrees")->check(CLI::IsMember({"mu", "bp"}));
    e2->add_flag("--collapse-check", c.collapse, "Compare E_2 ranks with the Koszul answer");
    e2->add_flag("--permanent-cycles", c.permanent, "Audit possible differentials on the taubar_i");

    CLI::App* verify = app.add_subcommand("verify", "Run the property suite");
    verify->add_flag("--all", c.all, "Run every check");
    verify->add_option("--only", c.only, "Run the named checks")->delimiter(',');
    verify->add_option("--max-n", c.max_n, "Largest group exponent");
    verify->add_option("--cutoff", c.cutoff, "Dimension cutoff for all checks (clamped per check)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    std::ostringstream report;
    int status = kOk;
    try {
        if (!c.config_path.empty()) apply_config(app, sub, load_config(c.config_path));
        if (sub == decompose) status = cmd_decompose(c, report);
        if (sub == basis) status = cmd_basis(c, report);
        if (sub == tor) status = cmd_tor(c, report);
        if (sub == e2) status = cmd_e2(c, report);
        if (sub == verify) status = cmd_verify(c, report);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BlowupError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (c.out_path.empty()) {
        out << report.str();
    } else {
        std::ofstream file(c.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << c.out_path << '\n';
            return kUsage;
        }
        file << report.str();
    }
    return status;
}

}  // namespace eqsteenrod::cli
