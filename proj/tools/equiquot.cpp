#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "equiquot/adequacy.hpp"
#include "equiquot/corpus.hpp"
#include "equiquot/partition.hpp"
#include "equiquot/skew.hpp"
#include "equiquot/torsion.hpp"
#include "equiquot/zeta.hpp"

using namespace equiquot;
using nlohmann::json;

namespace {

// exit codes: 0 all-pass, 1 failed verdict, 2 input error, 3 budget exceeded
constexpr int kPass = 0, kVerdictFail = 1, kInputError = 2, kBudget = 3;

long long env_budget(long long fallback) {
    const char* v = std::getenv("EQUIQUOT_BUDGET");
    if (!v) return fallback;
    return std::atoll(v);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct PresetSpec {
    std::string preset = "sym";
    int n = 3;
    std::string t = "cyclic:2";   ///< wreath base, "cyclic:k" or "sym:k"
};

PermGroup base_group_of(const std::string& t) {
    auto colon = t.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("base group must look like cyclic:3 or sym:3");
    int k = std::stoi(t.substr(colon + 1));
    std::string kind = t.substr(0, colon);
    if (kind == "cyclic") return cyclic_group(k);
    if (kind == "sym") return symmetric_group(k);
    throw std::invalid_argument("unknown base group kind: " + kind);
}

ExactSequence sequence_of(const PresetSpec& p) {
    if (p.preset == "heisenberg") return heisenberg_group(p.n).seq;
    if (p.preset == "exS0") return exs0_sequence(p.n);
    if (p.preset == "a4cover") return a4_cover_sequence();
    if (p.preset == "wreath") return wreath_product(base_group_of(p.t), p.n);
    if (p.preset == "semidirect") {
        // dihedral-style inversion action of Z/2 on Z/n
        PermGroup n = cyclic_group(p.n), h = cyclic_group(2);
        std::vector<std::vector<int>> act(2, std::vector<int>(p.n));
        for (int i = 0; i < p.n; ++i) act[0][i] = i;
        for (int i = 0; i < p.n; ++i) act[1][i] = n.inv(i);
        return semidirect_product(n, h, act, "z" + std::to_string(p.n) + "xz2");
    }
    throw std::invalid_argument("preset " + p.preset + " does not define a group extension");
}

GroupPtr group_of(const PresetSpec& p) {
    if (p.preset == "sym") return std::make_shared<PermGroup>(symmetric_group(p.n));
    if (p.preset == "cyclic") return std::make_shared<PermGroup>(cyclic_group(p.n));
    return sequence_of(p).G;
}

void render(const json& report, const std::string& format, bool timing, double seconds) {
    json out = report;
    if (timing) out["seconds"] = seconds;
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::function<void(const json&, int)> walk = [&](const json& node, int depth) {
        std::string pad(2 * depth, ' ');
        if (node.is_object()) {
            for (const auto& [k, v] : node.items()) {
                if (v.is_object() || v.is_array()) {
                    std::cout << pad << k << ":\n";
                    walk(v, depth + 1);
                } else {
                    std::cout << pad << k << ": " << v.dump() << "\n";
                }
            }
        } else if (node.is_array()) {
            for (const auto& v : node) {
                if (v.is_object() || v.is_array()) {
                    std::cout << pad << "-\n";
                    walk(v, depth + 1);
                } else {
                    std::cout << pad << "- " << v.dump() << "\n";
                }
            }
        }
    };
    walk(out, 0);
}

json census_json(const OrbitCensus& c) {
    json out = json::array();
    for (auto [so, os] : c.entries) out.push_back({so, os});
    return out;
}

json s0_json(const S0Report& s) {
    return {{"sequence", s.sequence_name},
            {"condition_i", s.cond_i},
            {"condition_ii", s.cond_ii},
            {"witness", s.witness},
            {"condition_iii",
             {{"pass", s.cond_iii.pass},
              {"class_census", census_json(s.cond_iii.class_side)},
              {"char_census", census_json(s.cond_iii.char_side)}}},
            {"in_s0", s.in_s0}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-group toolkit: extended quotients, extension criteria, "
                 "twisted function algebras, counting zeta identities, and integer "
                 "torsion bookkeeping"};
    app.require_subcommand(1);

    std::string format = "json";
    bool timing = false;
    app.add_option("--output", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--timing", timing, "include wall-clock seconds in the report");

    PresetSpec preset;
    auto add_preset = [&](CLI::App* cmd, bool groups_too) {
        std::vector<std::string> allowed{"heisenberg", "wreath", "semidirect", "a4cover",
                                         "exS0"};
        if (groups_too) {
            allowed.push_back("sym");
            allowed.push_back("cyclic");
        }
        cmd->add_option("--preset", preset.preset, "construction family")
            ->check(CLI::IsMember(allowed));
        cmd->add_option("--n", preset.n, "size parameter");
        cmd->add_option("--t", preset.t, "wreath base, e.g. cyclic:2 or sym:3");
    };

    auto* group_cmd = app.add_subcommand("group", "construct a group and report on it");
    add_preset(group_cmd, true);
    bool list_classes = false;
    group_cmd->add_flag("--classes", list_classes, "list conjugacy class representatives");

    auto* gset_cmd = app.add_subcommand("gset", "orbit and extended-quotient counts");
    add_preset(gset_cmd, true);
    bool regular_gset = false;
    int power = 0;
    int alphabet = 2;
    gset_cmd->add_flag("--regular-gset", regular_gset, "act on the group itself");
    gset_cmd->add_option("--power", power, "coordinate power of a small alphabet");
    gset_cmd->add_option("--alphabet", alphabet, "alphabet size for --power");

    auto* chartable_cmd = app.add_subcommand("chartable", "exact character table");
    add_preset(chartable_cmd, true);

    auto* adequacy_cmd = app.add_subcommand("adequacy", "stabilizer sequence criteria");
    add_preset(adequacy_cmd, false);
    bool adequacy_regular = false;
    adequacy_cmd->add_flag("--regular-gset", adequacy_regular,
                           "test the quotient group acting regularly, through the "
                           "projection");

    auto* verify_cmd = app.add_subcommand("verify", "algebra isomorphism certificates");
    add_preset(verify_cmd, false);
    int heis_lemma = 0;
    verify_cmd->add_option("--heisenberg-lemma", heis_lemma,
                           "check the cyclic-algebra lemma for this modulus");

    auto* zeta_cmd = app.add_subcommand("zeta", "counting zeta identity");
    long long zx = 1;
    int zdeg = 6, brute_max = 4;
    zeta_cmd->add_option("--x", zx, "point count")->required();
    zeta_cmd->add_option("--degree", zdeg, "truncation degree")->required();
    zeta_cmd->add_option("--brute-max", brute_max, "largest n enumerated directly");

    auto* torsion_cmd = app.add_subcommand("torsion", "integer torsion bookkeeping");
    auto* audit_cmd = torsion_cmd->add_subcommand("audit", "strict fibration bound");
    std::string base_file, d3_file;
    int fiber_d = 2;
    int rmax = -1;
    audit_cmd->add_option("--base", base_file, "graded-group JSON for the base")->required();
    audit_cmd->add_option("--d", fiber_d, "fiber parameter (rows = d by default)")->required();
    audit_cmd->add_option("--d3", d3_file, "matrix JSON {rows, cols, entries}")->required();
    audit_cmd->add_option("--rmax", rmax, "override the top fiber-cohomology row");
    torsion_cmd->require_subcommand(1);

    auto* corpus_cmd = app.add_subcommand("corpus", "run the bundled scenario suite");
    std::string filter, data_dir = "data";
    unsigned seed = 0;
    corpus_cmd->add_option("--filter", filter, "substring filter on scenario names");
    corpus_cmd->add_option("--seed", seed, "seed for randomized scenarios");
    corpus_cmd->add_option("--data", data_dir, "directory with cohomology fixtures");

    // global flags remain usable after a subcommand name
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();
    audit_cmd->fallthrough();

    CLI11_PARSE(app, argc, argv);

    auto started = std::chrono::steady_clock::now();
    json report;
    bool pass = true;
    try {
        if (*group_cmd) {
            GroupPtr g = group_of(preset);
            report["command"] = "group";
            report["name"] = g->name();
            report["order"] = g->order();
            report["degree"] = g->degree();
            report["num_classes"] = g->conjugacy_classes().size();
            report["statement"] =
                "orders, class counts, and representatives computed by exhaustive "
                "enumeration of the permutation group";
            if (list_classes) {
                json cls = json::array();
                for (const auto& c : g->conjugacy_classes())
                    cls.push_back({{"representative",
                                    g->element(c.representative).to_cycle_string()},
                                   {"size", c.members.size()}});
                report["classes"] = cls;
            }
        } else if (*gset_cmd) {
            GroupPtr g = group_of(preset);
            if (power > 0) {
                long long points = 1;
                for (int i = 0; i < power; ++i) points *= alphabet;
                if (points * g->order() > env_budget(2000000))
                    throw std::runtime_error("budget exceeded for the requested power");
            }
            GSet x = regular_gset ? left_translation_gset(g)
                     : power > 0 ? power_gset(
                                       g,
                                       [&] {
                                           std::vector<std::string> a;
                                           for (int i = 0; i < alphabet; ++i)
                                               a.push_back(std::string(
                                                   1, static_cast<char>('a' + i)));
                                           return a;
                                       }(),
                                       power)
                                 : natural_gset(g);
            ExtendedQuotient eq = extended_quotient(x);
            report["command"] = "gset";
            report["group"] = g->name();
            report["points"] = x.size();
            report["orbits"] = orbits(x).size();
            report["extended_quotient"] = eq.size;
            report["class_formula"] = eq.class_formula_size;
            report["statement"] =
                "the extended quotient size equals the class-formula count "
                "sum_{[g]} |X^g / Z(g)|";
            pass = eq.size == eq.class_formula_size;
        } else if (*chartable_cmd) {
            GroupPtr g = group_of(preset);
            CharTable t = character_table(g);
            report["command"] = "chartable";
            report["group"] = g->name();
            report["degrees"] = t.degrees;
            json rows = json::array();
            for (const auto& row : t.rows) {
                json vals = json::array();
                for (const auto& v : row.values) vals.push_back(v.to_string());
                rows.push_back(vals);
            }
            report["rows"] = rows;
            report["statement"] =
                "both orthogonality relations were verified exactly over the "
                "cyclotomic field before printing";
        } else if (*adequacy_cmd) {
            ExactSequence seq = sequence_of(preset);
            report["command"] = "adequacy";
            if (adequacy_regular) {
                std::vector<std::string> labels;
                for (const Perm& p : seq.H->elements()) labels.push_back(p.to_cycle_string());
                std::vector<std::vector<int>> rows;
                for (const Perm& gen : seq.G->generators()) {
                    int himg = seq.projection.images[seq.G->index_of(gen)];
                    std::vector<int> row(seq.H->order());
                    for (int x = 0; x < seq.H->order(); ++x)
                        row[x] = seq.H->index_of(seq.H->element(himg) * seq.H->element(x));
                    rows.push_back(std::move(row));
                }
                GSet x(seq.G, labels, rows);
                AdequacyReport rep = is_s0_adequate(x);
                json strata = json::array();
                for (const S0Report& s : rep.strata) strata.push_back(s0_json(s));
                report["strata"] = strata;
                report["adequate"] = rep.adequate;
                if (!rep.conclusion.empty()) report["conclusion"] = rep.conclusion;
                pass = rep.adequate;
            } else {
                S0Report s = in_s0(seq);
                report.update(s0_json(s));
                pass = s.in_s0;
            }
            report["statement"] =
                "membership requires an exact extension of the full sum of "
                "irreducibles of N plus matching stabilizer censuses on classes and "
                "characters";
        } else if (*verify_cmd) {
            report["command"] = "verify";
            if (heis_lemma > 0) {
                HeisenbergProof p = verify_heisenberg_lemma(heis_lemma);
                report["heisenberg_lemma"] = {{"n", p.n},
                                              {"degree", p.induced_degree},
                                              {"irreducible", p.irreducible},
                                              {"matches_endomorphisms",
                                               p.quotient_matches_endo},
                                              {"cyclic_presentation", p.cyclic_presentation},
                                              {"pass", p.pass}};
                pass = p.pass;
                report["statement"] =
                    "the induced representation from a faithful central character is "
                    "irreducible and yields the cyclic presentation of the twisted "
                    "quotient";
            } else {
                XiProof p = verify_xi(sequence_of(preset));
                report["xi"] = {{"sequence", p.sequence_name},
                                {"skew_dim", p.skew_dim},
                                {"commutant_dim", p.commutant_dim},
                                {"expected_dim", p.expected_dim},
                                {"multiplicative", p.multiplicative},
                                {"injective", p.injective},
                                {"lands_in_commutant", p.lands_in_commutant},
                                {"h_equivariant", p.h_equivariant},
                                {"pass", p.pass}};
                pass = p.pass;
                report["statement"] =
                    "right translation against the pulled-back delta functions is an "
                    "H-equivariant isomorphism onto the N-commutant, of dimension "
                    "|H|^2 |N|";
            }
        } else if (*zeta_cmd) {
            GsIdentityProof p = verify_gs_identity(zx, zdeg, brute_max, env_budget(2000000));
            report["command"] = "zeta";
            report["x"] = p.x;
            report["degree"] = p.degree;
            report["product_side"] = p.product_side;
            report["partition_side"] = p.partition_side;
            report["brute_side"] = p.brute_side;
            if (p.first_mismatch >= 0) report["first_mismatch"] = p.first_mismatch;
            report["pass"] = p.pass;
            report["statement"] =
                "prod_i (1-t^i)^{-x} equals the generating series of extended-quotient "
                "symmetric power counts, coefficient by coefficient";
            pass = p.pass;
        } else if (*torsion_cmd) {
            GradedGroup base = graded_from_json(slurp(base_file));
            json d3j = json::parse(slurp(d3_file));
            IntMatrix d3(d3j.at("rows").get<int>(), d3j.at("cols").get<int>());
            for (int i = 0; i < d3.rows; ++i)
                for (int j = 0; j < d3.cols; ++j)
                    d3.entries[i][j] = BigInt(d3j.at("entries")[i][j].get<long long>());
            FibrationAudit a = audit_fibration_bound(base, fiber_d, d3, rmax);
            report["command"] = "torsion audit";
            report["d"] = a.d;
            report["rows"] = a.rows;
            report["base_odd_torsion"] = a.base_odd_tau.str();
            report["bound"] = a.bound.str();
            report["after"] = a.after_tau.str();
            report["d3_nonzero"] = a.d3_nonzero;
            report["hypothesis"] = a.hypothesis;
            report["certified"] = a.certified;
            if (!a.conclusion.empty()) report["statement"] = a.conclusion;
            else
                report["statement"] =
                    "no strict bound is derivable without a nonzero transgression; the "
                    "audit declines to certify";
            pass = a.certified;
        } else if (*corpus_cmd) {
            report = corpus_run(data_dir, filter, seed);
            pass = report["all_pass"].get<bool>();
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::runtime_error& e) {
        std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        return msg.find("budget") != std::string::npos ? kBudget : kInputError;
    }

    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    render(report, format, timing, seconds);
    return pass ? kPass : kVerdictFail;
}
