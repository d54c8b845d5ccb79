#include "kozmo/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "kozmo/bench.hpp"
#include "kozmo/decompositions.hpp"
#include "kozmo/errors.hpp"
#include "kozmo/ideal_io.hpp"
#include "kozmo/mvt.hpp"
#include "kozmo/oracle.hpp"
#include "kozmo/simplicial.hpp"

namespace kozmo {

namespace {

using nlohmann::ordered_json;

constexpr std::size_t kVerifyHilbertDegree = 20;

struct Settings {
    bool json = false;
    unsigned threads = 1;
    std::string file;
    std::string output;
    std::string strategy = "lex";
    std::string bench_spec;
    bool closure = false;
    bool exact = false;
    bool dump = false;
    bool no_prune = false;
    std::size_t degree = 10;
    BenchSpec random;
};

ordered_json exponents_json(const Multidegree& mu) { return ordered_json(std::vector<Exponent>(mu.exponents().begin(), mu.exponents().end())); }

ordered_json names_json(VarSet vars, const std::vector<std::string>& names) {
    auto out = ordered_json::array();
    for (auto i : vars.indices()) out.push_back(names[i]);
    return out;
}

ordered_json document_json(const IdealDocument& doc) {
    ordered_json j;
    j["variables"] = doc.variable_names;
    auto gens = ordered_json::array();
    for (const auto& g : doc.generators()) gens.push_back(exponents_json(g));
    j["generators"] = std::move(gens);
    return j;
}

ordered_json verdict_json(const oracle::Verdict& v) {
    ordered_json j;
    j["ok"] = v.ok;
    j["sampled"] = v.sampled;
    if (v.witness) j["witness"] = exponents_json(*v.witness);
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
}

PivotStrategy strategy_of(const Settings& s) {
    return s.strategy == "last" ? PivotStrategy::last_generator() : PivotStrategy::lex_first();
}

MvtOptions mvt_options(const Settings& s) {
    MvtOptions o;
    o.strategy = strategy_of(s);
    o.threads = s.threads;
    return o;
}

class Runner {
public:
    Runner(const Settings& settings, std::ostream& out) : s_(settings), out_(out) {}

    int corners() {
        const auto doc = read_ideal_file(s_.file);
        const auto ideal = s_.closure ? artinian_closure(doc.ideal) : doc.ideal;
        const auto corners = compute_b_n_minus_1(ideal, mvt_options(s_));
        if (s_.json) {
            auto j = document_json(doc);
            auto list = ordered_json::array();
            for (const auto& c : corners) list.push_back(exponents_json(c));
            j["corners"] = std::move(list);
            emit(j);
        } else {
            for (const auto& c : corners) out_ << format_monomial(c, doc.variable_names) << '\n';
        }
        return kExitOk;
    }

    int decompose() {
        const auto doc = read_ideal_file(s_.file);
        const auto components = irreducible_decomposition(doc.ideal, mvt_options(s_));
        if (s_.json) {
            auto j = document_json(doc);
            auto list = ordered_json::array();
            for (const auto& c : components) list.push_back(exponents_json(c.exponents));
            j["components"] = std::move(list);
            emit(j);
        } else {
            for (const auto& c : components) out_ << format_component(c, doc.variable_names) << '\n';
        }
        return kExitOk;
    }

    int stanley() {
        const auto doc = read_ideal_file(s_.file);
        const auto sd = stanley_general(doc.ideal, mvt_options(s_));
        if (s_.json) {
            auto j = document_json(doc);
            j["cones"] = cones_json(sd, doc.variable_names);
            emit(j);
        } else {
            for (const auto& cone : sd.cones) out_ << format_cone(cone, doc.variable_names) << '\n';
        }
        return kExitOk;
    }

    int betti() {
        const auto doc = read_ideal_file(s_.file);
        const auto tree = build_mvt(doc.ideal, strategy_of(s_), false);
        const auto bounds = betti_bounds(tree);
        std::map<std::pair<std::size_t, Multidegree>, std::size_t> exact;
        if (s_.exact) exact = oracle::betti_numbers(doc.ideal);

        // Keys from both sides; an exact rank the bounds missed would show up here.
        std::map<BettiKey, std::pair<BettiBound, std::optional<std::size_t>>> rows;
        for (const auto& [key, bound] : bounds) rows[key].first = bound;
        for (const auto& [key, rank] : exact) rows[BettiKey{key.first, key.second}].second = rank;
        if (s_.exact) {
            for (auto& [key, row] : rows) {
                if (!row.second) row.second = 0;
            }
        }

        if (s_.json) {
            auto j = document_json(doc);
            auto list = ordered_json::array();
            for (const auto& [key, row] : rows) {
                ordered_json e;
                e["i"] = key.degree;
                e["mu"] = exponents_json(key.mu);
                e["lower"] = row.first.lower;
                e["upper"] = row.first.upper;
                if (row.second) e["exact"] = *row.second;
                list.push_back(std::move(e));
            }
            j["betti"] = std::move(list);
            emit(j);
        } else {
            for (const auto& [key, row] : rows) {
                out_ << key.degree << ' ' << format_monomial(key.mu, doc.variable_names) << " lower=" << row.first.lower
                     << " upper=" << row.first.upper;
                if (row.second) out_ << " exact=" << *row.second;
                out_ << '\n';
            }
        }
        return kExitOk;
    }

    int hilbert() {
        const auto doc = read_ideal_file(s_.file);
        const auto series = hilbert_series(stanley_general(doc.ideal, mvt_options(s_)));
        const auto coefficients = series.coefficients(s_.degree);
        if (s_.json) {
            auto j = document_json(doc);
            ordered_json h;
            auto terms = ordered_json::array();
            for (const auto& t : series.terms) terms.push_back({{"shift", t.shift}, {"power", t.denominator_power}});
            h["terms"] = std::move(terms);
            h["series"] = series.to_string();
            h["coefficients"] = coefficients;
            j["hilbert"] = std::move(h);
            emit(j);
        } else {
            out_ << "H(t) = " << series.to_string() << '\n';
            out_ << "coefficients:";
            for (std::size_t d = 0; d < coefficients.size(); ++d) out_ << (d ? ", " : " ") << coefficients[d];
            out_ << '\n';
        }
        return kExitOk;
    }

    int mvt() {
        const auto doc = read_ideal_file(s_.file);
        const auto tree = build_mvt(doc.ideal, strategy_of(s_), !s_.no_prune);
        std::size_t relevant = 0;
        std::size_t pruned = 0;
        for (const auto& node : tree.nodes()) {
            relevant += node.relevant ? 1 : 0;
            pruned += node.pruned != kNotPruned ? 1 : 0;
        }
        if (s_.json) {
            auto j = document_json(doc);
            ordered_json t;
            t["strategy"] = s_.strategy;
            t["pruned"] = tree.is_pruned();
            t["nodes"] = tree.size();
            t["relevant"] = relevant;
            if (s_.dump) {
                auto nodes = ordered_json::array();
                for (const auto& node : tree.nodes()) {
                    ordered_json e;
                    std::ostringstream position;
                    position << node.position();
                    e["position"] = position.str();
                    e["dimension"] = node.dimension;
                    e["relevant"] = node.relevant;
                    auto gens = ordered_json::array();
                    for (const auto& g : node.ideal.generators()) gens.push_back(exponents_json(g));
                    e["generators"] = std::move(gens);
                    auto reasons = ordered_json::array();
                    if (node.pruned & kPrunedByGenerators) reasons.push_back("generators");
                    if (node.pruned & kPrunedByIndeterminates) reasons.push_back("indeterminates");
                    if (node.pruned & kPrunedByDimension) reasons.push_back("dimension");
                    e["pruned"] = std::move(reasons);
                    nodes.push_back(std::move(e));
                }
                t["tree"] = std::move(nodes);
            }
            j["mvt"] = std::move(t);
            emit(j);
        } else if (s_.dump) {
            out_ << dump_tree(tree, doc.variable_names);
        } else {
            out_ << "nodes: " << tree.size() << "\nrelevant: " << relevant << "\npruned leaves: " << pruned << '\n';
        }
        return kExitOk;
    }

    int random() {
        const auto doc = make_document(random_ideal(s_.random));
        if (!s_.output.empty()) {
            std::ofstream file(s_.output);
            if (!file) throw InvalidInputError("cannot write " + s_.output);
            file << format_ideal(doc);
            if (!file) throw InvalidInputError("cannot write " + s_.output);
        }
        if (s_.json) {
            emit(document_json(doc));
        } else if (s_.output.empty()) {
            out_ << format_ideal(doc);
        }
        return kExitOk;
    }

    int verify() {
        const auto doc = read_ideal_file(s_.file);
        const auto& ideal = doc.ideal;
        const auto options = mvt_options(s_);
        const auto n = ideal.ring_dimension();

        ordered_json report;
        bool all_ok = true;
        auto record = [&](const std::string& name, const oracle::Verdict& v) {
            report[name] = verdict_json(v);
            all_ok = all_ok && v.ok;
        };
        auto skip = [&](const std::string& name, const std::string& why) {
            report[name] = {{"ok", true}, {"skipped", why}};
        };

        const auto components = irreducible_decomposition(ideal, options);
        record("irreducible", oracle::verify_irreducible(ideal, components));
        const auto sd = stanley_general(ideal, options);
        record("stanley", oracle::verify_stanley(ideal, sd));

        try {
            const auto box = oracle::maximal_standard_monomials_box(ideal, true);
            auto corners = compute_b_n_minus_1(artinian_closure(ideal), options);
            for (auto& c : corners) c = lowered(c);
            oracle::Verdict v;
            if (corners != box) {
                v.ok = false;
                v.detail = "maximal corners of the closure differ from the box scan";
            }
            record("corners", v);
        } catch (const ScaleError& e) {
            skip("corners", e.what());
        }

        try {
            const auto coefficients = hilbert_series(sd).coefficients(kVerifyHilbertDegree);
            oracle::Verdict v;
            for (std::size_t d = 0; d <= kVerifyHilbertDegree && v.ok; ++d) {
                const auto count = oracle::standard_monomial_count(ideal, d);
                if (count != coefficients[d]) {
                    v.ok = false;
                    v.detail = "degree " + std::to_string(d) + ": series gives " + std::to_string(coefficients[d]) +
                               ", count gives " + std::to_string(count);
                }
            }
            record("hilbert", v);
        } catch (const ScaleError& e) {
            skip("hilbert", e.what());
        }

        {
            std::size_t expected = 0;
            for (const auto& c : components) expected = std::max(expected, n - support_of(c.exponents).size());
            oracle::Verdict v;
            const auto krull = krull_dimension(sd);
            if (krull != expected) {
                v.ok = false;
                v.detail = "krull dimension " + std::to_string(krull) + ", components give " + std::to_string(expected);
            }
            record("krull", v);
        }

        if (s_.json) {
            auto j = document_json(doc);
            report["ok"] = all_ok;
            j["verify"] = std::move(report);
            emit(j);
        } else {
            for (const auto& [name, entry] : report.items()) {
                out_ << name << ": ";
                if (entry.contains("skipped")) {
                    out_ << "skipped (" << entry["skipped"].get<std::string>() << ")";
                } else {
                    out_ << (entry["ok"].get<bool>() ? "ok" : "FAILED");
                    if (entry.value("sampled", false)) out_ << " (sampled)";
                    if (entry.contains("detail")) out_ << " - " << entry["detail"].get<std::string>();
                    if (entry.contains("witness")) {
                        Multidegree w(n);
                        for (std::size_t i = 0; i < n; ++i) w[i] = entry["witness"][i].get<Exponent>();
                        out_ << " at " << format_monomial(w, doc.variable_names);
                    }
                }
                out_ << '\n';
            }
        }
        return all_ok ? kExitOk : kExitFailure;
    }

    int bench() {
        const auto spec = parse_bench_spec(s_.bench_spec);
        const auto report = run_bench(spec, mvt_options(s_));
        if (s_.json) {
            ordered_json j;
            ordered_json b;
            b["spec"] = to_string(spec);
            b["threads"] = s_.threads;
            auto runs = ordered_json::array();
            for (const auto& r : report.runs) {
                runs.push_back({{"seed", r.seed},
                                {"generators", r.generators},
                                {"components", r.components},
                                {"seconds", r.seconds}});
            }
            b["runs"] = std::move(runs);
            b["mean_seconds"] = report.mean_seconds();
            j["bench"] = std::move(b);
            emit(j);
        } else {
            out_ << "spec: " << to_string(spec) << " threads=" << s_.threads << '\n';
            out_ << "seed  |min(I)|  |irr(I)|  seconds\n";
            for (const auto& r : report.runs) {
                out_ << r.seed << "  " << r.generators << "  " << r.components << "  " << r.seconds << '\n';
            }
            out_ << "mean seconds: " << report.mean_seconds() << '\n';
        }
        return kExitOk;
    }

private:
    ordered_json cones_json(const StanleyDecomposition& sd, const std::vector<std::string>& names) {
        auto list = ordered_json::array();
        for (const auto& cone : sd.cones) {
            list.push_back({{"base", exponents_json(cone.base)}, {"free", names_json(cone.free, names)}});
        }
        return list;
    }

    void emit(const ordered_json& j) { out_ << j.dump(2) << '\n'; }

    const Settings& s_;
    std::ostream& out_;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Maximal corners, Betti bounds, irreducible and Stanley decompositions of monomial ideals", "kozmo"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", s.json, "Machine-readable output");
    app.add_option("--threads", s.threads, "Worker threads for the tree search")->check(CLI::Range(1U, 256U));

    auto with_file = [&](CLI::App* sub) {
        sub->add_option("file", s.file, "Ideal file")->required();
        return sub;
    };
    auto* corners = with_file(app.add_subcommand("corners", "Maximal corners B_{n-1}(I), lex descending"));
    corners->add_flag("--closure", s.closure, "Use the artinian closure of I");
    auto* decompose = with_file(app.add_subcommand("decompose", "Irredundant irreducible decomposition"));
    auto* stanley = with_file(app.add_subcommand("stanley", "Stanley decomposition of R/I"));
    auto* betti = with_file(app.add_subcommand("betti", "Betti number bounds from the full Mayer-Vietoris tree"));
    betti->add_flag("--exact", s.exact, "Add brute-force ranks over the lcm lattice (n <= 5)");
    auto* hilbert = with_file(app.add_subcommand("hilbert", "Hilbert series of R/I"));
    hilbert->add_option("--degree", s.degree, "Last coefficient to print")->required();
    auto* mvt = with_file(app.add_subcommand("mvt", "Mayer-Vietoris tree"));
    mvt->add_flag("--dump", s.dump, "Print every node");
    mvt->add_flag("--no-prune", s.no_prune, "Build the full tree");
    for (auto* sub : {corners, decompose, stanley, hilbert, mvt}) {
        sub->add_option("--strategy", s.strategy, "Pivot rule")->check(CLI::IsMember({"lex", "last"}));
    }
    betti->add_option("--strategy", s.strategy, "Pivot rule")->check(CLI::IsMember({"lex", "last"}));
    auto* random = app.add_subcommand("random", "Random ideal");
    random->add_option("--vars", s.random.vars, "Number of variables")->required()->check(CLI::Range(1, 64));
    random->add_option("--gens", s.random.gens, "Number of minimal generators")->required()->check(CLI::PositiveNumber);
    random->add_option("--max-exp", s.random.max_exp, "Largest exponent")->required()->check(CLI::PositiveNumber);
    random->add_option("--seed", s.random.seed, "Seed")->required();
    random->add_flag("--generic", s.random.generic, "Distinct non-zero exponents per variable");
    random->add_option("-o,--output", s.output, "Write the ideal to this file");
    auto* verify = with_file(app.add_subcommand("verify", "Check all results against the brute-force oracle"));
    verify->add_option("--strategy", s.strategy, "Pivot rule")->check(CLI::IsMember({"lex", "last"}));
    auto* bench = app.add_subcommand("bench", "Time decompositions of random ideals");
    bench->add_option("--spec", s.bench_spec, "e.g. vars=10,gens=40,max-exp=30,seed=1,generic,reps=3")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Runner runner(s, out);
    try {
        if (*corners) return runner.corners();
        if (*decompose) return runner.decompose();
        if (*stanley) return runner.stanley();
        if (*betti) return runner.betti();
        if (*hilbert) return runner.hilbert();
        if (*mvt) return runner.mvt();
        if (*random) return runner.random();
        if (*verify) return runner.verify();
        if (*bench) return runner.bench();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace kozmo
