#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "infoclust/clustering.hpp"
#include "infoclust/duality.hpp"
#include "infoclust/featsel.hpp"
#include "infoclust/model_io.hpp"

using namespace infoclust;

namespace {

// Exit-code contract: 0 ok, 1 usage, 2 model invalid, 3 precondition,
// 4 duality counter-example.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitModel = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCounterExample = 4;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string model_path;
    std::string set_csv;
    std::string gamma_str;
    std::string format = "human";
    std::string plot_csv;
    int size_k = -1;
    bool sweep = false;
};

LoadedModel load_checked(const std::string& path) {
    LoadedModel lm = load_model_file(path);
    ValidationReport report = lm.model.validate();
    for (const auto& w : report.warnings)
        std::cerr << "warning: " << w << "\n";
    if (!report.ok()) {
        for (const auto& e : report.errors)
            std::cerr << "error: " << e << "\n";
        throw ModelParseError("model failed validation");
    }
    return lm;
}

Subset parse_set_arg(const GroundSet& ground, const std::string& csv) {
    try {
        return parse_variable_set(ground, csv);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

Value parse_gamma(const std::string& s, Value::Kind kind) {
    if (s.empty())
        throw UsageError("--gamma is required");
    try {
        return Value::parse(s, kind);
    } catch (const Error& e) {
        throw UsageError(std::string("bad --gamma: ") + e.what());
    }
}

std::vector<Value> parse_gamma_list(const std::string& csv, Value::Kind kind) {
    std::vector<Value> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_gamma(item, kind));
    return out;
}

FeatureProblem make_problem(const LoadedModel& lm) {
    if (!lm.dependent)
        throw PreconditionViolated("model has no \"dependent\" variable");
    return FeatureProblem::make(lm.model, *lm.dependent);
}

json subset_json(const Subset& b, const GroundSet& g) {
    json arr = json::array();
    for (int e : b.elements())
        arr.push_back(g.name(e));
    return arr;
}

json partition_json(const Partition& p, const GroundSet& g) {
    json arr = json::array();
    for (const auto& b : p.blocks())
        arr.push_back(subset_json(b, g));
    return arr;
}

void emit(const Options& opt, const json& machine, const std::string& human) {
    if (opt.format == "machine")
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << human;
}

int cmd_entropy(const Options& opt) {
    LoadedModel lm = load_checked(opt.model_path);
    Subset b = parse_set_arg(lm.model.ground(), opt.set_csv);
    Value h = lm.model.entropy(b);
    emit(opt, json{{"set", subset_json(b, lm.model.ground())}, {"entropy", h.str()}},
         h.str() + "\n");
    return kExitOk;
}

int cmd_mmi(const Options& opt) {
    LoadedModel lm = load_checked(opt.model_path);
    Subset b = parse_set_arg(lm.model.ground(), opt.set_csv);
    Value v = mmi(lm.model, b);
    emit(opt, json{{"set", subset_json(b, lm.model.ground())}, {"mmi", v.str()}},
         v.str() + "\n");
    return kExitOk;
}

int cmd_clusters(const Options& opt, bool extended) {
    LoadedModel lm = load_checked(opt.model_path);
    Value gamma = parse_gamma(opt.gamma_str, lm.model.kind());
    ClusterSet cs =
        extended ? extended_clusters(lm.model, gamma) : clusters(lm.model, gamma);
    json arr = json::array();
    std::ostringstream human;
    for (const auto& c : cs.clusters) {
        arr.push_back(subset_json(c, lm.model.ground()));
        human << c.str(lm.model.ground()) << "\n";
    }
    if (cs.clusters.empty())
        human << "(none)\n";
    emit(opt, json{{"gamma", gamma.str()}, {"extended", extended}, {"clusters", arr}},
         human.str());
    return kExitOk;
}

int cmd_psp(const Options& opt) {
    LoadedModel lm = load_checked(opt.model_path);
    PspResult r = psp(lm.model);
    const GroundSet& g = lm.model.ground();

    if (!opt.plot_csv.empty()) {
        for (const auto& gamma : parse_gamma_list(opt.plot_csv, lm.model.kind())) {
            DtResult dt = dilworth_truncation(lm.model, gamma);
            std::cout << gamma.str() << "\t" << dt.value.str() << "\t"
                      << dt.finest.str(g) << "\n";
        }
        return kExitOk;
    }

    json jcrit = json::array();
    json jchain = json::array();
    std::ostringstream human;
    human << "critical values: ";
    for (std::size_t i = 0; i < r.critical_values.size(); ++i) {
        jcrit.push_back(r.critical_values[i].str());
        human << (i ? ", " : "") << r.critical_values[i].str();
    }
    human << "\nchain:\n";
    for (const auto& p : r.chain) {
        jchain.push_back(partition_json(p, g));
        human << "  " << p.str(g) << "\n";
    }
    emit(opt, json{{"critical_values", jcrit}, {"chain", jchain}}, human.str());
    return kExitOk;
}

int cmd_feature_select(const Options& opt) {
    LoadedModel lm = load_checked(opt.model_path);
    FeatureProblem prob = make_problem(lm);
    bool has_gamma = !opt.gamma_str.empty();
    bool has_size = opt.size_k >= 0;
    if (has_gamma == has_size)
        throw UsageError("feature-select needs exactly one of --gamma or --size");

    std::ostringstream human;
    if (has_gamma) {
        RelaxResult r = relax_optimize(prob, parse_gamma(opt.gamma_str, lm.model.kind()));
        json arr = json::array();
        for (const auto& b : r.optimal) {
            arr.push_back(prob.feature_set_str(b));
            human << prob.feature_set_str(b) << "\n";
        }
        human << "f* = " << r.value.str() << "\n";
        emit(opt,
             json{{"gamma", r.gamma.str()},
                  {"value", r.value.str()},
                  {"optimizers", arr},
                  {"minimal", prob.feature_set_str(r.minimal)},
                  {"maximal", prob.feature_set_str(r.maximal)}},
             human.str());
    } else {
        SizeConstrainedResult r = size_constrained(prob, opt.size_k);
        json arr = json::array();
        for (const auto& b : r.argmax) {
            arr.push_back(prob.feature_set_str(b));
            human << prob.feature_set_str(b) << "\n";
        }
        human << "value = " << r.value.str() << "\n";
        emit(opt, json{{"size", opt.size_k}, {"value", r.value.str()}, {"argmax", arr}},
             human.str());
    }
    return kExitOk;
}

int cmd_pp(const Options& opt) {
    LoadedModel lm = load_checked(opt.model_path);
    FeatureProblem prob = make_problem(lm);

    if (!opt.plot_csv.empty()) {
        for (const auto& gamma : parse_gamma_list(opt.plot_csv, lm.model.kind())) {
            RelaxResult r = relax_optimize(prob, gamma);
            std::cout << gamma.str() << "\t" << r.value.str() << "\t"
                      << prob.feature_set_str(r.maximal) << "\n";
        }
        return kExitOk;
    }

    PpResult r = pp(prob);
    json jbp = json::array();
    std::ostringstream human;
    human << "breakpoints: ";
    for (std::size_t i = 0; i < r.breakpoints.size(); ++i) {
        jbp.push_back(
            json{{"gamma", r.breakpoints[i].str()}, {"value", r.tangent_values[i].str()}});
        human << (i ? ", " : "") << r.breakpoints[i].str();
    }
    human << "\nregions (maximal optimizer per interval):\n";
    json jregions = json::array();
    for (const auto& reg : r.regions) {
        json members = json::array();
        for (const auto& b : reg.members)
            members.push_back(prob.feature_set_str(b));
        jregions.push_back(json{{"minimal", prob.feature_set_str(reg.minimal)},
                                {"maximal", prob.feature_set_str(reg.maximal)},
                                {"optimizers", members}});
        human << "  " << prob.feature_set_str(reg.maximal) << "\n";
    }
    emit(opt, json{{"breakpoints", jbp}, {"regions", jregions}}, human.str());
    return kExitOk;
}

json duality_json(const DualityReport& rep, const FeatureProblem& prob,
                  const GroundSet& lifted_ground) {
    json fwd = json::array(), bwd = json::array();
    for (const auto& e : rep.forward)
        fwd.push_back(json{{"optimizer", prob.feature_set_str(e.optimizer)},
                           {"holds", e.holds}});
    for (const auto& e : rep.backward)
        bwd.push_back(json{{"block", e.block.str(lifted_ground)}, {"holds", e.holds}});
    return json{{"gamma", rep.gamma.str()},
                {"independent", rep.independent},
                {"forward", fwd},
                {"backward", bwd},
                {"pass", rep.pass()}};
}

void print_duality_human(const DualityReport& rep, const FeatureProblem& prob,
                         const GroundSet& lifted_ground, std::ostream& os) {
    os << "gamma = " << rep.gamma.str() << (rep.pass() ? "  PASS" : "  FAIL")
       << (rep.independent ? "" : "  (dependent features)") << "\n";
    for (const auto& e : rep.forward)
        if (!e.holds)
            os << "  forward fails: optimizer " << prob.feature_set_str(e.optimizer)
               << " has no matching optimal-partition block\n";
    for (const auto& e : rep.backward)
        if (!e.holds)
            os << "  backward fails: block " << e.block.str(lifted_ground)
               << " has no matching relax optimizer\n";
}

int cmd_duality(const Options& opt) {
    LoadedModel lm = load_checked(opt.model_path);
    FeatureProblem prob = make_problem(lm);
    bool has_gamma = !opt.gamma_str.empty();
    if (has_gamma == opt.sweep)
        throw UsageError("duality needs exactly one of --gamma or --sweep");
    GroundSet lifted_ground = lift(prob).ground();

    std::vector<DualityReport> reports;
    if (has_gamma)
        reports.push_back(verify_duality(prob, parse_gamma(opt.gamma_str, lm.model.kind())));
    else
        reports = sweep_duality(prob);

    bool all_pass = true;
    json arr = json::array();
    std::ostringstream human;
    for (const auto& rep : reports) {
        all_pass = all_pass && rep.pass();
        arr.push_back(duality_json(rep, prob, lifted_ground));
        print_duality_human(rep, prob, lifted_ground, human);
    }
    emit(opt, arr, human.str());
    return all_pass ? kExitOk : kExitCounterExample;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Info-clustering and information-theoretic feature selection"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--model", opt.model_path, "model document (JSON)")->required();
        sub->add_option("--format", opt.format, "human | machine")
            ->check(CLI::IsMember({"human", "machine"}));
    };

    auto* s_entropy = app.add_subcommand("entropy", "H of a set of variables");
    add_common(s_entropy);
    s_entropy->add_option("--set", opt.set_csv, "comma-separated variable names")
        ->required();

    auto* s_mmi = app.add_subcommand("mmi", "multivariate mutual information of a set");
    add_common(s_mmi);
    s_mmi->add_option("--set", opt.set_csv, "comma-separated variable names")->required();

    auto* s_clusters = app.add_subcommand("clusters", "clusters at a threshold");
    add_common(s_clusters);
    s_clusters->add_option("--gamma", opt.gamma_str, "threshold")->required();

    auto* s_ext =
        app.add_subcommand("extended-clusters", "extended cluster set at a threshold");
    add_common(s_ext);
    s_ext->add_option("--gamma", opt.gamma_str, "threshold")->required();

    auto* s_psp = app.add_subcommand("psp", "principal sequence of partitions");
    add_common(s_psp);
    s_psp->add_option("--plot", opt.plot_csv,
                      "emit TSV rows (gamma, value, partition) at these gammas");

    auto* s_fs = app.add_subcommand("feature-select", "relaxed or size-constrained selection");
    add_common(s_fs);
    s_fs->add_option("--gamma", opt.gamma_str, "relaxation threshold");
    s_fs->add_option("--size", opt.size_k, "exact selection size");

    auto* s_pp = app.add_subcommand("pp", "principal partition of the relaxation");
    add_common(s_pp);
    s_pp->add_option("--plot", opt.plot_csv,
                     "emit TSV rows (gamma, value, maximal optimizer) at these gammas");

    auto* s_dual = app.add_subcommand("duality", "verify the clustering correspondence");
    add_common(s_dual);
    s_dual->add_option("--gamma", opt.gamma_str, "single threshold");
    s_dual->add_flag("--sweep", opt.sweep, "verify across all breakpoints and midpoints");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (s_entropy->parsed())
            return cmd_entropy(opt);
        if (s_mmi->parsed())
            return cmd_mmi(opt);
        if (s_clusters->parsed())
            return cmd_clusters(opt, false);
        if (s_ext->parsed())
            return cmd_clusters(opt, true);
        if (s_psp->parsed())
            return cmd_psp(opt);
        if (s_fs->parsed())
            return cmd_feature_select(opt);
        if (s_pp->parsed())
            return cmd_pp(opt);
        if (s_dual->parsed())
            return cmd_duality(opt);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ModelParseError& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return kExitModel;
    } catch (const PreconditionViolated& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const FloatEqualityAmbiguous& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const NoUniqueFinest& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const GroundTooLarge& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const SubsetTooSmall& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const BadSize& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return kExitModel;
    }
}
