#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sandpiles/sandpiles.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kVerificationFailed = 2;
constexpr int kBudgetExceeded = 3;
constexpr int kBadInput = 4;

using Json = nlohmann::ordered_json;

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

sandpiles::Model model_or_throw(const std::string& name) {
    const auto m = sandpiles::parse_model(name);
    if (!m) throw sandpiles::BadInput("unknown model \"" + name + "\"");
    return *m;
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sandpiles::BadInput("cannot open \"" + path + "\" for writing");
    out << payload;
}

struct EvolveArgs {
    std::int64_t n = 0;
    std::string model;
    std::string policy = "right";
    bool policy_given = false;
    std::int64_t steps = -1;
    std::string format = "text";
};

int run_evolve(const EvolveArgs& a) {
    using namespace sandpiles;
    const Model m = model_or_throw(a.model);
    if (a.policy_given && m != Model::Psspm)
        throw BadInput("--policy only applies to the psspm model");
    const GreedyPolicy policy =
        a.policy == "left" ? GreedyPolicy::LeftGreedy : GreedyPolicy::RightGreedy;

    std::vector<Configuration> trajectory{single_column(a.n)};
    while (a.steps < 0 || static_cast<std::int64_t>(trajectory.size()) - 1 < a.steps) {
        const Configuration& cur = trajectory.back();
        Configuration next;
        if (m == Model::Spm || m == Model::Sspm) {
            const auto events = collapsible(cur, m);
            if (events.empty()) break;
            next = apply_events(cur, {events.front()});
        } else if (m == Model::Pspm) {
            next = pspm_step(cur);
        } else {
            next = psspm_step_policy(cur, policy);
        }
        if (next == cur) break;
        trajectory.push_back(std::move(next));
    }

    std::string out;
    if (a.format == "json") {
        for (std::size_t i = 0; i < trajectory.size(); ++i) {
            Json rec;
            rec["index"] = i;
            rec["heights"] = trajectory[i].heights;
            rec["offset"] = trajectory[i].origin;
            out += rec.dump() + "\n";
        }
    } else {
        for (const Configuration& c : trajectory) out += to_literal(c) + "\n";
    }
    std::cout << out;
    return kOk;
}

struct ExploreArgs {
    std::int64_t n = 0;
    std::string model;
    bool forms = false;
    std::size_t budget = 5'000'000;
    std::string out_path;
    std::string format = "dot";
};

int run_explore(const ExploreArgs& a) {
    using namespace sandpiles;
    ExploreOptions opts;
    opts.mode = a.forms ? ExploreMode::Forms : ExploreMode::Positional;
    opts.budget = a.budget;
    const SpaceGraph g = explore(a.n, model_or_throw(a.model), opts);
    write_output(a.out_path, export_graph(g, parse_export_format(a.format)));
    return kOk;
}

int run_fixed_forms(std::int64_t n) {
    Json arr = Json::array();
    for (const sandpiles::Form& f : sandpiles::enumerate_fixed_point_forms(n))
        arr.push_back(f.heights);
    std::cout << arr.dump() << "\n";
    return kOk;
}

int run_verify(std::int64_t n_max) {
    using namespace sandpiles;
    if (n_max < 1) throw BadInput("--n-max must be at least 1");
    bool all_ok = true;
    for (Height n = 1; n <= n_max; ++n) {
        const MainTheoremReport r = verify_main_theorem(n);
        std::cout << "n=" << n << " forms=" << r.sspm_forms.size() << " expected=" << isqrt(n)
                  << " sspm_positional=" << r.sspm_fixed_positional
                  << " psspm_positional=" << r.psspm_fixed_positional
                  << (r.ok() ? " ok" : " MISMATCH") << "\n";
        if (!r.ok()) {
            all_ok = false;
            const auto dump_set = [](const char* tag, const std::set<Form>& fs) {
                std::cout << "  " << tag << ":";
                for (const Form& f : fs) std::cout << " " << to_literal(f);
                std::cout << "\n";
            };
            dump_set("sspm", r.sspm_forms);
            dump_set("psspm", r.psspm_forms);
            dump_set("enumerated", r.enumerated);
        }
    }
    return all_ok ? kOk : kVerificationFailed;
}

int run_construct(std::int64_t n, const std::string& target) {
    using namespace sandpiles;
    const ProcedureTrace trace = construct_path(n, parse_form(target));
    std::cout << export_trace(trace, ExportFormat::Json);
    return kOk;
}

int run_conjecture(std::int64_t k_max, const std::string& csv_path) {
    using namespace sandpiles;
    const auto rows = conjecture_scan(k_max);
    std::printf("%4s %10s %8s %10s %10s %13s\n", "k", "n", "d", "predicted", "ratio",
                "plateau_free");
    for (const ConjectureRow& r : rows)
        std::printf("%4lld %10lld %8lld %10lld %10s %13s\n", static_cast<long long>(r.k),
                    static_cast<long long>(r.n), static_cast<long long>(r.d),
                    static_cast<long long>(11 * r.k + 4), fixed6(r.ratio).c_str(),
                    r.plateau_free ? "yes" : "no");
    std::printf("conjectured limit ratio: 11/8 = %s\n", fixed6(11.0 / 8.0).c_str());
    if (!csv_path.empty()) {
        std::string csv = "k,n,d,predicted,ratio,plateau_free\n";
        for (const ConjectureRow& r : rows)
            csv += std::to_string(r.k) + "," + std::to_string(r.n) + "," + std::to_string(r.d) +
                   "," + std::to_string(11 * r.k + 4) + "," + fixed6(r.ratio) + "," +
                   (r.plateau_free ? "true" : "false") + "\n";
        write_output(csv_path, csv);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sequential and parallel sandpile models: evolution, exploration, and the "
                 "constructive path to any fixed-point form"};
    app.require_subcommand(1);

    EvolveArgs evolve_args;
    CLI::App* evolve = app.add_subcommand("evolve", "Evolve (n) step by step");
    evolve->add_option("--n", evolve_args.n, "Starting weight")->required();
    evolve->add_option("--model", evolve_args.model, "spm, pspm, sspm, or psspm")->required();
    evolve->add_option("--policy", evolve_args.policy, "Direction for ambivalent columns (psspm)")
        ->check(CLI::IsMember({"right", "left"}));
    evolve->add_option("--steps", evolve_args.steps, "Stop after this many steps")
        ->check(CLI::NonNegativeNumber);
    evolve->add_option("--format", evolve_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    ExploreArgs explore_args;
    CLI::App* explore = app.add_subcommand("explore", "Breadth-first closure of the state space");
    explore->add_option("--n", explore_args.n, "Starting weight")->required();
    explore->add_option("--model", explore_args.model, "spm, pspm, sspm, or psspm")->required();
    explore->add_flag("--forms", explore_args.forms, "Quotient nodes by translation");
    explore->add_option("--budget", explore_args.budget, "Node budget")
        ->check(CLI::PositiveNumber);
    explore->add_option("--out", explore_args.out_path, "Output file (default stdout)");
    explore->add_option("--format", explore_args.format, "dot, json, or csv")
        ->check(CLI::IsMember({"dot", "json", "csv"}));

    std::int64_t fixed_forms_n = 0;
    CLI::App* fixed_forms =
        app.add_subcommand("fixed-forms", "Closed-form enumeration of fixed-point forms");
    fixed_forms->add_option("--n", fixed_forms_n, "Weight")->required();

    std::int64_t verify_n_max = 0;
    CLI::App* verify =
        app.add_subcommand("verify", "Check the fixed-point-form equality for n = 1..n-max");
    verify->add_option("--n-max", verify_n_max, "Largest weight to check")->required();

    std::int64_t construct_n = 0;
    std::string construct_target;
    CLI::App* construct =
        app.add_subcommand("construct", "Three-phase path from (n) to a fixed-point form");
    construct->add_option("--n", construct_n, "Weight")->required();
    construct->add_option("--target", construct_target, "Comma-separated target heights")
        ->required();

    std::int64_t conjecture_k_max = 0;
    std::string conjecture_csv;
    CLI::App* conjecture =
        app.add_subcommand("conjecture", "Right-greedy distance table over n = (8k+4)^2");
    conjecture->add_option("--k-max", conjecture_k_max, "Largest k")->required();
    conjecture->add_option("--csv", conjecture_csv, "Also write the table to this CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*evolve) {
            evolve_args.policy_given = evolve->count("--policy") > 0;
            return run_evolve(evolve_args);
        }
        if (*explore) return run_explore(explore_args);
        if (*fixed_forms) return run_fixed_forms(fixed_forms_n);
        if (*verify) return run_verify(verify_n_max);
        if (*construct) return run_construct(construct_n, construct_target);
        if (*conjecture) return run_conjecture(conjecture_k_max, conjecture_csv);
    } catch (const sandpiles::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const sandpiles::NotAFixedPointForm& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const sandpiles::UnknownFormat& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const sandpiles::BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const sandpiles::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kOk;
}
