// defzero: deficiency analysis of reaction network files and Monte Carlo
// experiments on Erdős–Rényi random binary reaction networks.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 input data error.

#include "defzero/errors.hpp"
#include "defzero/experiments.hpp"
#include "defzero/netparse.hpp"
#include "defzero/output.hpp"
#include "defzero/sampler.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned threads_from_env()
{
    const char* raw = std::getenv("DEFZERO_THREADS");
    if (raw == nullptr || *raw == '\0')
        return std::max(1u, std::thread::hardware_concurrency());
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value < 1 || value > 4096)
        throw UsageError("DEFZERO_THREADS must be a positive integer, got '" + std::string(raw) + "'");
    return static_cast<unsigned>(value);
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw UsageError("cannot open output file " + out_path);
    out << text;
}

void emit_record(const defzero::OutputRecord& record, const std::string& format, const std::string& out_path)
{
    if (format == "json")
        emit(record.to_json().dump(2) + "\n", out_path);
    else
        emit(record.to_csv(), out_path);
}

std::vector<std::uint32_t> grid_or_single(const std::vector<std::uint32_t>& grid, std::uint32_t n)
{
    return grid.empty() ? std::vector<std::uint32_t>{n} : grid;
}

struct AnalyzeArgs {
    std::string path;
    std::string format = "text";
};

int run_analyze(const AnalyzeArgs& args)
{
    std::ifstream in(args.path, std::ios::binary);
    if (!in) {
        std::cerr << "defzero: cannot read " << args.path << "\n";
        return kExitUsage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    defzero::NetworkDocument doc;
    try {
        doc = defzero::parse_network(buf.str());
    } catch (const defzero::ParseError& e) {
        std::cerr << args.path << ":" << e.line() << ":" << e.column() << ": " << e.what() << "\n";
        return kExitData;
    }
    const auto net = defzero::to_reaction_network(doc);
    const auto report = defzero::deficiency(net);

    if (args.format == "json") {
        defzero::OutputRecord record;
        record.command = "analyze";
        record.config = {{"path", args.path}};
        auto out = record.to_json();
        out["species"] = doc.species;
        out["report"] = defzero::report_to_json(report);
        out.erase("rows");
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << defzero::render_report_text(report, net.species_count());
    }
    return kExitOk;
}

struct SweepArgs {
    std::vector<std::uint32_t> n_grid;
    double c = 1.0;
    double beta = 3.0;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string out;
};

int run_sweep(const SweepArgs& args)
{
    defzero::SweepSpec spec{args.n_grid, args.c, args.beta, args.trials, args.seed};
    try {
        spec.validate();
    } catch (const defzero::DomainError& e) {
        throw UsageError(e.what());
    }
    const auto rows = defzero::sweep_threshold(spec, {threads_from_env()});

    defzero::OutputRecord record;
    record.command = "sweep";
    record.config = {{"n_grid", args.n_grid}, {"c", args.c},       {"beta", args.beta},
                     {"trials", args.trials}, {"seed", args.seed}};
    record.columns = defzero::estimate_columns();
    for (const auto& r : rows)
        record.rows.push_back(defzero::estimate_cells(r));
    emit_record(record, args.format, args.out);
    return kExitOk;
}

struct ExperimentArgs {
    std::string name;
    std::uint32_t n = 0;
    std::vector<std::uint32_t> n_grid;
    std::uint64_t k = 0;
    double p = 0.0;
    double alpha = 1.0;
    double alpha_power = 0.0;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string out;
};

const std::vector<std::string> kExperiments = {"isolated", "four-species", "matrix-indep", "paired-given-defzero",
                                               "exact-small"};

int run_experiment(const ExperimentArgs& args)
{
    if (std::find(kExperiments.begin(), kExperiments.end(), args.name) == kExperiments.end()) {
        std::string names;
        for (const auto& e : kExperiments)
            names += (names.empty() ? "" : ", ") + e;
        throw UsageError("unknown experiment '" + args.name + "'; valid experiments: " + names);
    }
    const auto grid = grid_or_single(args.n_grid, args.n);
    for (auto n : grid)
        if (n == 0)
            throw UsageError("--n (or --n-grid) is required and must be positive");
    if (args.name != "exact-small" && args.trials == 0)
        throw UsageError("--trials must be at least 1");

    const defzero::ExecutionOptions opts{threads_from_env()};
    defzero::OutputRecord record;
    record.command = "experiment " + args.name;
    record.config = {{"experiment", args.name}, {"n_grid", grid}, {"seed", args.seed}, {"trials", args.trials}};

    try {
        if (args.name == "isolated") {
            record.config["alpha"] = args.alpha;
            record.config["alpha_power"] = args.alpha_power;
            record.columns = defzero::estimate_columns();
            for (auto n : grid) {
                const double alpha = args.alpha * std::pow(static_cast<double>(n), args.alpha_power);
                defzero::IsolatedTailSpec spec{n, alpha, args.trials, defzero::derive_seed(args.seed, n)};
                record.rows.push_back(defzero::estimate_cells(defzero::estimate_isolated_tail(spec, opts)));
            }
        } else if (args.name == "four-species") {
            record.config["k"] = args.k;
            record.columns = defzero::estimate_columns_k();
            for (auto n : grid)
                record.rows.push_back(defzero::estimate_cells_k(defzero::estimate_four_species_given_paired(
                    n, static_cast<std::uint32_t>(args.k), args.trials, defzero::derive_seed(args.seed, n), opts)));
        } else if (args.name == "matrix-indep") {
            record.config["k"] = args.k;
            record.columns = defzero::estimate_columns_k();
            for (auto n : grid)
                record.rows.push_back(defzero::estimate_cells_k(defzero::estimate_matrix_independence(
                    n, args.k, args.trials, defzero::derive_seed(args.seed, n), opts)));
        } else if (args.name == "paired-given-defzero") {
            record.config["p"] = args.p;
            record.columns = defzero::conditional_columns();
            for (auto n : grid) {
                const auto est = defzero::estimate_paired_given_def_zero({n, args.p, defzero::derive_seed(args.seed, n)},
                                                                         args.trials, opts);
                record.rows.push_back(defzero::conditional_cells(est, n, args.p));
            }
        } else {
            record.config = {{"experiment", args.name}, {"n_grid", grid}, {"p", args.p}};
            record.columns = {"n", "p", "probability"};
            for (auto n : grid)
                record.rows.push_back(nlohmann::json::array({n, args.p, defzero::exact_def_zero_prob_small(n, args.p)}));
        }
    } catch (const defzero::DomainError& e) {
        throw UsageError(e.what());
    } catch (const defzero::UnsupportedError& e) {
        throw UsageError(e.what());
    }
    emit_record(record, args.format, args.out);
    return kExitOk;
}

struct SampleArgs {
    std::uint32_t n = 1;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::string emit_network;
    std::string format = "text";
};

int run_sample(const SampleArgs& args)
{
    const defzero::ErTrialConfig cfg{args.n, args.p, args.seed};
    try {
        cfg.validate();
    } catch (const defzero::DomainError& e) {
        throw UsageError(e.what());
    }
    const auto net = defzero::sample_er_network(cfg);
    const auto report = defzero::deficiency(net);
    const auto pairs = net.reaction_count() / 2;

    if (!args.emit_network.empty())
        emit(defzero::serialize_network(defzero::document_from_network(net)), args.emit_network);

    if (args.format == "json") {
        defzero::OutputRecord record;
        record.command = "sample";
        record.config = {{"n", args.n}, {"p", args.p}, {"seed", args.seed}};
        auto out = record.to_json();
        out.erase("rows");
        out["edges"] = pairs;
        out["isolated"] = defzero::count_isolated(net);
        out["report"] = defzero::report_to_json(report);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "# defzero schema_version=" << defzero::kSchemaVersion << " command=sample n=" << args.n
                  << " p=" << nlohmann::json(args.p).dump() << " seed=" << args.seed << "\n"
                  << "edges: " << pairs << "\n"
                  << "isolated: " << defzero::count_isolated(net) << "\n"
                  << defzero::render_report_text(report, net.species_count());
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Deficiency of reaction networks and Erdős–Rényi threshold experiments"};
    app.require_subcommand(1);

    AnalyzeArgs analyze;
    auto* cmd_analyze = app.add_subcommand("analyze", "Deficiency report for a reaction network file");
    cmd_analyze->add_option("path", analyze.path, "Network file (.crn)")->required();
    cmd_analyze->add_option("--format", analyze.format)->check(CLI::IsMember({"text", "json"}));

    SweepArgs sweep;
    auto* cmd_sweep = app.add_subcommand("sweep", "Estimate P(deficiency zero) with p_n = c n^-beta over an n grid");
    cmd_sweep->add_option("--n-grid", sweep.n_grid, "Comma-separated species counts")->delimiter(',')->required();
    cmd_sweep->add_option("--c", sweep.c);
    cmd_sweep->add_option("--beta", sweep.beta);
    cmd_sweep->add_option("--trials", sweep.trials);
    cmd_sweep->add_option("--seed", sweep.seed);
    cmd_sweep->add_option("--format", sweep.format)->check(CLI::IsMember({"csv", "json"}));
    cmd_sweep->add_option("--out", sweep.out, "Write to this file instead of stdout");

    ExperimentArgs exp;
    auto* cmd_exp = app.add_subcommand("experiment", "Run one of the supporting experiments");
    cmd_exp->add_option("name", exp.name, "isolated | four-species | matrix-indep | paired-given-defzero | exact-small")
        ->required();
    cmd_exp->add_option("--n", exp.n);
    cmd_exp->add_option("--n-grid", exp.n_grid)->delimiter(',');
    cmd_exp->add_option("--k", exp.k);
    cmd_exp->add_option("--p", exp.p);
    cmd_exp->add_option("--alpha", exp.alpha, "isolated: alpha_n = alpha * n^alpha-power");
    cmd_exp->add_option("--alpha-power", exp.alpha_power);
    cmd_exp->add_option("--trials", exp.trials);
    cmd_exp->add_option("--seed", exp.seed);
    cmd_exp->add_option("--format", exp.format)->check(CLI::IsMember({"csv", "json"}));
    cmd_exp->add_option("--out", exp.out);

    SampleArgs sample;
    auto* cmd_sample = app.add_subcommand("sample", "Draw one network from G(N_n, p) and report its deficiency");
    cmd_sample->add_option("--n", sample.n)->required();
    cmd_sample->add_option("--p", sample.p)->required();
    cmd_sample->add_option("--seed", sample.seed);
    cmd_sample->add_option("--emit-network", sample.emit_network, "Write the sampled network to this file");
    cmd_sample->add_option("--format", sample.format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_analyze)
            return run_analyze(analyze);
        if (*cmd_sweep)
            return run_sweep(sweep);
        if (*cmd_exp)
            return run_experiment(exp);
        if (*cmd_sample)
            return run_sample(sample);
    } catch (const UsageError& e) {
        std::cerr << "defzero: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "defzero: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
