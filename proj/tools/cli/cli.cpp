#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "axelsmote/axelrod.hpp"
#include "axelsmote/axelsmote.hpp"
#include "axelsmote/baseline.hpp"
#include "axelsmote/evaluation.hpp"
#include "axelsmote/io.hpp"
#include "axelsmote/metrics.hpp"

namespace axelsmote::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kReportVersion = 1;

struct InputOptions {
    std::string path;
    std::string label_col;  // name or zero-based index; empty = last column
    std::string delimiter = ",";
    bool no_header = false;
    std::string impute = "mean";
    std::vector<std::string> missing_markers;  // empty = library defaults
};

struct ResampleOptions {
    std::string method = "axelsmote";
    AxelParams params;
    std::string neighbor_subset = "uniform";
    bool no_diversity = false;
    std::string strategy = "balance";
    double ratio = 1.0;
    std::vector<std::string> targets;  // label=count
    std::optional<double> minority_gamma;
};

struct EvalOptions {
    std::size_t runs = 10;
    double test_fraction = 0.2;
    std::size_t classifier_k = 3;
};

struct AxelrodOptions {
    std::size_t side = 10;
    std::size_t features = 5;
    std::size_t traits = 10;
    std::uint64_t seed = 0;
    std::size_t max_steps = 1'000'000;
    std::size_t check_interval = 1000;
    bool periodic = false;
    std::string grid_out;
};

struct SweepOptions {
    std::vector<std::size_t> k_grid{1, 2, 5, 6};
    std::vector<std::size_t> traits_grid{1, 2, 4, 8, 12};
    std::vector<double> theta_grid{0.2, 0.4, 0.6};
    std::vector<double> alpha_grid{0.2, 0.4, 0.6};
};

/// Everything a subcommand needs; echoed verbatim in JSON reports.
struct RunConfig {
    std::string command;
    InputOptions input;
    std::string output;
    ResampleOptions resample;
    EvalOptions eval;
    AxelrodOptions axelrod;
    SweepOptions sweep;
    double gamma = 0.5;
    bool provenance = false;
    bool restore_scale = false;
    bool json = false;
    unsigned workers = 1;
};

struct Prepared {
    Dataset data;
    io::LabelMapping labels;
    std::string label_name;
    std::size_t imputed_cells = 0;
};

// ---------------------------------------------------------------------------

char parse_delimiter(const std::string& text) {
    if (text == "tab" || text == "\\t") return '\t';
    if (text.size() != 1) throw Error(ErrorCode::InvalidArgument, "delimiter must be a single character");
    return text.front();
}

io::ImputeMethod parse_impute(const std::string& text) {
    if (text == "mean") return io::ImputeMethod::Mean;
    if (text == "median") return io::ImputeMethod::Median;
    if (text == "zero") return io::ImputeMethod::Zero;
    throw Error(ErrorCode::InvalidArgument, "unknown imputation '" + text + "'");
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

io::LoadedCsv load_input(const InputOptions& in) {
    io::CsvSchema schema;
    schema.delimiter = parse_delimiter(in.delimiter);
    schema.has_header = !in.no_header;
    if (!in.missing_markers.empty()) {
        schema.missing_markers = {in.missing_markers.begin(), in.missing_markers.end()};
    }
    if (in.label_col.empty()) return io::load_csv(in.path, schema);

    if (all_digits(in.label_col) && !schema.has_header) {
        schema.label_column = static_cast<std::size_t>(std::stoull(in.label_col));
        return io::load_csv(in.path, schema);
    }
    schema.label_column = in.label_col;
    try {
        return io::load_csv(in.path, schema);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::MissingLabelColumn || !all_digits(in.label_col)) throw;
    }
    schema.label_column = static_cast<std::size_t>(std::stoull(in.label_col));
    return io::load_csv(in.path, schema);
}

Prepared prepare(const InputOptions& in) {
    auto loaded = load_input(in);
    Prepared p;
    p.imputed_cells = loaded.data.missing_count();
    p.data = io::impute_missing(loaded.data, parse_impute(in.impute));
    p.labels = std::move(loaded.labels);
    p.label_name = std::move(loaded.label_name);
    validate_dataset(p.data);
    return p;
}

SamplingStrategy build_strategy(const ResampleOptions& opts, const io::LabelMapping& labels) {
    SamplingStrategy s;
    if (opts.strategy == "balance") {
        s = SamplingStrategy::balance_to_majority();
    } else if (opts.strategy == "ratio") {
        s = SamplingStrategy::ratio_of_majority(opts.ratio);
    } else if (opts.strategy == "targets") {
        std::map<ClassId, std::size_t> targets;
        for (const auto& entry : opts.targets) {
            const auto eq = entry.rfind('=');
            if (eq == std::string::npos || !all_digits(entry.substr(eq + 1))) {
                throw Error(ErrorCode::InvalidArgument, "target '" + entry + "' is not LABEL=COUNT");
            }
            const auto id = labels.find(entry.substr(0, eq));
            if (!id) throw Error(ErrorCode::InvalidArgument, "target names unknown label '" + entry.substr(0, eq) + "'");
            targets[*id] = static_cast<std::size_t>(std::stoull(entry.substr(eq + 1)));
        }
        s = SamplingStrategy::target_counts(std::move(targets));
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + opts.strategy + "'");
    }
    s.minority_gamma = opts.minority_gamma;
    return s;
}

AxelParams resolve_params(const ResampleOptions& opts, const io::LabelMapping& labels, std::uint64_t seed) {
    AxelParams p = opts.params;
    p.seed = seed;
    p.diversity_injection = !opts.no_diversity;
    if (opts.neighbor_subset == "uniform") p.neighbor_subset = NeighborSubset::Uniform;
    else if (opts.neighbor_subset == "full") p.neighbor_subset = NeighborSubset::Full;
    else throw Error(ErrorCode::InvalidArgument, "neighbor subset must be 'uniform' or 'full'");
    p.strategy = build_strategy(opts, labels);
    p.validate();
    return p;
}

Method resolve_method(const std::string& name, bool allow_none) {
    const auto m = parse_method(name);
    if (!m || (!allow_none && *m == Method::None)) {
        throw Error(ErrorCode::InvalidArgument, "unknown method '" + name + "'");
    }
    return *m;
}

// ---------------------------------------------------------------------------
// JSON echo of the resolved configuration

Json input_json(const InputOptions& in) {
    return Json{{"path", in.path},
                {"label_col", in.label_col.empty() ? Json(nullptr) : Json(in.label_col)},
                {"delimiter", in.delimiter},
                {"has_header", !in.no_header},
                {"impute", in.impute}};
}

Json params_json(const ResampleOptions& opts) {
    Json j{{"k", opts.params.k},
           {"traits", opts.params.traits},
           {"theta", opts.params.theta},
           {"alpha", opts.params.alpha},
           {"noise_scale", opts.params.noise_scale},
           {"diversity_injection", !opts.no_diversity},
           {"neighbor_subset", opts.neighbor_subset},
           {"clip_to_unit", opts.params.clip_to_unit},
           {"strategy", opts.strategy}};
    if (opts.strategy == "ratio") j["ratio"] = opts.ratio;
    if (opts.strategy == "targets") j["targets"] = opts.targets;
    j["minority_gamma"] = opts.minority_gamma ? Json(*opts.minority_gamma) : Json(nullptr);
    return j;
}

Json config_json(const RunConfig& cfg) {
    Json j;
    if (cfg.command != "simulate-axelrod") j["input"] = input_json(cfg.input);
    if (cfg.command == "resample") {
        j["output"] = cfg.output;
        j["method"] = cfg.resample.method;
        j["params"] = params_json(cfg.resample);
        j["provenance"] = cfg.provenance;
        j["restore_scale"] = cfg.restore_scale;
        j["workers"] = cfg.workers;
    } else if (cfg.command == "stats") {
        j["gamma"] = cfg.gamma;
    } else if (cfg.command == "evaluate" || cfg.command == "sweep") {
        j["method"] = cfg.resample.method;
        j["params"] = params_json(cfg.resample);
        j["runs"] = cfg.eval.runs;
        j["test_fraction"] = cfg.eval.test_fraction;
        j["classifier_k"] = cfg.eval.classifier_k;
        j["workers"] = cfg.workers;
        if (cfg.command == "sweep") {
            j["grid"] = Json{{"k", cfg.sweep.k_grid},
                             {"traits", cfg.sweep.traits_grid},
                             {"theta", cfg.sweep.theta_grid},
                             {"alpha", cfg.sweep.alpha_grid}};
        }
    } else if (cfg.command == "simulate-axelrod") {
        j["L"] = cfg.axelrod.side;
        j["f"] = cfg.axelrod.features;
        j["q"] = cfg.axelrod.traits;
        j["max_steps"] = cfg.axelrod.max_steps;
        j["check_interval"] = cfg.axelrod.check_interval;
        j["boundary"] = cfg.axelrod.periodic ? "periodic" : "open";
        j["grid_out"] = cfg.axelrod.grid_out.empty() ? Json(nullptr) : Json(cfg.axelrod.grid_out);
    }
    return j;
}

Json report_header(const RunConfig& cfg, std::uint64_t seed) {
    return Json{{"report_version", kReportVersion},
                {"command", cfg.command},
                {"seed", seed},
                {"config", config_json(cfg)}};
}

Json counts_json(const std::map<ClassId, std::size_t>& counts, const io::LabelMapping& labels) {
    Json j = Json::object();
    for (const auto& [c, n] : counts) j[labels.decode(c)] = n;
    return j;
}

std::string fixed(double v, int digits = 4) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_resample(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, spdlog::logger& log) {
    const Method method = resolve_method(cfg.resample.method, false);
    Prepared in = prepare(cfg.input);
    if (in.imputed_cells) log.info("imputed {} missing cells ({})", in.imputed_cells, cfg.input.impute);
    auto [data, scaling] = io::normalize(in.data);
    const AxelParams params = resolve_params(cfg.resample, in.labels, seed);

    Dataset augmented;
    std::vector<std::int64_t> provenance;
    std::vector<std::string> warnings;
    const ExecutionOptions exec{cfg.workers};
    if (method == Method::AxelSmote) {
        auto result = resample(data, params, exec);
        provenance = io::provenance_from(result.batch, data.rows());
        warnings = std::move(result.batch.warnings);
        augmented = std::move(result.augmented);
    } else {
        auto result = smote_resample(data, params.k, params.strategy, seed, exec);
        provenance = io::provenance_from(result, data.rows());
        augmented = std::move(result.augmented);
    }
    for (const auto& w : warnings) log.warn("{}", w);

    if (cfg.restore_scale) {
        scaling.invert(augmented.features);
        augmented.normalized = false;
    }

    io::ExportOptions options;
    options.include_provenance = cfg.provenance;
    options.base_indices = std::move(provenance);
    options.delimiter = parse_delimiter(cfg.input.delimiter);
    options.label_name = in.label_name;
    io::export_csv(augmented, in.labels, cfg.output, options);

    const auto before = class_counts(data.labels);
    const auto after = class_counts(augmented.labels);
    const double ir_before = imbalance_ratio(data.labels);
    const double ir_after = imbalance_ratio(augmented.labels);
    const std::size_t synthetic = augmented.rows() - data.rows();

    if (cfg.json) {
        Json j = report_header(cfg, seed);
        j["before"] = counts_json(before, in.labels);
        j["after"] = counts_json(after, in.labels);
        j["imbalance_ratio"] = Json{{"before", ir_before}, {"after", ir_after}};
        j["synthetic_samples"] = synthetic;
        j["imputed_cells"] = in.imputed_cells;
        j["warnings"] = warnings;
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << std::left << std::setw(16) << "class" << std::right << std::setw(10) << "before"
        << std::setw(10) << "after" << '\n';
    for (const auto& [c, n] : after) {
        const auto it = before.find(c);
        out << std::left << std::setw(16) << in.labels.decode(c) << std::right << std::setw(10)
            << (it == before.end() ? 0 : it->second) << std::setw(10) << n << '\n';
    }
    out << "imbalance ratio: " << fixed(ir_before) << " -> " << fixed(ir_after) << '\n';
    out << "synthetic samples: " << synthetic << " (method " << cfg.resample.method << ", seed " << seed
        << ")\n";
    out << "written: " << cfg.output << '\n';
    return kOk;
}

int cmd_stats(const RunConfig& cfg, std::ostream& out) {
    Prepared in = prepare(cfg.input);
    const auto counts = class_counts(in.data.labels);
    const double ir = imbalance_ratio(in.data.labels);
    const auto minority = minority_classes(in.data.labels, cfg.gamma);

    if (cfg.json) {
        Json j = report_header(cfg, 0);
        j.erase("seed");
        j["rows"] = in.data.rows();
        j["features"] = in.data.dims();
        j["class_counts"] = counts_json(counts, in.labels);
        j["imbalance_ratio"] = ir;
        Json names = Json::array();
        for (ClassId c : minority) names.push_back(in.labels.decode(c));
        j["minority_classes"] = names;
        j["missing_cells"] = in.imputed_cells;
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "rows: " << in.data.rows() << ", features: " << in.data.dims()
        << ", missing cells: " << in.imputed_cells << '\n';
    out << std::left << std::setw(16) << "class" << std::right << std::setw(10) << "count" << '\n';
    for (const auto& [c, n] : counts) {
        out << std::left << std::setw(16) << in.labels.decode(c) << std::right << std::setw(10) << n << '\n';
    }
    out << "imbalance ratio: " << fixed(ir) << '\n';
    out << "minority classes (gamma " << cfg.gamma << "): ";
    if (minority.empty()) out << "none";
    bool first = true;
    for (ClassId c : minority) {
        out << (first ? "" : ", ") << in.labels.decode(c);
        first = false;
    }
    out << '\n';
    return kOk;
}

EvaluationConfig eval_config(const RunConfig& cfg, const io::LabelMapping& labels, std::uint64_t seed) {
    EvaluationConfig ec;
    ec.method = resolve_method(cfg.resample.method, true);
    ec.params = resolve_params(cfg.resample, labels, seed);
    ec.smote_k = ec.params.k;
    ec.classifier_k = cfg.eval.classifier_k;
    ec.test_fraction = cfg.eval.test_fraction;
    ec.runs = cfg.eval.runs;
    ec.seed = seed;
    ec.exec.workers = cfg.workers;
    return ec;
}

Json evaluation_json(const EvaluationResult& r) {
    Json runs = Json::array();
    for (const auto& m : r.runs) {
        runs.push_back(Json{{"seed", m.seed},
                            {"f1_macro", m.f1_macro},
                            {"balanced_accuracy", m.balanced_accuracy},
                            {"train_rows", m.train_rows},
                            {"test_rows", m.test_rows}});
    }
    auto opt = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
    return Json{{"f1_macro", Json{{"mean", r.f1_mean}, {"std", opt(r.f1_std)}}},
                {"balanced_accuracy",
                 Json{{"mean", r.balanced_accuracy_mean}, {"std", opt(r.balanced_accuracy_std)}}},
                {"runs", runs},
                {"warnings", r.warnings}};
}

std::string mean_std(double mean, const std::optional<double>& sd) {
    return sd ? fixed(mean) + " ± " + fixed(*sd) : fixed(mean);
}

int cmd_evaluate(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, spdlog::logger& log) {
    Prepared in = prepare(cfg.input);
    const EvaluationConfig ec = eval_config(cfg, in.labels, seed);
    const auto result = evaluate(in.data, ec);
    for (const auto& w : result.warnings) log.warn("{}", w);

    if (cfg.json) {
        Json j = report_header(cfg, seed);
        j["results"] = evaluation_json(result);
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "method: " << cfg.resample.method << ", runs: " << ec.runs << ", test fraction: "
        << ec.test_fraction << ", k-NN k=" << ec.classifier_k << ", seed: " << seed << '\n';
    out << "test rows per run: " << result.runs.front().test_rows << '\n';
    out << "F1 (macro):         " << mean_std(result.f1_mean, result.f1_std) << '\n';
    out << "balanced accuracy:  " << mean_std(result.balanced_accuracy_mean, result.balanced_accuracy_std)
        << '\n';
    return kOk;
}

int cmd_sweep(const RunConfig& cfg, std::uint64_t seed, std::ostream& out, spdlog::logger& log) {
    Prepared in = prepare(cfg.input);
    RunConfig local = cfg;
    local.resample.method = "axelsmote";

    Json rows = Json::array();
    if (!cfg.json) {
        out << std::right << std::setw(4) << "k" << std::setw(7) << "traits" << std::setw(7) << "theta"
            << std::setw(7) << "alpha" << std::setw(18) << "F1 (macro)" << std::setw(18) << "bal. accuracy"
            << '\n';
    }
    for (std::size_t k : cfg.sweep.k_grid) {
        for (std::size_t t : cfg.sweep.traits_grid) {
            if (t > in.data.dims()) {
                log.info("skipping traits={} (dataset has {} features)", t, in.data.dims());
                continue;
            }
            for (double theta : cfg.sweep.theta_grid) {
                for (double alpha : cfg.sweep.alpha_grid) {
                    local.resample.params.k = k;
                    local.resample.params.traits = t;
                    local.resample.params.theta = theta;
                    local.resample.params.alpha = alpha;
                    const auto r = evaluate(in.data, eval_config(local, in.labels, seed));
                    if (cfg.json) {
                        Json row{{"k", k}, {"traits", t}, {"theta", theta}, {"alpha", alpha}};
                        row["results"] = evaluation_json(r);
                        rows.push_back(std::move(row));
                    } else {
                        out << std::setw(4) << k << std::setw(7) << t << std::setw(7) << theta << std::setw(7)
                            << alpha << std::setw(18) << mean_std(r.f1_mean, r.f1_std) << std::setw(18)
                            << mean_std(r.balanced_accuracy_mean, r.balanced_accuracy_std) << '\n';
                    }
                }
            }
        }
    }
    if (cfg.json) {
        Json j = report_header(cfg, seed);
        j["results"] = rows;
        out << j.dump(2) << '\n';
    }
    return kOk;
}

int cmd_simulate_axelrod(const RunConfig& cfg, std::ostream& out) {
    const auto& a = cfg.axelrod;
    auto grid = axelrod::init_grid(a.side, a.features, a.traits, a.seed,
                                   a.periodic ? axelrod::Boundary::Periodic : axelrod::Boundary::Open);
    const auto report = axelrod::run(std::move(grid), a.max_steps, a.check_interval);
    if (!a.grid_out.empty()) {
        std::ofstream f(a.grid_out, std::ios::binary | std::ios::trunc);
        if (!f) throw Error(ErrorCode::IoError, "cannot open " + a.grid_out + " for writing");
        axelrod::write_grid_csv(report.final_grid, f);
        if (!f) throw Error(ErrorCode::IoError, "failed writing " + a.grid_out);
    }
    if (cfg.json) {
        Json j = report_header(cfg, a.seed);
        j["results"] = Json{{"steps_executed", report.steps_executed},
                            {"interactions", report.interactions},
                            {"converged", report.converged},
                            {"region_count", report.region_count},
                            {"distinct_cultures", report.distinct_cultures}};
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "steps: " << report.steps_executed << '\n'
        << "interactions: " << report.interactions << '\n'
        << "converged: " << (report.converged ? "yes" : "no") << '\n'
        << "regions: " << report.region_count << '\n'
        << "distinct cultures: " << report.distinct_cultures << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------
// Flag wiring

void add_input_flags(CLI::App* app, InputOptions& in) {
    app->add_option("input", in.path, "Input CSV file")->required();
    app->add_option("--label-col", in.label_col, "Label column name or zero-based index (default: last)");
    app->add_option("--delimiter", in.delimiter, "Field delimiter (single character or 'tab')");
    app->add_flag("--no-header", in.no_header, "Input has no header row");
    app->add_option("--impute", in.impute, "Missing-value fill: mean, median or zero")
        ->check(CLI::IsMember({"mean", "median", "zero"}));
    app->add_option("--missing", in.missing_markers, "Strings treated as missing (replaces the defaults)");
}

void add_axel_flags(CLI::App* app, ResampleOptions& r) {
    app->add_option("--k", r.params.k, "Nearest same-class neighbors")->check(CLI::PositiveNumber);
    app->add_option("--traits,-t", r.params.traits, "Number of feature traits")->check(CLI::PositiveNumber);
    app->add_option("--theta", r.params.theta, "Trait similarity threshold")->check(CLI::Range(0.0, 1.0));
    app->add_option("--alpha", r.params.alpha, "Influence rate")->check(CLI::Range(0.0, 1.0));
    app->add_option("--noise-scale", r.params.noise_scale, "Diversity noise scale")
        ->check(CLI::NonNegativeNumber);
    app->add_flag("--no-diversity", r.no_diversity, "Disable diversity noise injection");
    app->add_option("--neighbor-subset", r.neighbor_subset, "Per-trait neighbor subset: uniform or full")
        ->check(CLI::IsMember({"uniform", "full"}));
    app->add_flag("--clip-to-unit", r.params.clip_to_unit, "Clip noisy features back to [0, 1]");
    app->add_option("--strategy", r.strategy, "balance, ratio or targets")
        ->check(CLI::IsMember({"balance", "ratio", "targets"}));
    app->add_option("--ratio", r.ratio, "Ratio strategy: fraction of the majority count")
        ->check(CLI::Range(0.0, 1.0));
    app->add_option("--target", r.targets, "Targets strategy: LABEL=COUNT (repeatable)");
    app->add_option("--minority-gamma", r.minority_gamma,
                    "Only oversample classes below gamma times the majority count");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, true);
    spdlog::logger log("axelsmote", sink);
    log.set_pattern("[%l] %v");
    log.set_level(spdlog::level::warn);
    if (const char* level = std::getenv("AXELSMOTE_LOG_LEVEL")) {
        log.set_level(spdlog::level::from_str(level));
    }

    RunConfig cfg;
    std::uint64_t seed = 0;

    CLI::App app{"Seedable minority oversampling toolkit (AxelSMOTE, SMOTE, Axelrod simulator)",
                 "axelsmote"};
    app.require_subcommand(1);

    auto* resample_cmd = app.add_subcommand("resample", "Oversample a CSV dataset and write the result");
    add_input_flags(resample_cmd, cfg.input);
    resample_cmd->add_option("output", cfg.output, "Output CSV file")->required();
    resample_cmd->add_option("--method", cfg.resample.method, "axelsmote or smote")
        ->check(CLI::IsMember({"axelsmote", "smote"}));
    add_axel_flags(resample_cmd, cfg.resample);
    resample_cmd->add_option("--seed", seed, "Master random seed");
    resample_cmd->add_flag("--provenance", cfg.provenance, "Append is_synthetic and base_index columns");
    resample_cmd->add_flag("--restore-scale", cfg.restore_scale,
                           "Write features in the original units instead of [0, 1]");
    resample_cmd->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    resample_cmd->add_flag("--json", cfg.json, "Emit a JSON report");

    auto* stats_cmd = app.add_subcommand("stats", "Class counts, imbalance ratio and minority classes");
    add_input_flags(stats_cmd, cfg.input);
    stats_cmd->add_option("--gamma", cfg.gamma, "Minority threshold in (0, 1)")->check(CLI::Range(0.0, 1.0));
    stats_cmd->add_flag("--json", cfg.json, "Emit a JSON report");

    auto* eval_cmd = app.add_subcommand("evaluate", "Stratified k-NN evaluation with optional resampling");
    add_input_flags(eval_cmd, cfg.input);
    eval_cmd->add_option("--method", cfg.resample.method, "none, axelsmote or smote")
        ->check(CLI::IsMember({"none", "axelsmote", "smote"}));
    add_axel_flags(eval_cmd, cfg.resample);
    eval_cmd->add_option("--runs", cfg.eval.runs, "Number of seeded runs")->check(CLI::PositiveNumber);
    eval_cmd->add_option("--test-fraction", cfg.eval.test_fraction, "Test share per class")
        ->check(CLI::Range(0.0, 1.0));
    eval_cmd->add_option("--classifier-k", cfg.eval.classifier_k, "k of the k-NN classifier")
        ->check(CLI::PositiveNumber);
    eval_cmd->add_option("--seed", seed, "First run seed (run r uses seed + r)");
    eval_cmd->add_option("--workers", cfg.workers, "Runs evaluated in parallel")->check(CLI::PositiveNumber);
    eval_cmd->add_flag("--json", cfg.json, "Emit a JSON report");

    auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate AxelSMOTE over a hyperparameter grid");
    add_input_flags(sweep_cmd, cfg.input);
    add_axel_flags(sweep_cmd, cfg.resample);
    sweep_cmd->add_option("--k-grid", cfg.sweep.k_grid, "k values")->delimiter(',');
    sweep_cmd->add_option("--traits-grid", cfg.sweep.traits_grid, "trait counts")->delimiter(',');
    sweep_cmd->add_option("--theta-grid", cfg.sweep.theta_grid, "theta values")->delimiter(',');
    sweep_cmd->add_option("--alpha-grid", cfg.sweep.alpha_grid, "alpha values")->delimiter(',');
    sweep_cmd->add_option("--runs", cfg.eval.runs, "Seeded runs per grid point")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--test-fraction", cfg.eval.test_fraction, "Test share per class")
        ->check(CLI::Range(0.0, 1.0));
    sweep_cmd->add_option("--classifier-k", cfg.eval.classifier_k, "k of the k-NN classifier")
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--seed", seed, "First run seed");
    sweep_cmd->add_option("--workers", cfg.workers, "Runs evaluated in parallel")->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--json", cfg.json, "Emit a JSON report");

    auto* axelrod_cmd = app.add_subcommand("simulate-axelrod", "Run the Axelrod cultural dissemination model");
    axelrod_cmd->add_option("--L,--size", cfg.axelrod.side, "Lattice side length");
    axelrod_cmd->add_option("--f,--features", cfg.axelrod.features, "Features per agent");
    axelrod_cmd->add_option("--q,--traits", cfg.axelrod.traits, "Trait values per feature");
    axelrod_cmd->add_option("--seed", cfg.axelrod.seed, "Random seed");
    axelrod_cmd->add_option("--max-steps", cfg.axelrod.max_steps, "Step cap")->check(CLI::PositiveNumber);
    axelrod_cmd->add_option("--check-interval", cfg.axelrod.check_interval, "Steps between absorption checks")
        ->check(CLI::PositiveNumber);
    axelrod_cmd->add_flag("--periodic", cfg.axelrod.periodic, "Wrap the lattice edges");
    axelrod_cmd->add_option("--grid-out", cfg.axelrod.grid_out, "Write the final grid as CSV");
    axelrod_cmd->add_flag("--json", cfg.json, "Emit a JSON report");

    std::vector<const char*> argv{"axelsmote"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (resample_cmd->parsed()) {
            cfg.command = "resample";
            return cmd_resample(cfg, seed, out, log);
        }
        if (stats_cmd->parsed()) {
            cfg.command = "stats";
            return cmd_stats(cfg, out);
        }
        if (eval_cmd->parsed()) {
            cfg.command = "evaluate";
            return cmd_evaluate(cfg, seed, out, log);
        }
        if (sweep_cmd->parsed()) {
            cfg.command = "sweep";
            return cmd_sweep(cfg, seed, out, log);
        }
        cfg.command = "simulate-axelrod";
        return cmd_simulate_axelrod(cfg, out);
    } catch (const Error& e) {
        log.error("{}", e.what());
        if (e.code() == ErrorCode::StratificationError) return kStratificationError;
        return is_config_error(e.code()) ? kConfigError : kDataError;
    } catch (const std::exception& e) {
        log.error("{}", e.what());
        return kDataError;
    }
}

}  // namespace axelsmote::cli
