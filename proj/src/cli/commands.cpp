#include "npcpt/cli/commands.hpp"

#include "npcpt/cli/bench_config.hpp"
#include "npcpt/cli/csv_io.hpp"
#include "npcpt/cli/export.hpp"
#include "npcpt/error.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace npcpt::cli {

namespace {

struct DetectOptions {
    std::string input;
    std::string cost = "np";
    std::string k = "auto";
    std::optional<std::string> penalty;
    std::vector<double> crops;
    std::string column;
    bool header = false;
    bool no_header = false;
    std::optional<std::size_t> min_seg_len;
    std::optional<double> max_hr;
    std::string output = "npcpt";
};

struct BenchOptions {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> threads;
    std::string output = "bench";
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw DataError("cannot write '" + path + "'");
    }
    f << content;
}

CostModel make_model(const DetectOptions& opt, const TimeSeries& series) {
    if (opt.cost == "np") {
        std::size_t k = default_quantile_count(series.size());
        if (opt.k != "auto") {
            try {
                k = std::stoul(opt.k);
            } catch (const std::exception&) {
                throw ConfigError("--K expects 'auto' or a positive integer");
            }
        }
        return CostModel::nonparametric_quantile(series, k);
    }
    if (opt.k != "auto") {
        throw ConfigError("--K applies only to --cost np");
    }
    if (opt.cost == "np-full") {
        return CostModel::nonparametric_full(series);
    }
    if (opt.cost == "linear") {
        return CostModel::piecewise_linear(series);
    }
    throw ConfigError("unknown cost '" + opt.cost + "'; valid: np, np-full, linear");
}

int detect(const DetectOptions& opt, std::ostream& out) {
    if (opt.penalty.has_value() == !opt.crops.empty()) {
        throw ConfigError("give exactly one of --penalty or --crops");
    }
    if (opt.header && opt.no_header) {
        throw ConfigError("--header and --no-header are mutually exclusive");
    }
    const HeaderMode mode =
        opt.header ? HeaderMode::Present : (opt.no_header ? HeaderMode::Absent : HeaderMode::Auto);
    const TimeSeries series = ingest_csv(opt.input, opt.column, mode);
    const CostModel model = make_model(opt, series);
    const std::size_t min_seg_len = opt.min_seg_len.value_or(model.default_min_seg_len());

    std::optional<ZoneConfig> zones;
    if (opt.max_hr) {
        zones = ZoneConfig{*opt.max_hr};
        zones->validate();
    }

    if (opt.penalty) {
        const double penalty = parse_penalty(*opt.penalty, series.size());
        const auto result = pelt(model, penalty, min_seg_len);
        const auto doc = segmentation_json(series, model, result.segmentation, penalty, zones);
        write_file(opt.output + ".json", dump(doc));
        out << "n=" << series.size() << " penalty=" << penalty
            << " changepoints=" << result.segmentation.count() << " -> " << opt.output << ".json\n";
        if (result.segmentation.warning) {
            out << "warning: " << *result.segmentation.warning << '\n';
        }
        return kSuccess;
    }

    const auto path = crops_sweep(model, opt.crops[0], opt.crops[1], min_seg_len);
    const auto doc = crops_json(series, model, path, zones);
    write_file(opt.output + ".json", dump(doc));
    write_file(opt.output + "_elbow.csv", elbow_csv(path));
    out << "n=" << series.size() << " segmentations=" << path.entries.size()
        << " pelt_calls=" << path.pelt_calls;
    if (const auto& m = doc["suggested_m"]; !m.is_null()) {
        out << " suggested_m=" << m.get<std::size_t>();
    }
    out << " -> " << opt.output << ".json, " << opt.output << "_elbow.csv\n";
    return kSuccess;
}

int bench(const BenchOptions& opt, std::ostream& out) {
    BenchConfig cfg = load_bench_config(opt.config);
    if (opt.seed) {
        cfg.spec.seed = *opt.seed;
    } else if (const char* env = std::getenv("NPCPT_SEED")) {
        try {
            cfg.spec.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw ConfigError("NPCPT_SEED must be a nonnegative integer");
        }
    }
    if (opt.threads) {
        cfg.params.threads = *opt.threads;
    }
    const auto report = run_benchmark(cfg.spec, cfg.method, cfg.reps, cfg.params);
    write_file(opt.output + ".csv", bench_csv(report));
    write_file(opt.output + ".json", dump(bench_summary_json(report)));
    out << to_string(cfg.method) << " model " << cfg.spec.model_id << " n=" << cfg.spec.n
        << " reps=" << cfg.reps << ": TP " << report.true_positive.mean << " ("
        << report.true_positive.sd << "), FP " << report.false_positive.mean << " ("
        << report.false_positive.sd << "), time " << report.seconds.mean << "s -> " << opt.output
        << ".csv, " << opt.output << ".json\n";
    return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nonparametric changepoint detection"};
    app.require_subcommand(1);

    DetectOptions dopt;
    auto* det = app.add_subcommand("detect", "Segment a univariate series read from CSV");
    det->add_option("input", dopt.input, "CSV file")->required();
    det->add_option("--cost", dopt.cost, "np, np-full or linear")->capture_default_str();
    det->add_option("--K", dopt.k, "Quantile count for --cost np, or 'auto' for ceil(4 log n)")
        ->capture_default_str();
    auto* pen = det->add_option("--penalty", dopt.penalty,
                                "Penalty per changepoint: number, logn, 2logn or 3logn");
    auto* crops = det->add_option("--crops", dopt.crops, "Penalty range XI_MIN XI_MAX")
                      ->expected(2)
                      ->allow_extra_args(false);
    pen->excludes(crops);
    det->add_option("--column", dopt.column, "Column name or 0-based index (default: last)");
    det->add_flag("--header", dopt.header, "First line is a header");
    det->add_flag("--no-header", dopt.no_header, "File has no header");
    det->add_option("--min-seg-len", dopt.min_seg_len, "Minimum segment length");
    det->add_option("--max-hr", dopt.max_hr, "Maximum heart rate; adds training zones per segment");
    det->add_option("-o,--output", dopt.output, "Output path prefix")->capture_default_str();

    BenchOptions bopt;
    auto* ben = app.add_subcommand("bench", "Run a simulation study from a key = value config");
    ben->add_option("config", bopt.config, "Config file")->required();
    ben->add_option("--seed", bopt.seed, "Base seed (overrides NPCPT_SEED and the config)");
    ben->add_option("--threads", bopt.threads, "Worker threads");
    ben->add_option("-o,--output", bopt.output, "Output path prefix")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
    }

    try {
        if (det->parsed()) {
            return detect(dopt, out);
        }
        return bench(bopt, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace npcpt::cli
