// logsynth - command-line toolchain for synthesizing labelled log datasets
// from finite-state behaviour models and regex failure patterns, plus an
// advisor for picking a failure-prediction configuration.

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logsynth/advisor.hpp"
#include "logsynth/containment.hpp"
#include "logsynth/dataset.hpp"
#include "logsynth/dataset_io.hpp"
#include "logsynth/errors.hpp"
#include "logsynth/generator.hpp"
#include "logsynth/ingest.hpp"
#include "logsynth/model_io.hpp"
#include "logsynth/pattern.hpp"
#include "logsynth/version.hpp"

namespace {

using nlohmann::ordered_json;
using namespace logsynth;

struct GlobalFlags {
    bool json = false;
    bool quiet = false;
};

std::string format_double(double value, int precision) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(precision) << value;
    return out.str();
}

std::string default_out_dir() {
    if (const char* env = std::getenv("LOGSYNTH_OUT_DIR")) return env;
    return ".";
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ' ';
        out += p;
    }
    return out;
}

// ---------------------------------------------------------------------------
// model-validate
// ---------------------------------------------------------------------------

struct ModelValidateArgs {
    std::string model_file;
};

int run_model_validate(const ModelValidateArgs& args, const GlobalFlags& flags) {
    const auto bundle = load_model_file(args.model_file);
    const auto& model = bundle.model;

    std::vector<std::string> isolated;
    for (const auto q : model.isolated_states()) isolated.push_back(model.state_name(q));

    std::optional<std::uint32_t> initial_svalue;
    std::vector<std::string> unreachable;
    std::string degenerate_reason;
    try {
        const auto svalues = compute_s_values(model);
        initial_svalue = svalues.value(model.initial());
        for (const auto q : svalues.unreachable_states()) unreachable.push_back(model.state_name(q));
    } catch (const DegenerateModelError& e) {
        degenerate_reason = e.what();
    }

    if (flags.json) {
        ordered_json out;
        out["model"] = bundle.id;
        out["states"] = model.state_count();
        out["transitions"] = model.transition_count();
        out["alphabet"] = model.alphabet().size();
        out["accepting"] = model.accepting_count();
        out["initial_s_value"] =
            initial_svalue ? ordered_json(*initial_svalue) : ordered_json(nullptr);
        out["unreachable_states"] = unreachable;
        out["isolated_states"] = isolated;
        if (!degenerate_reason.empty()) out["error"] = degenerate_reason;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "model: " << bundle.id << '\n';
        std::cout << "states=" << model.state_count() << " transitions=" << model.transition_count()
                  << " sValue(" << model.state_name(model.initial()) << ")="
                  << (initial_svalue ? std::to_string(*initial_svalue) : "unreachable") << '\n';
        if (!flags.quiet) {
            std::cout << "alphabet=" << model.alphabet().size()
                      << " accepting=" << model.accepting_count() << '\n';
        }
        if (!unreachable.empty()) {
            std::cout << "unreachable states (cannot reach acceptance): " << join(unreachable)
                      << '\n';
        }
        if (!isolated.empty()) {
            std::cout << "warning: isolated states: " << join(isolated) << '\n';
        }
        if (!degenerate_reason.empty()) {
            std::cerr << "error: " << degenerate_reason << '\n';
        }
    }
    return degenerate_reason.empty() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// pattern-check
// ---------------------------------------------------------------------------

struct PatternCheckArgs {
    std::string patterns_file;
    std::string model_file;
    std::size_t budget = 4096;
};

int run_pattern_check(const PatternCheckArgs& args, const GlobalFlags& flags) {
    const auto bundle = load_model_file(args.model_file);
    const auto patterns = load_patterns_file(args.patterns_file, bundle.model, bundle.id);

    int exit_code = 0;
    ordered_json report = ordered_json::array();
    for (const auto& pattern : patterns) {
        const auto result = check_containment(pattern.ast, bundle.model.alphabet(), bundle.model,
                                              {.check_proper = true,
                                               .determinization_budget = args.budget});
        ordered_json entry;
        entry["pattern"] = pattern.id;
        entry["type"] = std::string(to_string(pattern.type));
        entry["length"] = pattern.metrics.length;
        entry["alphabet"] = pattern.metrics.alphabet_size;
        entry["operators"] = pattern.metrics.operator_count;
        entry["star_depth"] = pattern.metrics.star_depth;
        entry["included"] = result.included;
        if (result.witness) entry["witness"] = *result.witness;
        if (result.proper) entry["proper"] = *result.proper;
        report.push_back(entry);

        if (!flags.json) {
            std::cout << "pattern " << pattern.id << ": type=" << to_string(pattern.type)
                      << " length=" << pattern.metrics.length
                      << " alphabet=" << pattern.metrics.alphabet_size
                      << " operators=" << pattern.metrics.operator_count
                      << " star_depth=" << pattern.metrics.star_depth
                      << " included=" << (result.included ? "yes" : "no");
            if (result.proper) std::cout << " proper=" << (*result.proper ? "yes" : "no");
            std::cout << '\n';
            if (!result.included) {
                std::cerr << "error: pattern " << pattern.id
                          << ": not contained in the model; witness: " << join(*result.witness)
                          << '\n';
            } else if (result.proper && !*result.proper) {
                std::cout << "warning: pattern " << pattern.id
                          << ": language equals the model language (inclusion is not proper)\n";
            }
        }
        if (!result.included) exit_code = 1;
    }
    if (flags.json) std::cout << report.dump(2) << '\n';
    return exit_code;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateArgs {
    std::string model_file;
    std::string patterns_file;
    std::uint64_t size = 0;
    std::uint32_t mlsl = 0;
    double failure_pct = 0.0;
    std::string type;  // "F" or "I"
    std::optional<std::uint64_t> seed;
    std::string out = default_out_dir();
    bool make_split = false;
    bool make_oversample = false;
    bool strict = false;
    bool csv = false;
    bool render = false;
    std::vector<std::string> pattern_filter;
    std::uint32_t samples = kDefaultSamplesPerPattern;
    std::uint32_t max_attempts = kDefaultMaxAttempts;
    bool grid = false;
    bool full = false;
};

constexpr std::uint64_t kTagSplit = 0x73706c74ULL;  // "splt"
constexpr std::uint64_t kTagOver = 0x6f766572ULL;   // "over"
constexpr std::uint64_t kTagGrid = 0x67726964ULL;   // "grid"

struct GeneratedSummary {
    std::filesystem::path directory;
    DatasetStats stats;
    std::uint64_t records;
};

GeneratedSummary generate_one(const ModelBundle& bundle,
                              const std::vector<FailurePattern>& patterns, DatasetSpec spec,
                              const GenerateArgs& args, const std::filesystem::path& directory) {
    AssembleOptions options;
    options.samples_per_pattern = args.samples;
    options.max_attempts = args.max_attempts;
    options.strict_normals = args.strict;

    Dataset dataset = assemble(bundle.model, bundle.catalog, patterns, spec, options);

    std::optional<Splits> splits;
    if (args.make_split) {
        RandomStream split_rng = RandomStream(spec.seed).derive(kTagSplit);
        splits = split(dataset, split_rng);
    }

    WriteOptions write_options;
    write_options.csv = args.csv;
    write_options.rendered = args.render;
    write_dataset(dataset, splits ? &*splits : nullptr, directory, write_options, &bundle.catalog);

    if (args.make_oversample) {
        std::vector<LabeledSequence> train;
        for (const auto index : splits->train) train.push_back(dataset.records[index]);
        RandomStream over_rng = RandomStream(spec.seed).derive(kTagOver);
        const auto augmented = oversample(train, over_rng);
        write_oversampled_train(augmented, dataset.symbols, directory);
    }

    return {directory, dataset.manifest.stats, dataset.records.size()};
}

void print_summary(const GeneratedSummary& summary, const GlobalFlags& flags) {
    if (flags.quiet) return;
    std::cout << "dataset: " << summary.directory.string() << '\n';
    std::cout << "records=" << summary.records << " failures=" << summary.stats.failure_count
              << " normals=" << (summary.records - summary.stats.failure_count) << '\n';
    std::cout << "stats: avg_lsl=" << format_double(summary.stats.avg_lsl, 2)
              << " min_lsl=" << summary.stats.min_lsl << " max_lsl=" << summary.stats.max_lsl
              << " unique_templates=" << summary.stats.unique_templates << '\n';
}

ordered_json summary_json(const GeneratedSummary& summary) {
    ordered_json out;
    out["dataset"] = summary.directory.string();
    out["records"] = summary.records;
    out["failures"] = summary.stats.failure_count;
    out["stats"] = {{"avg_lsl", summary.stats.avg_lsl},
                    {"min_lsl", summary.stats.min_lsl},
                    {"max_lsl", summary.stats.max_lsl},
                    {"unique_templates", summary.stats.unique_templates}};
    return out;
}

int run_generate(const GenerateArgs& args, const GlobalFlags& flags) {
    const auto bundle = load_model_file(args.model_file);
    const auto patterns = load_patterns_file(args.patterns_file, bundle.model, bundle.id);

    const std::uint64_t master_seed = args.seed ? *args.seed : std::random_device{}();
    std::cout << "seed=" << master_seed << '\n';

    if (!args.grid) {
        DatasetSpec spec;
        spec.size = args.size;
        spec.mlsl = args.mlsl;
        spec.failure_pct = args.failure_pct;
        spec.pattern_type = args.type == "F" ? PatternType::Finite : PatternType::Infinite;
        spec.model_ref = bundle.id;
        spec.seed = master_seed;
        if (!args.pattern_filter.empty()) spec.pattern_filter = args.pattern_filter;

        const auto summary = generate_one(bundle, patterns, spec, args, args.out);
        if (flags.json) {
            auto out = summary_json(summary);
            out["seed"] = master_seed;
            std::cout << out.dump(2) << '\n';
        } else {
            print_summary(summary, flags);
        }
        return 0;
    }

    // Grid mode: the demo grid caps the size at 1000 and uses two failure
    // levels so a full sweep stays desk-sized; --full runs every level.
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint32_t> mlsls;
    std::vector<double> pcts;
    for (std::size_t i = 0; i < kGridSizeCount; ++i) {
        const auto size = grid_sizes(i);
        if (args.full || size <= 1000) sizes.push_back(size);
    }
    for (std::size_t i = 0; i < kGridMlslCount; ++i) mlsls.push_back(grid_mlsl(i));
    if (args.full) {
        for (std::size_t i = 0; i < kGridFailurePctCount; ++i) pcts.push_back(grid_failure_pct(i));
    } else {
        pcts = {20, 50};
    }

    RandomStream master(master_seed);
    ordered_json all = ordered_json::array();
    std::uint64_t cell = 0;
    for (const auto size : sizes) {
        for (const auto mlsl : mlsls) {
            for (const auto pct : pcts) {
                for (const auto type : {PatternType::Finite, PatternType::Infinite}) {
                    DatasetSpec spec;
                    spec.size = size;
                    spec.mlsl = mlsl;
                    spec.failure_pct = pct;
                    spec.pattern_type = type;
                    spec.model_ref = bundle.id;
                    spec.seed = master.derive(kTagGrid, cell).seed();
                    ++cell;

                    std::ostringstream name;
                    name << "ds_" << bundle.id << "_s" << size << "_m" << mlsl << "_f" << pct
                         << "_" << to_string(type);
                    const auto directory = std::filesystem::path(args.out) / name.str();
                    const auto summary = generate_one(bundle, patterns, spec, args, directory);
                    if (flags.json) {
                        auto out = summary_json(summary);
                        out["seed"] = spec.seed;
                        all.push_back(out);
                    } else if (!flags.quiet) {
                        std::cout << "generated " << directory.string() << '\n';
                    }
                }
            }
        }
    }
    if (flags.json) {
        std::cout << all.dump(2) << '\n';
    } else {
        std::cout << "grid datasets generated: " << cell << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------------

struct AuditArgs {
    std::string dataset_dir;
    std::string model_file;
    std::string patterns_file;
    bool strict = false;
};

int run_audit(const AuditArgs& args, const GlobalFlags& flags) {
    const auto bundle = load_model_file(args.model_file);
    const auto patterns = load_patterns_file(args.patterns_file, bundle.model, bundle.id);
    const auto loaded = read_dataset(args.dataset_dir);

    const auto violations = audit_dataset(loaded.dataset, bundle.model, patterns, args.strict);

    if (flags.json) {
        ordered_json out;
        out["records"] = loaded.dataset.records.size();
        out["violations"] = ordered_json::array();
        for (const auto& v : violations) {
            out["violations"].push_back({{"index", v.record_index}, {"reason", v.reason}});
        }
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& v : violations) {
            std::cout << "violation index=" << v.record_index << " reason=" << v.reason << '\n';
        }
        std::cout << "audited " << loaded.dataset.records.size() << " records: "
                  << violations.size() << " violations\n";
    }
    return violations.empty() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// ingest
// ---------------------------------------------------------------------------

struct IngestArgs {
    std::string records_file;
    std::string labels_file;
    std::uint32_t cap = 1000;
    std::string out = default_out_dir();
    std::string name = "ingested";
    bool write = true;
};

int run_ingest(const IngestArgs& args, const GlobalFlags& flags) {
    const auto records = parse_records_csv_file(args.records_file);
    const auto labels = parse_labels_csv_file(args.labels_file);

    const auto result = prepare_real_world(records, labels, {.cap = args.cap});
    const auto dataset = to_dataset(result, args.cap, args.name);

    if (args.write) write_dataset(dataset, nullptr, args.out);

    const auto& stats = dataset.manifest.stats;
    if (flags.json) {
        ordered_json out;
        out["tasks"] = result.sequences.size() + result.dropped.size();
        out["sequences"] = result.sequences.size();
        out["failures"] = stats.failure_count;
        out["failure_pct"] = dataset.spec.failure_pct;
        out["dropped"] = ordered_json::array();
        for (const auto& d : result.dropped) {
            out["dropped"].push_back({{"task", d.task_id}, {"reason", d.reason}});
        }
        out["warnings"] = result.warnings;
        out["stats"] = {{"avg_lsl", stats.avg_lsl},
                        {"min_lsl", stats.min_lsl},
                        {"max_lsl", stats.max_lsl},
                        {"unique_templates", stats.unique_templates}};
        if (args.write) out["dataset"] = args.out;
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& d : result.dropped) {
            std::cout << "dropped task '" << d.task_id << "': " << d.reason << '\n';
        }
        if (!flags.quiet) {
            for (const auto& w : result.warnings) std::cout << "warning: " << w << '\n';
        }
        std::cout << result.sequences.size() << " sequences, "
                  << format_double(dataset.spec.failure_pct, 2) << "% failures\n";
        std::cout << "stats: avg_lsl=" << format_double(stats.avg_lsl, 2)
                  << " min_lsl=" << stats.min_lsl << " max_lsl=" << stats.max_lsl
                  << " unique_templates=" << stats.unique_templates << '\n';
        if (args.write && !flags.quiet) std::cout << "dataset: " << args.out << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// advise
// ---------------------------------------------------------------------------

struct AdviseArgs {
    std::uint64_t size = 0;
    double failure_pct = 0.0;
    std::uint32_t mlsl = 0;
};

int run_advise(const AdviseArgs& args, const GlobalFlags& flags) {
    const auto advice = advise(args.size, args.failure_pct, args.mlsl);
    if (flags.json) {
        ordered_json out;
        out["config"] = std::string(to_string(advice.config));
        out["expected_f1"] = advice.expected_f1;
        out["batch_size"] = advice.hyperparameters.batch_size;
        out["epochs"] = advice.hyperparameters.epochs;
        out["extrapolated"] = advice.extrapolated;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "config=" << to_string(advice.config) << " expected_f1=" << advice.expected_f1
                  << " batch_size=" << advice.hyperparameters.batch_size
                  << " epochs=" << advice.hyperparameters.epochs << '\n';
        if (advice.extrapolated) {
            std::cout << "warning: inputs are outside the studied ranges; "
                         "the estimate is extrapolated\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

struct StatsArgs {
    std::string dataset_dir;
};

int run_stats(const StatsArgs& args, const GlobalFlags& flags) {
    const auto loaded = read_dataset(args.dataset_dir);
    const auto recomputed = compute_stats(loaded.dataset);
    const auto& recorded = loaded.dataset.manifest.stats;

    const bool consistent = recomputed.min_lsl == recorded.min_lsl &&
                            recomputed.max_lsl == recorded.max_lsl &&
                            recomputed.unique_templates == recorded.unique_templates &&
                            recomputed.failure_count == recorded.failure_count &&
                            std::abs(recomputed.avg_lsl - recorded.avg_lsl) < 1e-9;

    if (flags.json) {
        ordered_json out;
        out["records"] = loaded.dataset.records.size();
        out["avg_lsl"] = recomputed.avg_lsl;
        out["min_lsl"] = recomputed.min_lsl;
        out["max_lsl"] = recomputed.max_lsl;
        out["unique_templates"] = recomputed.unique_templates;
        out["failure_count"] = recomputed.failure_count;
        out["manifest_consistent"] = consistent;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "records=" << loaded.dataset.records.size()
                  << " avg_lsl=" << format_double(recomputed.avg_lsl, 2)
                  << " min_lsl=" << recomputed.min_lsl << " max_lsl=" << recomputed.max_lsl
                  << " unique_templates=" << recomputed.unique_templates
                  << " failure_count=" << recomputed.failure_count << '\n';
        if (!consistent) {
            std::cerr << "error: manifest stats do not match the records file\n";
        }
    }
    return consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"synthetic log dataset toolkit for failure-prediction research"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_flag("--json", flags.json, "machine-readable JSON output");
    app.add_flag("--quiet", flags.quiet, "suppress informational output");

    ModelValidateArgs model_validate_args;
    auto* model_validate = app.add_subcommand(
        "model-validate", "validate a behaviour model file and report its shape");
    model_validate->add_option("model", model_validate_args.model_file, "model JSON file")
        ->required();

    PatternCheckArgs pattern_check_args;
    auto* pattern_check = app.add_subcommand(
        "pattern-check", "check failure patterns: type, metrics, containment in the model");
    pattern_check->add_option("patterns", pattern_check_args.patterns_file, "pattern JSON file")
        ->required();
    pattern_check->add_option("--model", pattern_check_args.model_file, "model JSON file")
        ->required();
    pattern_check->add_option("--budget", pattern_check_args.budget,
                              "state budget for the proper-inclusion check");

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand("generate", "synthesize a labelled dataset");
    generate->add_option("--model", generate_args.model_file, "model JSON file")->required();
    generate->add_option("--patterns", generate_args.patterns_file, "pattern JSON file")
        ->required();
    generate->add_option("--size", generate_args.size, "total number of sequences");
    generate->add_option("--mlsl", generate_args.mlsl, "maximum log-sequence length");
    generate->add_option("--failure-pct", generate_args.failure_pct,
                         "failure percentage in (0,100]");
    generate->add_option("--type", generate_args.type, "failure pattern type (F or I)")
        ->check(CLI::IsMember({"F", "I"}));
    generate->add_option("--seed", generate_args.seed,
                         "master seed (auto-generated and printed when omitted)");
    generate->add_option("--out", generate_args.out,
                         "output directory (default $LOGSYNTH_OUT_DIR or .)");
    generate->add_flag("--split", generate_args.make_split,
                       "store a stratified 80:20 train/validation/test split in the manifest");
    generate->add_flag("--oversample", generate_args.make_oversample,
                       "also write a 50:50 oversampled training file (needs --split)");
    generate->add_flag("--strict", generate_args.strict,
                       "normal sequences avoid patterns of both types");
    generate->add_flag("--csv", generate_args.csv, "also export records.csv");
    generate->add_flag("--render", generate_args.render,
                       "also export rendered.log with template texts");
    generate->add_option("--pattern", generate_args.pattern_filter,
                         "restrict failure draws to these pattern ids (repeatable)");
    generate->add_option("--samples", generate_args.samples,
                         "pool samples per pattern (default 2500)");
    generate->add_option("--max-attempts", generate_args.max_attempts,
                         "retry budget for normal-sequence generation");
    generate->add_flag("--grid", generate_args.grid,
                       "generate the demo grid: sizes {200,500,1000} x all mlsl levels x "
                       "failure {20,50}% x both types (60 datasets)");
    generate->add_flag("--full", generate_args.full,
                       "with --grid: all 6x5x6x2 = 360 level combinations");

    AuditArgs audit_args;
    auto* audit = app.add_subcommand(
        "audit", "re-check every record of a dataset against model and patterns");
    audit->add_option("dataset", audit_args.dataset_dir, "dataset directory")->required();
    audit->add_option("--model", audit_args.model_file, "model JSON file")->required();
    audit->add_option("--patterns", audit_args.patterns_file, "pattern JSON file")->required();
    audit->add_flag("--strict", audit_args.strict,
                    "normal records must avoid patterns of both types");

    IngestArgs ingest_args;
    auto* ingest = app.add_subcommand(
        "ingest", "turn labelled real-world logs into failure-prediction sequences");
    ingest->add_option("--records", ingest_args.records_file,
                       "CSV: task_id,timestamp,template_id,is_failure_message")
        ->required();
    ingest->add_option("--labels", ingest_args.labels_file, "CSV: task_id,label")->required();
    ingest->add_option("--cap", ingest_args.cap, "keep only the final N messages (default 1000)");
    ingest->add_option("--out", ingest_args.out, "output dataset directory");
    ingest->add_option("--name", ingest_args.name, "dataset reference recorded in the manifest");

    AdviseArgs advise_args;
    auto* advise_cmd = app.add_subcommand(
        "advise", "recommend a predictor configuration and hyperparameters");
    advise_cmd->add_option("--size", advise_args.size, "dataset size")->required();
    advise_cmd->add_option("--failure-pct", advise_args.failure_pct, "failure percentage")
        ->required();
    advise_cmd->add_option("--mlsl", advise_args.mlsl, "maximum log-sequence length")->required();

    StatsArgs stats_args;
    auto* stats = app.add_subcommand("stats", "recompute and verify a dataset's statistics");
    stats->add_option("dataset", stats_args.dataset_dir, "dataset directory")->required();

    try {
        app.parse(argc, argv);

        if (generate->parsed()) {
            if (generate_args.make_oversample && !generate_args.make_split) {
                std::cerr << "error: --oversample needs --split\n";
                return 2;
            }
            if (!generate_args.grid) {
                if (generate_args.size == 0 || generate_args.mlsl == 0 ||
                    generate_args.failure_pct == 0.0 || generate_args.type.empty()) {
                    std::cerr << "error: --size, --mlsl, --failure-pct and --type are required "
                                 "unless --grid is given\n";
                    return 2;
                }
            }
        }

        if (model_validate->parsed()) return run_model_validate(model_validate_args, flags);
        if (pattern_check->parsed()) return run_pattern_check(pattern_check_args, flags);
        if (generate->parsed()) return run_generate(generate_args, flags);
        if (audit->parsed()) return run_audit(audit_args, flags);
        if (ingest->parsed()) return run_ingest(ingest_args, flags);
        if (advise_cmd->parsed()) return run_advise(advise_args, flags);
        if (stats->parsed()) return run_stats(stats_args, flags);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
