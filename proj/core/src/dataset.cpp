#include "logsynth/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "logsynth/containment.hpp"
#include "logsynth/errors.hpp"
#include "logsynth/version.hpp"

namespace logsynth {

namespace {

constexpr std::uint64_t kTagFailure = 0x6661696cULL;   // "fail"
constexpr std::uint64_t kTagNormal = 0x6e6f726dULL;    // "norm"
constexpr std::uint64_t kTagPool = 0x706f6f6c32ULL;    // pool master
constexpr std::uint64_t kTagShuffle = 0x73687566ULL;   // "shuf"
constexpr std::uint64_t kTagOversample = 0x6f766572ULL;  // "over"

const std::uint64_t kGridSizes[] = {200, 500, 1000, 5000, 10000, 50000};
const std::uint32_t kGridMlsl[] = {20, 50, 100, 500, 1000};
const double kGridFailurePct[] = {5, 10, 20, 30, 40, 50};

}  // namespace

std::string_view to_string(Label label) {
    return label == Label::Normal ? "normal" : "failure";
}

void validate_spec(const DatasetSpec& spec) {
    if (spec.size < 1) throw ValidationError("dataset size must be at least 1");
    if (spec.mlsl < 1) throw ValidationError("mlsl must be at least 1");
    if (!(spec.failure_pct > 0.0 && spec.failure_pct <= 100.0)) {
        throw ValidationError("failure percentage must be in (0, 100]");
    }
}

bool is_grid_conformant(const DatasetSpec& spec) {
    const bool size_ok = std::find(std::begin(kGridSizes), std::end(kGridSizes), spec.size) !=
                         std::end(kGridSizes);
    const bool mlsl_ok = std::find(std::begin(kGridMlsl), std::end(kGridMlsl), spec.mlsl) !=
                         std::end(kGridMlsl);
    const bool pct_ok = std::find(std::begin(kGridFailurePct), std::end(kGridFailurePct),
                                  spec.failure_pct) != std::end(kGridFailurePct);
    return size_ok && mlsl_ok && pct_ok && spec.pattern_type.has_value();
}

std::uint64_t grid_sizes(std::size_t index) { return kGridSizes[index]; }
std::uint32_t grid_mlsl(std::size_t index) { return kGridMlsl[index]; }
double grid_failure_pct(std::size_t index) { return kGridFailurePct[index]; }

std::uint64_t round_half_up(double value) {
    return static_cast<std::uint64_t>(std::floor(value + 0.5));
}

namespace {

std::vector<const FailurePattern*> select_active(std::span<const FailurePattern> patterns,
                                                 const DatasetSpec& spec) {
    std::vector<const FailurePattern*> active;
    for (const auto& p : patterns) {
        if (spec.pattern_type && p.type != *spec.pattern_type) continue;
        if (spec.pattern_filter) {
            const auto& filter = *spec.pattern_filter;
            if (std::find(filter.begin(), filter.end(), p.id) == filter.end()) continue;
        }
        active.push_back(&p);
    }
    return active;
}

}  // namespace

Dataset assemble(const BehaviourModel& model, const TemplateCatalog& catalog,
                 std::span<const FailurePattern> patterns, const DatasetSpec& spec,
                 const AssembleOptions& options) {
    (void)catalog;  // catalog travels with the model; rendering uses it at export time
    validate_spec(spec);

    const auto active = select_active(patterns, spec);
    if (active.empty()) {
        throw ValidationError("no failure pattern of the requested type matches the model" +
                              std::string(spec.pattern_filter ? " and filter" : ""));
    }
    for (const auto* p : active) {
        const auto report = check_containment(p->ast, model.alphabet(), model,
                                              {.check_proper = false});
        if (!report.included) {
            throw ValidationError("pattern '" + p->id +
                                  "' is not contained in the model's language; offending word: " +
                                  [&] {
                                      std::string joined;
                                      for (const auto& s : *report.witness) {
                                          if (!joined.empty()) joined += ' ';
                                          joined += s;
                                      }
                                      return joined;
                                  }());
        }
    }

    const auto svalues = compute_s_values(model);
    if (*svalues.value(model.initial()) > spec.mlsl) {
        throw DegenerateModelError("initial state needs " +
                                   std::to_string(*svalues.value(model.initial())) +
                                   " steps to acceptance, above the length bound of " +
                                   std::to_string(spec.mlsl));
    }

    RandomStream master(spec.seed);

    std::vector<FailurePattern> active_copies;
    active_copies.reserve(active.size());
    for (const auto* p : active) active_copies.push_back(*p);
    RandomStream pool_rng = master.derive(kTagPool);
    const FailurePool pool =
        build_failure_pool(active_copies, spec.mlsl, options.samples_per_pattern, pool_rng);

    // Normal walks reject matches against the active patterns by default,
    // or against every supplied pattern in strict mode.
    std::vector<CompiledPattern> rejection;
    if (options.strict_normals) {
        for (const auto& p : patterns) rejection.emplace_back(p.ast);
    } else {
        for (const auto* p : active) rejection.emplace_back(p->ast);
    }

    const std::uint64_t failure_count = round_half_up(
        static_cast<double>(spec.size) * spec.failure_pct / 100.0);
    if (failure_count > spec.size) {
        throw ValidationError("failure percentage yields more failures than records");
    }
    const std::uint64_t normal_count = spec.size - failure_count;

    Dataset dataset;
    dataset.spec = spec;
    for (const auto& name : model.alphabet().names()) dataset.symbols.add(name);
    dataset.records.reserve(spec.size);

    std::uint64_t zero_length = 0;
    for (std::uint64_t i = 0; i < failure_count; ++i) {
        RandomStream rng = master.derive(kTagFailure, i);
        auto drawn = draw_failure_sequence(pool, rng);
        if (drawn.word.empty()) ++zero_length;
        dataset.records.push_back(
            {std::move(drawn.word), Label::Failure, std::move(drawn.pattern_id), false});
    }

    const WalkConfig walk_config{spec.mlsl, options.max_attempts};
    bool warned_empty_walk = false;
    for (std::uint64_t i = 0; i < normal_count; ++i) {
        RandomStream rng = master.derive(kTagNormal, i);
        Word word;
        bool produced = false;
        for (std::uint32_t attempt = 0; attempt < walk_config.max_attempts; ++attempt) {
            word = filtered_random_walk(model, svalues, spec.mlsl, rng);
            if (word.empty()) {
                // A zero-length log is meaningless downstream; retry.
                if (!warned_empty_walk) {
                    dataset.manifest.warnings.push_back(
                        "model accepts the empty sequence; zero-length walks were retried");
                    warned_empty_walk = true;
                }
                continue;
            }
            bool rejected = false;
            for (const auto& matcher : rejection) {
                if (matcher.matches(word)) {
                    rejected = true;
                    break;
                }
            }
            if (!rejected) {
                produced = true;
                break;
            }
        }
        if (!produced) {
            throw AttemptsExhaustedError(
                "normal-sequence generation gave up after " +
                std::to_string(walk_config.max_attempts) +
                " walks; active failure patterns cover too much of the model");
        }
        dataset.records.push_back({std::move(word), Label::Normal, std::nullopt, false});
    }

    RandomStream shuffle_rng = master.derive(kTagShuffle);
    shuffle(std::span(dataset.records), shuffle_rng);

    dataset.manifest.tool_version = std::string(kToolVersion);
    dataset.manifest.source = "synthesis";
    for (const auto* p : active) dataset.manifest.active_patterns.push_back(p->id);
    if (options.strict_normals) {
        dataset.manifest.warnings.push_back("strict mode: normals were checked against all " +
                                            std::to_string(patterns.size()) + " patterns");
    }
    dataset.manifest.samples_per_pattern = options.samples_per_pattern;
    dataset.manifest.star_limit = spec.mlsl;
    for (const auto& p : pool.pools) {
        dataset.manifest.pool.push_back({p.pattern_id, p.words.size(), p.exact, p.samples_drawn});
    }
    dataset.manifest.zero_length_records = zero_length;
    if (zero_length > 0) {
        dataset.manifest.warnings.push_back("dataset contains " + std::to_string(zero_length) +
                                            " zero-length failure records");
    }
    dataset.manifest.grid_conformant = is_grid_conformant(spec);

    std::set<Word> distinct;
    for (const auto& r : dataset.records) distinct.insert(r.symbols);
    dataset.manifest.duplicate_records = dataset.records.size() - distinct.size();

    dataset.manifest.stats = compute_stats(dataset);
    return dataset;
}

namespace {

// Proportional class allocation for one split, clamped to availability.
std::uint64_t stratum_count(std::uint64_t split_total, std::uint64_t class_total,
                            std::uint64_t dataset_total, std::uint64_t available) {
    const auto ideal = round_half_up(static_cast<double>(split_total) *
                                     static_cast<double>(class_total) /
                                     static_cast<double>(dataset_total));
    return std::min(ideal, available);
}

}  // namespace

Splits split(const Dataset& dataset, RandomStream& rng) {
    std::vector<std::uint64_t> failures;
    std::vector<std::uint64_t> normals;
    for (std::uint64_t i = 0; i < dataset.records.size(); ++i) {
        (dataset.records[i].label == Label::Failure ? failures : normals).push_back(i);
    }
    if (failures.empty() || normals.empty()) {
        throw DegenerateClassError("stratified split needs at least one record of each label");
    }

    shuffle(std::span(failures), rng);
    shuffle(std::span(normals), rng);

    const std::uint64_t total = dataset.records.size();
    const std::uint64_t failure_total = failures.size();

    const std::uint64_t test_total = round_half_up(0.2 * static_cast<double>(total));
    std::uint64_t test_failures =
        stratum_count(test_total, failure_total, total, failures.size());
    std::uint64_t test_normals = std::min<std::uint64_t>(test_total - test_failures, normals.size());

    const std::uint64_t rest = total - test_total;
    const std::uint64_t val_total = round_half_up(0.2 * static_cast<double>(rest));
    std::uint64_t val_failures =
        stratum_count(val_total, failure_total, total, failures.size() - test_failures);
    std::uint64_t val_normals =
        std::min<std::uint64_t>(val_total - val_failures, normals.size() - test_normals);

    Splits splits;
    const auto take = [](std::vector<std::uint64_t>& source, std::uint64_t count,
                         std::vector<std::uint64_t>& sink) {
        for (std::uint64_t i = 0; i < count; ++i) {
            sink.push_back(source.back());
            source.pop_back();
        }
    };
    take(failures, test_failures, splits.test);
    take(normals, test_normals, splits.test);
    take(failures, val_failures, splits.validation);
    take(normals, val_normals, splits.validation);
    splits.train.insert(splits.train.end(), failures.begin(), failures.end());
    splits.train.insert(splits.train.end(), normals.begin(), normals.end());

    std::sort(splits.train.begin(), splits.train.end());
    std::sort(splits.validation.begin(), splits.validation.end());
    std::sort(splits.test.begin(), splits.test.end());
    return splits;
}

std::vector<LabeledSequence> oversample(std::span<const LabeledSequence> records,
                                        RandomStream& rng) {
    std::vector<std::size_t> failures;
    std::vector<std::size_t> normals;
    for (std::size_t i = 0; i < records.size(); ++i) {
        (records[i].label == Label::Failure ? failures : normals).push_back(i);
    }
    if (failures.empty() || normals.empty()) {
        throw DegenerateClassError("oversampling needs at least one record of each label");
    }

    std::vector<LabeledSequence> out(records.begin(), records.end());
    const auto& minority = failures.size() < normals.size() ? failures : normals;
    const auto& majority = failures.size() < normals.size() ? normals : failures;
    for (std::size_t added = minority.size(); added < majority.size(); ++added) {
        LabeledSequence duplicate = records[minority[rng.uniform64(minority.size())]];
        duplicate.oversampled = true;
        out.push_back(std::move(duplicate));
    }
    return out;
}

DatasetStats compute_stats(const Dataset& dataset) {
    DatasetStats stats;
    if (dataset.records.empty()) return stats;

    std::uint64_t total_length = 0;
    std::uint32_t min_length = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t max_length = 0;
    std::set<SymbolIndex> seen;
    for (const auto& record : dataset.records) {
        const auto length = static_cast<std::uint32_t>(record.symbols.size());
        total_length += length;
        min_length = std::min(min_length, length);
        max_length = std::max(max_length, length);
        seen.insert(record.symbols.begin(), record.symbols.end());
        if (record.label == Label::Failure) ++stats.failure_count;
    }
    stats.avg_lsl = static_cast<double>(total_length) / static_cast<double>(dataset.records.size());
    stats.min_lsl = min_length;
    stats.max_lsl = max_length;
    stats.unique_templates = static_cast<std::uint32_t>(seen.size());
    return stats;
}

std::vector<AuditViolation> audit_dataset(const Dataset& dataset, const BehaviourModel& model,
                                          std::span<const FailurePattern> patterns,
                                          bool strict) {
    std::vector<AuditViolation> violations;

    std::map<std::string, CompiledPattern> matchers;
    for (const auto& p : patterns) matchers.emplace(p.id, CompiledPattern(p.ast));

    std::vector<std::string> active = dataset.manifest.active_patterns;
    if (active.empty()) {
        for (const auto& p : patterns) active.push_back(p.id);
    }

    // Record symbols are interned against the dataset table; remap by name.
    std::vector<std::optional<SymbolIndex>> to_model(dataset.symbols.size());
    for (SymbolIndex s = 0; s < dataset.symbols.size(); ++s) {
        to_model[s] = model.alphabet().find(dataset.symbols.name(s));
    }

    for (std::uint64_t index = 0; index < dataset.records.size(); ++index) {
        const auto& record = dataset.records[index];

        if (record.symbols.size() > dataset.spec.mlsl) {
            violations.push_back({index, "length " + std::to_string(record.symbols.size()) +
                                             " exceeds mlsl " + std::to_string(dataset.spec.mlsl)});
            continue;
        }

        Word model_word;
        model_word.reserve(record.symbols.size());
        bool unknown_symbol = false;
        for (const auto s : record.symbols) {
            if (!to_model[s]) {
                violations.push_back(
                    {index, "symbol '" + dataset.symbols.name(s) + "' not in the model alphabet"});
                unknown_symbol = true;
                break;
            }
            model_word.push_back(*to_model[s]);
        }
        if (unknown_symbol) continue;

        if (record.label == Label::Failure) {
            if (!record.pattern_id) {
                violations.push_back({index, "failure record without a pattern id"});
                continue;
            }
            const auto it = matchers.find(*record.pattern_id);
            if (it == matchers.end()) {
                violations.push_back({index, "unknown pattern '" + *record.pattern_id + "'"});
                continue;
            }
            if (!it->second.matches(model_word)) {
                violations.push_back(
                    {index, "failure record does not match pattern '" + *record.pattern_id + "'"});
            }
        } else {
            if (record.pattern_id) {
                violations.push_back({index, "normal record carries a pattern id"});
                continue;
            }
            if (!accepts(model, model_word)) {
                violations.push_back({index, "normal record is rejected by the model"});
                continue;
            }
            if (strict) {
                for (const auto& [id, matcher] : matchers) {
                    if (matcher.matches(model_word)) {
                        violations.push_back({index, "normal record matches pattern '" + id + "'"});
                        break;
                    }
                }
            } else {
                for (const auto& id : active) {
                    const auto it = matchers.find(id);
                    if (it != matchers.end() && it->second.matches(model_word)) {
                        violations.push_back({index, "normal record matches pattern '" + id + "'"});
                        break;
                    }
                }
            }
        }
    }
    return violations;
}

}  // namespace logsynth
