#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logsynth/automaton.hpp"
#include "logsynth/generator.hpp"
#include "logsynth/pattern.hpp"
#include "logsynth/random.hpp"

namespace logsynth {

enum class Label { Normal, Failure };

std::string_view to_string(Label label);  // "normal" / "failure"

/// The four controlled characteristics plus the master seed.
struct DatasetSpec {
    std::uint64_t size = 0;
    std::uint32_t mlsl = 0;
    double failure_pct = 0.0;  // in (0, 100]
    std::optional<PatternType> pattern_type;  // absent for ingested datasets
    std::string model_ref;
    std::uint64_t seed = 0;
    std::optional<std::vector<std::string>> pattern_filter;
};

/// Throws ValidationError when a field is out of range.
void validate_spec(const DatasetSpec& spec);

/// The grid of characteristic levels studied for synthesis; off-grid values
/// are allowed but flagged in the manifest.
bool is_grid_conformant(const DatasetSpec& spec);

std::uint64_t grid_sizes(std::size_t index);  // 200 500 1000 5000 10000 50000
inline constexpr std::size_t kGridSizeCount = 6;
std::uint32_t grid_mlsl(std::size_t index);  // 20 50 100 500 1000
inline constexpr std::size_t kGridMlslCount = 5;
double grid_failure_pct(std::size_t index);  // 5 10 20 30 40 50
inline constexpr std::size_t kGridFailurePctCount = 6;

/// Half-up rounding used for every count derived from a percentage.
std::uint64_t round_half_up(double value);

struct LabeledSequence {
    Word symbols;
    Label label = Label::Normal;
    std::optional<std::string> pattern_id;  // present iff label == Failure
    bool oversampled = false;               // duplicate added by oversample()
};

struct DatasetStats {
    double avg_lsl = 0.0;
    std::uint32_t min_lsl = 0;
    std::uint32_t max_lsl = 0;
    std::uint32_t unique_templates = 0;
    std::uint64_t failure_count = 0;
};

struct PoolSummary {
    std::string pattern_id;
    std::uint64_t words = 0;
    bool exact = false;
    std::uint64_t samples_drawn = 0;
};

struct Manifest {
    std::string tool_version;
    std::string source;  // "synthesis" or "ingest"
    std::vector<std::string> active_patterns;
    std::uint32_t samples_per_pattern = 0;
    std::uint32_t star_limit = 0;
    std::vector<PoolSummary> pool;
    DatasetStats stats;
    std::uint64_t duplicate_records = 0;
    std::uint64_t zero_length_records = 0;
    bool grid_conformant = false;
    std::vector<std::string> warnings;
};

struct Dataset {
    DatasetSpec spec;
    SymbolTable symbols;  // index space of the records; mirrors the model alphabet
    std::vector<LabeledSequence> records;
    Manifest manifest;
};

struct AssembleOptions {
    std::uint32_t samples_per_pattern = kDefaultSamplesPerPattern;
    std::uint32_t max_attempts = kDefaultMaxAttempts;
    /// Normal sequences avoid only the active pattern type by default; the
    /// strict mode rejects walks matching any pattern of either type.
    bool strict_normals = false;
};

/// Assembles a labelled dataset: exactly round(size * failure_pct / 100)
/// failure sequences drawn from the pattern pools, the rest pattern-free
/// accepted walks. Record order is a seed-determined shuffle, so file order
/// carries no label signal. Active patterns must pass the containment check
/// against the model.
Dataset assemble(const BehaviourModel& model, const TemplateCatalog& catalog,
                 std::span<const FailurePattern> patterns, const DatasetSpec& spec,
                 const AssembleOptions& options = {});

/// Disjoint index lists over a dataset's records.
struct Splits {
    std::vector<std::uint64_t> train;
    std::vector<std::uint64_t> validation;
    std::vector<std::uint64_t> test;
};

/// Stratified 80:20 test split, then 20% of the remaining training records
/// as validation; every split keeps the dataset's failure share within
/// rounding. Throws DegenerateClassError when a label is absent.
Splits split(const Dataset& dataset, RandomStream& rng);

/// Duplicates minority-label records (sampling with replacement) until both
/// labels are equally frequent. Originals are retained; duplicates carry the
/// oversampled provenance mark.
std::vector<LabeledSequence> oversample(std::span<const LabeledSequence> records,
                                        RandomStream& rng);

DatasetStats compute_stats(const Dataset& dataset);

struct AuditViolation {
    std::uint64_t record_index;
    std::string reason;
};

/// Re-checks every record against the model and patterns: failure records
/// must match their pattern, normal records must match no active pattern and
/// be accepted by the model, and no record may exceed the length bound.
std::vector<AuditViolation> audit_dataset(const Dataset& dataset, const BehaviourModel& model,
                                          std::span<const FailurePattern> patterns,
                                          bool strict = false);

}  // namespace logsynth
