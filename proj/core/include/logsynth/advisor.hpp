#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace logsynth {

/// The three predictor configurations (encoder + embedding) that dominate
/// across the studied dataset grid.
enum class ModelConfig { CnnLogkey2vec, CnnBert, BiLstmBert };

std::string_view to_string(ModelConfig config);  // "CNN+L" / "CNN+B" / "BiLSTM+B"

struct HyperParams {
    std::uint32_t batch_size;
    std::uint32_t epochs;
};

/// Best configuration for a dataset's size and failure percentage.
/// Thresholds follow the fitted decision rules; a value exactly at a
/// threshold takes the <= branch.
ModelConfig recommend_configuration(std::uint64_t dataset_size, double failure_pct);

/// Average F1 the configuration achieved on datasets with these
/// characteristics. BiLSTM+B additionally depends on the maximum sequence
/// length; omitting it there throws MissingMlslError.
double expected_f1(ModelConfig config, std::uint64_t dataset_size, double failure_pct,
                   std::optional<std::uint32_t> mlsl = std::nullopt);

/// Training batch size and epoch count. The dataset size snaps to the
/// nearest studied level (ties snap downward); the long-sequence rule
/// (mlsl >= 500) takes priority over the failure-percentage rule.
HyperParams hyperparameters(std::uint64_t dataset_size, double failure_pct, std::uint32_t mlsl);

struct Advice {
    ModelConfig config;
    double expected_f1;
    HyperParams hyperparameters;
    /// Set when the inputs fall outside the studied ranges
    /// (size 200..50000, failure 5..50%, mlsl 20..1000).
    bool extrapolated;
};

Advice advise(std::uint64_t dataset_size, double failure_pct, std::uint32_t mlsl);

}  // namespace logsynth
