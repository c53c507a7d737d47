#include "logsynth/advisor.hpp"

#include <array>
#include <cstdlib>
#include <limits>

#include "logsynth/errors.hpp"

namespace logsynth {

std::string_view to_string(ModelConfig config) {
    switch (config) {
        case ModelConfig::CnnLogkey2vec: return "CNN+L";
        case ModelConfig::CnnBert: return "CNN+B";
        case ModelConfig::BiLstmBert: return "BiLSTM+B";
    }
    return "?";
}

ModelConfig recommend_configuration(std::uint64_t dataset_size, double failure_pct) {
    if (dataset_size <= 3000) {
        if (failure_pct <= 15.0) return ModelConfig::BiLstmBert;
        if (dataset_size <= 350) return ModelConfig::CnnBert;
        return ModelConfig::CnnLogkey2vec;
    }
    return ModelConfig::CnnLogkey2vec;
}

double expected_f1(ModelConfig config, std::uint64_t dataset_size, double failure_pct,
                   std::optional<std::uint32_t> mlsl) {
    switch (config) {
        case ModelConfig::CnnLogkey2vec:
            if (dataset_size <= 350) return failure_pct <= 7.5 ? 0.516 : 0.906;
            return 0.985;
        case ModelConfig::CnnBert:
            if (dataset_size <= 350) return failure_pct <= 7.5 ? 0.35 : 0.816;
            return 0.977;
        case ModelConfig::BiLstmBert:
            if (!mlsl) {
                throw MissingMlslError(
                    "the BiLSTM+B estimate needs the maximum log-sequence length");
            }
            if (*mlsl > 750) return 0.664;
            if (dataset_size > 350) return 0.945;
            return failure_pct <= 15.0 ? 0.355 : 0.945;
    }
    std::abort();
}

namespace {

constexpr std::array<std::uint64_t, 6> kSizeLevels = {200, 500, 1000, 5000, 10000, 50000};
constexpr std::array<std::uint32_t, 6> kBatchDefault = {10, 15, 20, 30, 150, 300};
constexpr std::array<std::uint32_t, 6> kBatchLowFailure = {10, 15, 30, 60, 300, 600};
constexpr std::array<std::uint32_t, 6> kEpochsLongSequences = {20, 20, 10, 10, 5, 5};

// Nearest studied size level; a tie snaps to the smaller level.
std::size_t snap_size_level(std::uint64_t dataset_size) {
    std::size_t best = 0;
    std::uint64_t best_distance = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = 0; i < kSizeLevels.size(); ++i) {
        const std::uint64_t level = kSizeLevels[i];
        const std::uint64_t distance =
            dataset_size > level ? dataset_size - level : level - dataset_size;
        if (distance < best_distance) {
            best_distance = distance;
            best = i;
        }
    }
    return best;
}

}  // namespace

HyperParams hyperparameters(std::uint64_t dataset_size, double failure_pct, std::uint32_t mlsl) {
    const auto level = snap_size_level(dataset_size);

    HyperParams params{};
    if (mlsl >= 500) {
        params.batch_size = 5;  // long sequences; this rule outranks the others
    } else if (failure_pct <= 30.0) {
        params.batch_size = kBatchLowFailure[level];
    } else {
        params.batch_size = kBatchDefault[level];
    }
    params.epochs = mlsl >= 500 ? kEpochsLongSequences[level] : 20;
    return params;
}

Advice advise(std::uint64_t dataset_size, double failure_pct, std::uint32_t mlsl) {
    if (dataset_size < 1) throw ValidationError("dataset size must be at least 1");
    if (!(failure_pct > 0.0 && failure_pct <= 100.0)) {
        throw ValidationError("failure percentage must be in (0, 100]");
    }
    if (mlsl < 1) throw ValidationError("mlsl must be at least 1");

    Advice advice{};
    advice.config = recommend_configuration(dataset_size, failure_pct);
    advice.expected_f1 = expected_f1(advice.config, dataset_size, failure_pct, mlsl);
    advice.hyperparameters = hyperparameters(dataset_size, failure_pct, mlsl);
    advice.extrapolated = dataset_size < 200 || dataset_size > 50000 || failure_pct < 5.0 ||
                          failure_pct > 50.0 || mlsl < 20 || mlsl > 1000;
    return advice;
}

}  // namespace logsynth
