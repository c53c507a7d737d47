#pragma once

#include <filesystem>
#include <optional>

#include "logsynth/dataset.hpp"

namespace logsynth {

inline constexpr const char* kRecordsFileName = "records.jsonl";
inline constexpr const char* kManifestFileName = "manifest.json";
inline constexpr const char* kRecordsCsvFileName = "records.csv";
inline constexpr const char* kRenderedFileName = "rendered.log";
inline constexpr const char* kOversampledTrainFileName = "train_oversampled.jsonl";

struct WriteOptions {
    bool csv = false;       // also emit records.csv
    bool rendered = false;  // also emit rendered.log (needs the catalog)
};

/// Writes records.jsonl plus manifest.json into `directory` (created if
/// missing). Splits, when given, are stored in the manifest. Output is
/// byte-deterministic for a fixed dataset.
void write_dataset(const Dataset& dataset, const Splits* splits,
                   const std::filesystem::path& directory, const WriteOptions& options = {},
                   const TemplateCatalog* catalog = nullptr);

/// Writes oversampled training records as their own JSONL file; duplicated
/// records carry "oversampled": true.
void write_oversampled_train(std::span<const LabeledSequence> records,
                             const SymbolTable& symbols,
                             const std::filesystem::path& directory);

struct ReadDatasetResult {
    Dataset dataset;
    std::optional<Splits> splits;
};

/// Round-trip inverse of write_dataset. Throws FormatError (with the line
/// number for records.jsonl problems) on any deviation from the format.
ReadDatasetResult read_dataset(const std::filesystem::path& directory);

/// index,label,pattern,space-joined template IDs.
void export_csv(const Dataset& dataset, const std::filesystem::path& file);

/// One text line per template (catalog text verbatim), a blank line between
/// sequences.
void export_rendered(const Dataset& dataset, const TemplateCatalog& catalog,
                     const std::filesystem::path& file);

}  // namespace logsynth
