#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "logsynth/dataset.hpp"

namespace logsynth {

struct RawLogRecord {
    std::string task_id;
    double timestamp = 0.0;
    std::string template_id;
    bool is_failure_message = false;
};

struct IngestOptions {
    std::uint32_t cap = 1000;  // keep only the final cap messages per task
};

struct DroppedTask {
    std::string task_id;
    std::string reason;
};

struct IngestResult {
    SymbolTable symbols;
    std::vector<LabeledSequence> sequences;  // one per surviving task, in first-seen order
    std::vector<std::string> task_ids;       // aligned with sequences
    std::vector<DroppedTask> dropped;
    std::vector<std::string> warnings;
};

/// Turns labelled raw logs into failure-prediction sequences: one sequence
/// per task ordered by timestamp (ties keep input order); failure tasks are
/// truncated strictly before their first failure message so the visible part
/// looks normal; sequences longer than the cap keep only the final cap
/// entries. A failing task whose very first message is a failure message
/// would become empty and is dropped and reported (never silently skipped).
IngestResult prepare_real_world(std::span<const RawLogRecord> records,
                                const std::map<std::string, Label>& task_labels,
                                const IngestOptions& options = {});

/// CSV with header task_id,timestamp,template_id,is_failure_message.
std::vector<RawLogRecord> parse_records_csv(std::istream& in);
std::vector<RawLogRecord> parse_records_csv_file(const std::filesystem::path& path);

/// CSV with header task_id,label; label is "normal" or "failure".
std::map<std::string, Label> parse_labels_csv(std::istream& in);
std::map<std::string, Label> parse_labels_csv_file(const std::filesystem::path& path);

/// Packages an ingest result as a dataset (manifest source "ingest") so the
/// usual serialization, stats, and splitting apply.
Dataset to_dataset(const IngestResult& result, std::uint32_t cap, std::string dataset_ref);

}  // namespace logsynth
