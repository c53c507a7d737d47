#include "logsynth/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>

#include "logsynth/errors.hpp"
#include "logsynth/version.hpp"

namespace logsynth {

IngestResult prepare_real_world(std::span<const RawLogRecord> records,
                                const std::map<std::string, Label>& task_labels,
                                const IngestOptions& options) {
    IngestResult result;

    // Tasks keep their first-seen order; message order within a task is a
    // stable sort by timestamp, so equal timestamps keep input order.
    std::vector<std::string> task_order;
    std::map<std::string, std::vector<const RawLogRecord*>> by_task;
    for (const auto& record : records) {
        auto& bucket = by_task[record.task_id];
        if (bucket.empty()) task_order.push_back(record.task_id);
        bucket.push_back(&record);
    }

    for (const auto& task_id : task_order) {
        const auto label_it = task_labels.find(task_id);
        if (label_it == task_labels.end()) {
            throw FormatError("task '" + task_id + "' has no entry in the labels file");
        }
        const Label label = label_it->second;

        auto& messages = by_task[task_id];
        std::stable_sort(messages.begin(), messages.end(),
                         [](const RawLogRecord* a, const RawLogRecord* b) {
                             return a->timestamp < b->timestamp;
                         });

        std::vector<const RawLogRecord*> kept;
        if (label == Label::Failure) {
            bool saw_failure_message = false;
            for (const auto* m : messages) {
                if (m->is_failure_message) {
                    saw_failure_message = true;
                    break;
                }
                kept.push_back(m);
            }
            if (!saw_failure_message) {
                result.warnings.push_back("task '" + task_id +
                                          "' is labelled failure but has no failure message");
            }
            if (kept.empty()) {
                result.dropped.push_back(
                    {task_id, "empty after truncation: first message is a failure message"});
                continue;
            }
        } else {
            kept.assign(messages.begin(), messages.end());
        }

        if (kept.size() > options.cap) {
            kept.erase(kept.begin(), kept.end() - options.cap);
        }

        LabeledSequence sequence;
        sequence.label = label;
        sequence.symbols.reserve(kept.size());
        for (const auto* m : kept) {
            auto idx = result.symbols.find(m->template_id);
            if (!idx) idx = result.symbols.add(m->template_id);
            sequence.symbols.push_back(*idx);
        }
        result.sequences.push_back(std::move(sequence));
        result.task_ids.push_back(task_id);
    }
    return result;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (const char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    fields.push_back(current);
    return fields;
}

double parse_timestamp(const std::string& text, std::size_t line_number) {
    double value = 0.0;
    const auto* begin = text.data();
    const auto* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw FormatError("bad timestamp '" + text + "'", line_number);
    }
    return value;
}

bool parse_flag(const std::string& text, std::size_t line_number) {
    if (text == "1" || text == "true") return true;
    if (text == "0" || text == "false") return false;
    throw FormatError("bad is_failure_message value '" + text + "'", line_number);
}

}  // namespace

std::vector<RawLogRecord> parse_records_csv(std::istream& in) {
    std::string line;
    std::size_t line_number = 0;
    if (!std::getline(in, line)) throw FormatError("records csv is empty");
    ++line_number;
    if (split_csv_line(line) !=
        std::vector<std::string>{"task_id", "timestamp", "template_id", "is_failure_message"}) {
        throw FormatError("records csv: expected header task_id,timestamp,template_id,is_failure_message",
                          line_number);
    }

    std::vector<RawLogRecord> records;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 4) throw FormatError("expected 4 fields", line_number);
        records.push_back({fields[0], parse_timestamp(fields[1], line_number), fields[2],
                           parse_flag(fields[3], line_number)});
    }
    return records;
}

std::vector<RawLogRecord> parse_records_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    return parse_records_csv(in);
}

std::map<std::string, Label> parse_labels_csv(std::istream& in) {
    std::string line;
    std::size_t line_number = 0;
    if (!std::getline(in, line)) throw FormatError("labels csv is empty");
    ++line_number;
    if (split_csv_line(line) != std::vector<std::string>{"task_id", "label"}) {
        throw FormatError("labels csv: expected header task_id,label", line_number);
    }

    std::map<std::string, Label> labels;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 2) throw FormatError("expected 2 fields", line_number);
        Label label;
        if (fields[1] == "normal") {
            label = Label::Normal;
        } else if (fields[1] == "failure") {
            label = Label::Failure;
        } else {
            throw FormatError("unknown label '" + fields[1] + "'", line_number);
        }
        if (!labels.emplace(fields[0], label).second) {
            throw FormatError("duplicate label for task '" + fields[0] + "'", line_number);
        }
    }
    return labels;
}

std::map<std::string, Label> parse_labels_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    return parse_labels_csv(in);
}

Dataset to_dataset(const IngestResult& result, std::uint32_t cap, std::string dataset_ref) {
    Dataset dataset;
    dataset.spec.size = result.sequences.size();
    dataset.spec.mlsl = cap;
    std::uint64_t failures = 0;
    for (const auto& s : result.sequences) {
        if (s.label == Label::Failure) ++failures;
    }
    dataset.spec.failure_pct =
        result.sequences.empty()
            ? 0.0
            : 100.0 * static_cast<double>(failures) / static_cast<double>(result.sequences.size());
    dataset.spec.model_ref = std::move(dataset_ref);
    dataset.spec.seed = 0;  // nothing randomized on this path

    for (const auto& name : result.symbols.names()) dataset.symbols.add(name);
    dataset.records = result.sequences;

    dataset.manifest.tool_version = std::string(kToolVersion);
    dataset.manifest.source = "ingest";
    dataset.manifest.grid_conformant = false;
    for (const auto& d : result.dropped) {
        dataset.manifest.warnings.push_back("dropped task '" + d.task_id + "': " + d.reason);
    }
    for (const auto& w : result.warnings) dataset.manifest.warnings.push_back(w);

    std::set<Word> distinct;
    for (const auto& r : dataset.records) distinct.insert(r.symbols);
    dataset.manifest.duplicate_records = dataset.records.size() - distinct.size();
    dataset.manifest.stats = compute_stats(dataset);
    return dataset;
}

}  // namespace logsynth
