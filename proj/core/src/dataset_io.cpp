#include "logsynth/dataset_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "logsynth/errors.hpp"

namespace logsynth {

namespace {

using nlohmann::ordered_json;

std::ofstream open_for_write(const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError("cannot write '" + file.string() + "'");
    return out;
}

ordered_json record_to_json(const LabeledSequence& record, const SymbolTable& symbols) {
    ordered_json obj;
    obj["seq"] = ordered_json::array();
    for (const auto s : record.symbols) obj["seq"].push_back(symbols.name(s));
    obj["label"] = std::string(to_string(record.label));
    obj["pattern"] = record.pattern_id ? ordered_json(*record.pattern_id) : ordered_json(nullptr);
    if (record.oversampled) obj["oversampled"] = true;
    return obj;
}

ordered_json spec_to_json(const DatasetSpec& spec) {
    ordered_json obj;
    obj["size"] = spec.size;
    obj["mlsl"] = spec.mlsl;
    obj["failure_pct"] = spec.failure_pct;
    obj["pattern_type"] =
        spec.pattern_type ? ordered_json(std::string(to_string(*spec.pattern_type)))
                          : ordered_json(nullptr);
    obj["model"] = spec.model_ref;
    obj["seed"] = spec.seed;
    obj["pattern_filter"] =
        spec.pattern_filter ? ordered_json(*spec.pattern_filter) : ordered_json(nullptr);
    return obj;
}

ordered_json stats_to_json(const DatasetStats& stats) {
    ordered_json obj;
    obj["avg_lsl"] = stats.avg_lsl;
    obj["min_lsl"] = stats.min_lsl;
    obj["max_lsl"] = stats.max_lsl;
    obj["unique_templates"] = stats.unique_templates;
    obj["failure_count"] = stats.failure_count;
    return obj;
}

}  // namespace

void write_dataset(const Dataset& dataset, const Splits* splits,
                   const std::filesystem::path& directory, const WriteOptions& options,
                   const TemplateCatalog* catalog) {
    std::filesystem::create_directories(directory);

    {
        auto out = open_for_write(directory / kRecordsFileName);
        for (const auto& record : dataset.records) {
            out << record_to_json(record, dataset.symbols).dump() << '\n';
        }
    }

    ordered_json manifest;
    manifest["spec"] = spec_to_json(dataset.spec);
    manifest["tool_version"] = dataset.manifest.tool_version;
    manifest["source"] = dataset.manifest.source;
    manifest["alphabet"] = dataset.symbols.names();
    manifest["active_patterns"] = dataset.manifest.active_patterns;
    ordered_json pool = ordered_json::array();
    for (const auto& entry : dataset.manifest.pool) {
        pool.push_back({{"pattern", entry.pattern_id},
                        {"words", entry.words},
                        {"exact", entry.exact},
                        {"samples_drawn", entry.samples_drawn}});
    }
    manifest["pool"] = {{"samples_per_pattern", dataset.manifest.samples_per_pattern},
                        {"star_limit", dataset.manifest.star_limit},
                        {"per_pattern", std::move(pool)}};
    manifest["stats"] = stats_to_json(dataset.manifest.stats);
    manifest["duplicate_records"] = dataset.manifest.duplicate_records;
    manifest["zero_length_records"] = dataset.manifest.zero_length_records;
    manifest["grid_conformant"] = dataset.manifest.grid_conformant;
    manifest["warnings"] = dataset.manifest.warnings;
    if (splits) {
        manifest["splits"] = {{"train", splits->train},
                              {"validation", splits->validation},
                              {"test", splits->test}};
    }

    {
        auto out = open_for_write(directory / kManifestFileName);
        out << manifest.dump(2) << '\n';
    }

    if (options.csv) export_csv(dataset, directory / kRecordsCsvFileName);
    if (options.rendered) {
        if (!catalog) throw ValidationError("rendered export needs the template catalog");
        export_rendered(dataset, *catalog, directory / kRenderedFileName);
    }
}

void write_oversampled_train(std::span<const LabeledSequence> records, const SymbolTable& symbols,
                             const std::filesystem::path& directory) {
    auto out = open_for_write(directory / kOversampledTrainFileName);
    for (const auto& record : records) {
        out << record_to_json(record, symbols).dump() << '\n';
    }
}

namespace {

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open '" + file.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const ordered_json& manifest_key(const ordered_json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw FormatError("manifest: missing key '" + std::string(key) + "'");
    }
    return *it;
}

}  // namespace

ReadDatasetResult read_dataset(const std::filesystem::path& directory) {
    ordered_json manifest;
    try {
        manifest = ordered_json::parse(read_file(directory / kManifestFileName));
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("manifest: ") + e.what());
    }
    if (!manifest.is_object()) throw FormatError("manifest: expected a JSON object");

    ReadDatasetResult result;
    Dataset& dataset = result.dataset;

    try {
        const auto& spec = manifest_key(manifest, "spec");
        dataset.spec.size = manifest_key(spec, "size").get<std::uint64_t>();
        dataset.spec.mlsl = manifest_key(spec, "mlsl").get<std::uint32_t>();
        dataset.spec.failure_pct = manifest_key(spec, "failure_pct").get<double>();
        const auto& type = manifest_key(spec, "pattern_type");
        if (!type.is_null()) {
            const auto text = type.get<std::string>();
            if (text != "F" && text != "I") throw FormatError("manifest: bad pattern_type");
            dataset.spec.pattern_type =
                text == "F" ? PatternType::Finite : PatternType::Infinite;
        }
        dataset.spec.model_ref = manifest_key(spec, "model").get<std::string>();
        dataset.spec.seed = manifest_key(spec, "seed").get<std::uint64_t>();
        const auto& filter = manifest_key(spec, "pattern_filter");
        if (!filter.is_null()) dataset.spec.pattern_filter = filter.get<std::vector<std::string>>();

        dataset.manifest.tool_version = manifest_key(manifest, "tool_version").get<std::string>();
        dataset.manifest.source = manifest_key(manifest, "source").get<std::string>();
        for (const auto& name : manifest_key(manifest, "alphabet")) {
            dataset.symbols.add(name.get<std::string>());
        }
        dataset.manifest.active_patterns =
            manifest_key(manifest, "active_patterns").get<std::vector<std::string>>();
        const auto& pool = manifest_key(manifest, "pool");
        dataset.manifest.samples_per_pattern =
            manifest_key(pool, "samples_per_pattern").get<std::uint32_t>();
        dataset.manifest.star_limit = manifest_key(pool, "star_limit").get<std::uint32_t>();
        for (const auto& entry : manifest_key(pool, "per_pattern")) {
            dataset.manifest.pool.push_back({manifest_key(entry, "pattern").get<std::string>(),
                                             manifest_key(entry, "words").get<std::uint64_t>(),
                                             manifest_key(entry, "exact").get<bool>(),
                                             manifest_key(entry, "samples_drawn").get<std::uint64_t>()});
        }
        const auto& stats = manifest_key(manifest, "stats");
        dataset.manifest.stats.avg_lsl = manifest_key(stats, "avg_lsl").get<double>();
        dataset.manifest.stats.min_lsl = manifest_key(stats, "min_lsl").get<std::uint32_t>();
        dataset.manifest.stats.max_lsl = manifest_key(stats, "max_lsl").get<std::uint32_t>();
        dataset.manifest.stats.unique_templates =
            manifest_key(stats, "unique_templates").get<std::uint32_t>();
        dataset.manifest.stats.failure_count =
            manifest_key(stats, "failure_count").get<std::uint64_t>();
        dataset.manifest.duplicate_records =
            manifest_key(manifest, "duplicate_records").get<std::uint64_t>();
        dataset.manifest.zero_length_records =
            manifest_key(manifest, "zero_length_records").get<std::uint64_t>();
        dataset.manifest.grid_conformant = manifest_key(manifest, "grid_conformant").get<bool>();
        dataset.manifest.warnings =
            manifest_key(manifest, "warnings").get<std::vector<std::string>>();

        if (manifest.contains("splits")) {
            const auto& splits = manifest["splits"];
            Splits s;
            s.train = manifest_key(splits, "train").get<std::vector<std::uint64_t>>();
            s.validation = manifest_key(splits, "validation").get<std::vector<std::uint64_t>>();
            s.test = manifest_key(splits, "test").get<std::vector<std::uint64_t>>();
            result.splits = std::move(s);
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("manifest: ") + e.what());
    }

    const auto records_path = directory / kRecordsFileName;
    std::ifstream in(records_path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + records_path.string() + "'");
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        ordered_json obj;
        try {
            obj = ordered_json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw FormatError(std::string("records: ") + e.what(), line_number);
        }
        const auto record_key = [&](const char* key) -> const ordered_json& {
            const auto it = obj.find(key);
            if (it == obj.end()) {
                throw FormatError("records: missing key '" + std::string(key) + "'", line_number);
            }
            return *it;
        };
        try {
            LabeledSequence record;
            const auto& seq = record_key("seq");
            if (!seq.is_array()) throw FormatError("records: 'seq' must be an array", line_number);
            for (const auto& name : seq) {
                const auto idx = dataset.symbols.find(name.get<std::string>());
                if (!idx) {
                    throw FormatError("records: symbol '" + name.get<std::string>() +
                                          "' not in the manifest alphabet",
                                      line_number);
                }
                record.symbols.push_back(*idx);
            }
            const auto label = record_key("label").get<std::string>();
            if (label == "normal") {
                record.label = Label::Normal;
            } else if (label == "failure") {
                record.label = Label::Failure;
            } else {
                throw FormatError("records: unknown label '" + label + "'", line_number);
            }
            const auto& pattern = record_key("pattern");
            if (!pattern.is_null()) record.pattern_id = pattern.get<std::string>();
            if (obj.contains("oversampled")) record.oversampled = obj["oversampled"].get<bool>();
            dataset.records.push_back(std::move(record));
        } catch (const FormatError&) {
            throw;
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(std::string("records: ") + e.what(), line_number);
        }
    }
    return result;
}

void export_csv(const Dataset& dataset, const std::filesystem::path& file) {
    auto out = open_for_write(file);
    out << "index,label,pattern,sequence\n";
    for (std::size_t i = 0; i < dataset.records.size(); ++i) {
        const auto& record = dataset.records[i];
        out << i << ',' << to_string(record.label) << ','
            << (record.pattern_id ? *record.pattern_id : "") << ",\"";
        for (std::size_t j = 0; j < record.symbols.size(); ++j) {
            if (j > 0) out << ' ';
            out << dataset.symbols.name(record.symbols[j]);
        }
        out << "\"\n";
    }
}

void export_rendered(const Dataset& dataset, const TemplateCatalog& catalog,
                     const std::filesystem::path& file) {
    auto out = open_for_write(file);
    bool first = true;
    for (const auto& record : dataset.records) {
        if (!first) out << '\n';
        first = false;
        for (const auto s : record.symbols) {
            const auto& name = dataset.symbols.name(s);
            const auto text = catalog.text(name);
            if (!text) throw ValidationError("catalog has no template text for '" + name + "'");
            out << *text << '\n';
        }
    }
}

}  // namespace logsynth
