#ifndef PHYLOTORIC_DATABASE_HPP
#define PHYLOTORIC_DATABASE_HPP

#include "phylotoric/pipeline.hpp"

namespace phylotoric {

// `<datatype>_<tree_id>-<model_id>.<ext>`; datatype and model are validated.
std::string file_name(const std::string& datatype, int tree_id, const std::string& model_id,
                      const std::string& ext);

// Writes the per-entry files (invariants yaml, both parametrizations, the
// transform and its inverse, both ideals, serialized objects) and returns
// their names.  Re-running with identical inputs is byte-identical.
std::vector<std::string> emit_entry(const PipelineResult& result, const std::string& out_dir);

struct BuildEntryStatus {
    int tree_id;
    std::string model_id;
    std::string status; // "ok" or "failed"
    std::string error;  // empty when ok
    std::vector<std::string> files;
};

struct BuildReport {
    std::vector<BuildEntryStatus> entries;
    std::string manifest_path;
    bool all_ok() const {
        for (const auto& e : entries)
            if (e.status != "ok") return false;
        return true;
    }
};

// Emits every catalog entry up to max_leaves for the selected models (all
// four when `models` is empty), fanning out up to `jobs` workers, then writes
// manifest.yaml.  Failed entries are recorded, not fatal.
BuildReport build_database(int max_leaves, const std::vector<std::string>& models,
                           const std::string& out_dir, int jobs = 1,
                           const PipelineOptions& options = {});

enum class VerifyStatus { Match, Mismatch, NotComputed, ReferenceOnly };

struct VerifyRow {
    int tree_id = 0;
    std::string model_id, field, expected, found, source;
    VerifyStatus status = VerifyStatus::Match;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    std::vector<std::string> malformed; // reference rows that could not be read
    bool any_mismatch = false;
    std::string text() const;
};

// Compares a built database directory against a reference table
// (YAML list of {tree_id, model_id, field, value, source}).
VerifyReport verify_reference(const std::string& db_dir, const std::string& reference_path);

} // namespace phylotoric

#endif
