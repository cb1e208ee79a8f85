#pragma once

#include <filesystem>

#include "qsh/tasks.hpp"

namespace qsh {

/// Config rejection carrying every violation at once.
struct ConfigError : std::runtime_error {
    explicit ConfigError(std::vector<std::string> vs)
        : std::runtime_error(join(vs)), violations(std::move(vs)) {}
    std::vector<std::string> violations;

private:
    static std::string join(const std::vector<std::string>& vs) {
        std::string s = "invalid configuration:";
        for (const auto& v : vs) s += "\n  - " + v;
        return s;
    }
};

struct RunConfig {
    std::vector<std::vector<int>> cartan_matrix;
    std::vector<int> d;
    std::vector<int> lambda;
    bool generic = true;
    int ell = 0;
    int t_max = 4;
    int n_max = 2;
    int pbw_degree_max = 4;
    std::vector<int> w0_word;
    std::vector<std::string> tasks;
    std::string cache_dir;
    int jobs = 1;

    CartanDatum datum() const { return CartanDatum(cartan_matrix, d); }
    WeightSpec weight() const { return WeightSpec(datum(), lambda); }
    Regime regime() const { return generic ? Regime::generic() : Regime::root_of_unity(ell); }

    /// FNV-1a over the canonical serialization of every semantic field.
    std::string hash() const;
    /// Canonical JSON echo of the semantic fields (used in reports and hashing).
    std::string canonical_json() const;
};

/// Parses and validates; throws ConfigError listing all violations.
RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& json_text);

/// Whether a task makes sense for this config (regime/type constraints).
bool task_applicable(const RunConfig& cfg, const std::string& task);

/// JSON-file-backed component basis store under cache_dir; entries are scoped
/// by the semantic config hash, written atomically, and versioned.
class DiskBasisCache : public BasisCacheStore {
public:
    DiskBasisCache(std::filesystem::path dir, std::string scope_hash, Regime regime);
    bool load(const std::string& content_key, ComponentBasis& out) override;
    void store(const std::string& content_key, const ComponentBasis& basis) override;

private:
    std::filesystem::path path_for(const std::string& content_key) const;
    std::filesystem::path dir_;
    std::string scope_;
    Regime regime_;
};

struct ReportOptions {
    bool include_timing = false;  // off by default: reports must be byte-identical
};

struct ReportOutcome {
    std::string json_text;
    bool all_passed = true;
};

/// Runs the given tasks against the config and renders the report.
ReportOutcome run_tasks_and_report(const RunConfig& cfg, const std::vector<std::string>& task_names,
                                   const ReportOptions& opts = {});

}  // namespace qsh
