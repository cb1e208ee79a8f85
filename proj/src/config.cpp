#include "qsh/config.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <json.hpp>

namespace qsh {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kConfigSchemaVersion = 1;
constexpr int kReportSchemaVersion = 1;
constexpr int kCacheSchemaVersion = 1;

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

}  // namespace

std::string RunConfig::canonical_json() const {
    ordered_json j;
    j["schema_version"] = kConfigSchemaVersion;
    j["cartan"]["matrix"] = cartan_matrix;
    j["cartan"]["d"] = d;
    j["lambda"] = lambda;
    if (generic) {
        j["regime"]["kind"] = "generic";
    } else {
        j["regime"]["kind"] = "root_of_unity";
        j["regime"]["l"] = ell;
    }
    j["t_max"] = t_max;
    j["n_max"] = n_max;
    j["pbw_degree_max"] = pbw_degree_max;
    j["w0_word"] = w0_word;
    j["tasks"] = tasks;
    j["jobs"] = jobs;
    return j.dump();
}

std::string RunConfig::hash() const { return hex64(fnv1a(canonical_json())); }

namespace {

RunConfig parse_json_checked(const ordered_json& j) {
    std::vector<std::string> errs;
    RunConfig cfg;
    auto require = [&](bool cond, const std::string& msg) {
        if (!cond) errs.push_back(msg);
        return cond;
    };

    if (j.contains("schema_version") && j["schema_version"].is_number_integer())
        require(j["schema_version"].get<int>() == kConfigSchemaVersion,
                "schema_version must be " + std::to_string(kConfigSchemaVersion));

    if (require(j.contains("cartan") && j["cartan"].is_object(), "missing object field: cartan")) {
        const auto& c = j["cartan"];
        if (require(c.contains("matrix") && c["matrix"].is_array(), "cartan.matrix must be an array")) {
            for (const auto& row : c["matrix"]) {
                std::vector<int> r;
                if (!row.is_array()) {
                    errs.push_back("cartan.matrix rows must be arrays");
                    break;
                }
                for (const auto& x : row) r.push_back(x.get<int>());
                cfg.cartan_matrix.push_back(std::move(r));
            }
        }
        if (require(c.contains("d") && c["d"].is_array(), "cartan.d must be an array"))
            for (const auto& x : c["d"]) cfg.d.push_back(x.get<int>());
    }
    if (!cfg.cartan_matrix.empty()) {
        try {
            CartanDatum datum(cfg.cartan_matrix, cfg.d);
            positive_roots(datum);  // finite-type gate
        } catch (const std::exception& e) {
            errs.push_back(std::string("cartan: ") + e.what());
        }
    }

    if (require(j.contains("lambda") && j["lambda"].is_array(), "missing array field: lambda")) {
        for (const auto& x : j["lambda"]) cfg.lambda.push_back(x.get<int>());
        if (cfg.lambda.size() != cfg.cartan_matrix.size())
            errs.push_back("lambda length must equal the Cartan rank");
        for (int x : cfg.lambda)
            if (x < 0) errs.push_back("lambda must be dominant: coordinate " + std::to_string(x) + " < 0");
    }

    if (require(j.contains("regime") && j["regime"].is_object(), "missing object field: regime")) {
        std::string kind = j["regime"].value("kind", "");
        if (kind == "generic") {
            cfg.generic = true;
        } else if (kind == "root_of_unity") {
            cfg.generic = false;
            cfg.ell = j["regime"].value("l", 0);
            if (cfg.ell < 3 || cfg.ell % 2 == 0)
                errs.push_back("root_of_unity requires odd l >= 3, got l = " + std::to_string(cfg.ell));
        } else {
            errs.push_back("regime.kind must be \"generic\" or \"root_of_unity\"");
        }
    }
    // dominance + restriction |(lambda, alpha_i)| < l where applicable
    if (errs.empty()) {
        try {
            WeightSpec w = cfg.weight();
            if (!cfg.generic && !w.restricted_for(cfg.ell))
                errs.push_back("lambda violates the restriction |(lambda, alpha_i)| < l");
        } catch (const std::exception& e) {
            errs.push_back(std::string("lambda: ") + e.what());
        }
    }

    cfg.t_max = j.value("t_max", 4);
    cfg.n_max = j.value("n_max", 2);
    cfg.pbw_degree_max = j.value("pbw_degree_max", 4);
    cfg.jobs = j.value("jobs", 1);
    if (cfg.t_max < 0) errs.push_back("t_max must be >= 0");
    if (cfg.n_max < 0) errs.push_back("n_max must be >= 0");
    if (cfg.pbw_degree_max < 0) errs.push_back("pbw_degree_max must be >= 0");
    if (cfg.jobs < 1) errs.push_back("jobs must be >= 1");

    if (j.contains("w0_word")) {
        for (const auto& x : j["w0_word"]) cfg.w0_word.push_back(x.get<int>());
        for (int letter : cfg.w0_word)
            if (letter < 1 || letter > static_cast<int>(cfg.cartan_matrix.size()))
                errs.push_back("w0_word letter " + std::to_string(letter) + " out of range");
    }
    if (j.contains("tasks")) {
        for (const auto& t : j["tasks"]) {
            std::string name = t.get<std::string>();
            const auto& ts = known_tasks();
            if (std::find(ts.begin(), ts.end(), name) == ts.end())
                errs.push_back("unknown task: " + name);
            cfg.tasks.push_back(std::move(name));
        }
    }
    cfg.cache_dir = j.value("cache_dir", "");

    if (!errs.empty()) throw ConfigError(std::move(errs));
    return cfg;
}

}  // namespace

RunConfig parse_config_text(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw ConfigError({std::string("malformed JSON: ") + e.what()});
    }
    return parse_json_checked(j);
}

RunConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open config file: " + path});
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

bool task_applicable(const RunConfig& cfg, const std::string& task) {
    if (task == "koszul-generic" || task == "theorem-b") return cfg.generic;
    if (task == "koszul-root-of-unity") return !cfg.generic;
    if (task == "prop-sln") {
        if (!cfg.generic) return false;
        try {
            if (!cfg.datum().is_sl(static_cast<int>(cfg.lambda.size()) + 1)) return false;
        } catch (...) {
            return false;
        }
        for (size_t i = 0; i + 1 < cfg.lambda.size(); ++i)
            if (cfg.lambda[i] != 0) return false;
        return !cfg.lambda.empty() && cfg.lambda.back() == 1;
    }
    return true;
}

DiskBasisCache::DiskBasisCache(std::filesystem::path dir, std::string scope_hash, Regime regime)
    : dir_(std::move(dir)), scope_(std::move(scope_hash)), regime_(regime) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path DiskBasisCache::path_for(const std::string& content_key) const {
    std::string safe = content_key;
    for (char& c : safe)
        if (c == ',' ) c = '_';
        else if (c == ';') c = '-';
    return dir_ / (scope_ + "_" + safe + ".json");
}

namespace {

ordered_json word_to_json(const Word& w) {
    std::vector<int> letters;
    for (char ch : w) {
        Letter l = static_cast<Letter>(ch);
        letters.push_back(l == LAMBDA_LETTER ? 0 : static_cast<int>(l));
    }
    return ordered_json(letters);
}

Word word_from_json(const ordered_json& j) {
    Word w;
    for (const auto& x : j) {
        int v = x.get<int>();
        w.push_back(v == 0 ? static_cast<char>(LAMBDA_LETTER) : static_cast<char>(v));
    }
    return w;
}

}  // namespace

bool DiskBasisCache::load(const std::string& content_key, ComponentBasis& out) {
    std::ifstream in(path_for(content_key));
    if (!in) return false;
    ordered_json j;
    try {
        j = ordered_json::parse(in);
        if (j.value("schema_version", -1) != kCacheSchemaVersion) return false;
        if (j.value("content_key", "") != content_key) return false;
        std::string payload = j["payload"].dump();
        if (j.value("checksum", "") != hex64(fnv1a(payload))) {
            std::cerr << "qsh: warning: cache checksum mismatch for " << content_key << "\n";
            return false;
        }
        const auto& p = j["payload"];
        out = ComponentBasis{};
        out.dim = p["dim"].get<int>();
        for (const auto& x : p["pivot_words"]) out.pivot_words.push_back(x.get<int>());
        for (const auto& wj : p["words"]) out.words.push_back(word_from_json(wj));
        for (const auto& vj : p["basis"]) {
            LinComb v;
            for (const auto& term : vj)
                v.add(word_from_json(term[0]), FieldElem::parse(regime_, term[1].get<std::string>()));
            out.basis.push_back(std::move(v));
        }
    } catch (const std::exception&) {
        std::cerr << "qsh: warning: unreadable cache entry for " << content_key << "\n";
        return false;
    }
    return true;
}

void DiskBasisCache::store(const std::string& content_key, const ComponentBasis& basis) {
    ordered_json payload;
    payload["dim"] = basis.dim;
    payload["pivot_words"] = basis.pivot_words;
    payload["words"] = ordered_json::array();
    for (const Word& w : basis.words) payload["words"].push_back(word_to_json(w));
    payload["basis"] = ordered_json::array();
    for (const LinComb& v : basis.basis) {
        ordered_json terms = ordered_json::array();
        for (const auto& [w, cf] : v.terms) terms.push_back({word_to_json(w), cf.to_string()});
        payload["basis"].push_back(std::move(terms));
    }
    ordered_json j;
    j["schema_version"] = kCacheSchemaVersion;
    j["content_key"] = content_key;
    j["checksum"] = hex64(fnv1a(payload.dump()));
    j["payload"] = std::move(payload);

    std::filesystem::path target = path_for(content_key);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream outf(tmp);
        outf << j.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, target);  // atomic replace keeps concurrent writers idempotent
}

ReportOutcome run_tasks_and_report(const RunConfig& cfg, const std::vector<std::string>& task_names,
                                   const ReportOptions& opts) {
    ReportOutcome out;
    ordered_json rep;
    rep["schema_version"] = kReportSchemaVersion;
    rep["config_hash"] = cfg.hash();
    rep["config"] = ordered_json::parse(cfg.canonical_json());
    rep["tasks"] = ordered_json::array();

    std::unique_ptr<DiskBasisCache> cache;
    if (!cfg.cache_dir.empty())
        cache = std::make_unique<DiskBasisCache>(cfg.cache_dir, cfg.hash(), cfg.regime());

    for (const std::string& name : task_names) {
        TaskInputs in(cfg.datum(), cfg.weight(), cfg.regime());
        in.t_max = cfg.t_max;
        in.n_max = cfg.n_max;
        in.pbw_degree_max = cfg.pbw_degree_max;
        in.w0_word = cfg.w0_word;
        in.jobs = cfg.jobs;
        in.store = cache.get();
        auto t0 = std::chrono::steady_clock::now();
        TaskResult res = run_task(in, name);
        auto t1 = std::chrono::steady_clock::now();
        ordered_json tj;
        tj["name"] = res.name;
        tj["applicable"] = res.applicable;
        tj["passed"] = res.passed;
        if (!res.error.empty()) tj["error"] = res.error;
        tj["verdicts"] = ordered_json::array();
        for (const Verdict& v : res.verdicts) {
            ordered_json vj;
            vj["check"] = v.check;
            vj["computed"] = v.computed;
            vj["oracle"] = v.oracle;
            vj["pass"] = v.pass;
            tj["verdicts"].push_back(std::move(vj));
        }
        tj["dim_tables"] = ordered_json::object();
        for (const auto& [table, rows] : res.dim_tables) {
            ordered_json t = ordered_json::object();
            for (const auto& [key, dims] : rows) t[key] = dims;
            tj["dim_tables"][table] = std::move(t);
        }
        tj["flags"] = res.flags;
        if (opts.include_timing)
            tj["elapsed_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        rep["tasks"].push_back(std::move(tj));
        out.all_passed = out.all_passed && res.passed;
    }
    rep["all_passed"] = out.all_passed;
    out.json_text = rep.dump(2) + "\n";
    return out;
}

}  // namespace qsh
