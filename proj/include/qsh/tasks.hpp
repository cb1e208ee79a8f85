#pragma once

#include "qsh/complex.hpp"

namespace qsh {

/// One comparison inside a task; both sides are embedded so a report never
/// asserts a bare boolean.
struct Verdict {
    std::string check;
    std::string computed;
    std::string oracle;
    bool pass = false;
};

struct TaskResult {
    std::string name;
    bool applicable = true;  // e.g. theorem-b is generic-only
    bool passed = false;
    std::vector<Verdict> verdicts;
    /// table name -> block key -> dims per degree
    std::map<std::string, std::map<std::string, std::vector<int>>> dim_tables;
    std::vector<std::string> flags;  // truncation / incompleteness notices
    std::string error;               // set when the task aborted exceptionally
};

struct TaskInputs {
    CartanDatum datum;
    std::optional<WeightSpec> lambda;
    Regime regime = Regime::generic();
    int t_max = 4;
    int n_max = 2;
    int pbw_degree_max = 4;
    std::vector<int> w0_word;  // empty = lexicographically least
    int jobs = 1;
    BasisCacheStore* store = nullptr;

    TaskInputs(CartanDatum d, std::optional<WeightSpec> l, Regime r)
        : datum(std::move(d)), lambda(std::move(l)), regime(r) {}
};

const std::vector<std::string>& known_tasks();

/// Runs one named verification task; unknown names throw std::invalid_argument.
TaskResult run_task(const TaskInputs& in, const std::string& task_name);

}  // namespace qsh
