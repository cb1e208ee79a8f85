#include <algorithm>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qsh/config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"qsh: quantum shuffle algebra homology verification"};
    std::string task;
    std::string config_path;
    std::string out_path;
    int tmax = -1, nmax = -1, jobs = -1;
    std::string cache_dir;
    bool timing = false;

    app.add_option("task", task, "task name or \"all\"")->required();
    app.add_option("--config", config_path, "JSON config file")->required();
    app.add_option("--out", out_path, "report output file (stdout when omitted)");
    app.add_option("--tmax", tmax, "override t_max");
    app.add_option("--nmax", nmax, "override n_max");
    app.add_option("--jobs", jobs, "override worker count");
    app.add_option("--cache-dir", cache_dir, "override basis cache directory");
    app.add_flag("--timing", timing, "include wall-clock timings (breaks byte-identical reports)");
    CLI11_PARSE(app, argc, argv);

    try {
        qsh::RunConfig cfg = qsh::parse_config(config_path);
        if (tmax >= 0) cfg.t_max = tmax;
        if (nmax >= 0) cfg.n_max = nmax;
        if (jobs >= 1) cfg.jobs = jobs;
        if (!cache_dir.empty()) cfg.cache_dir = cache_dir;

        std::vector<std::string> to_run;
        if (task == "all") {
            const std::vector<std::string>& pool = cfg.tasks.empty() ? qsh::known_tasks() : cfg.tasks;
            for (const std::string& t : pool)
                if (qsh::task_applicable(cfg, t)) to_run.push_back(t);
        } else {
            const auto& ts = qsh::known_tasks();
            if (std::find(ts.begin(), ts.end(), task) == ts.end()) {
                std::cerr << "qsh: unknown task \"" << task << "\"; known tasks:";
                for (const auto& t : ts) std::cerr << " " << t;
                std::cerr << "\n";
                return 2;
            }
            to_run.push_back(task);
        }

        qsh::ReportOptions opts;
        opts.include_timing = timing;
        qsh::ReportOutcome outcome = qsh::run_tasks_and_report(cfg, to_run, opts);
        if (out_path.empty()) {
            std::cout << outcome.json_text;
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "qsh: cannot write " << out_path << "\n";
                return 2;
            }
            out << outcome.json_text;
        }
        return outcome.all_passed ? 0 : 1;
    } catch (const qsh::ConfigError& e) {
        std::cerr << "qsh: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "qsh: error: " << e.what() << "\n";
        return 2;
    }
}
