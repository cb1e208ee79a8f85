#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qsh/config.hpp"

using namespace qsh;

namespace {

const char* kSl2Generic = R"({
  "schema_version": 1,
  "cartan": {"matrix": [[2]], "d": [1]},
  "lambda": [1],
  "regime": {"kind": "generic"},
  "t_max": 3,
  "n_max": 2,
  "pbw_degree_max": 3,
  "tasks": ["serre-dims", "coinvariants"],
  "jobs": 1
})";

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("qsh_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int counter;
};
int TempDir::counter = 0;

}  // namespace

TEST_CASE("config parsing: valid sample") {
    RunConfig cfg = parse_config_text(kSl2Generic);
    CHECK(cfg.generic);
    CHECK(cfg.t_max == 3);
    CHECK(cfg.tasks == std::vector<std::string>{"serre-dims", "coinvariants"});
    CHECK_NOTHROW(cfg.datum());
    CHECK_NOTHROW(cfg.weight());
}

TEST_CASE("config parsing: all violations reported at once") {
    std::string bad = R"({
      "cartan": {"matrix": [[2]], "d": [1]},
      "lambda": [-1],
      "regime": {"kind": "root_of_unity", "l": 4},
      "t_max": -2,
      "tasks": ["nonsense"]
    })";
    try {
        parse_config_text(bad);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.violations.size() >= 4);
        bool dominance = false, odd_l = false, tmax = false, task = false;
        for (const std::string& v : e.violations) {
            dominance |= v.find("dominant") != std::string::npos;
            odd_l |= v.find("odd l") != std::string::npos;
            tmax |= v.find("t_max") != std::string::npos;
            task |= v.find("unknown task") != std::string::npos;
        }
        CHECK(dominance);
        CHECK(odd_l);
        CHECK(tmax);
        CHECK(task);
    }
}

TEST_CASE("config hash tracks every semantic field") {
    RunConfig base = parse_config_text(kSl2Generic);
    RunConfig t = base;
    t.t_max = 4;
    CHECK(base.hash() != t.hash());
    RunConfig l = base;
    l.lambda = {2};
    CHECK(base.hash() != l.hash());
    RunConfig r = base;
    r.generic = false;
    r.ell = 3;
    CHECK(base.hash() != r.hash());
    RunConfig j = base;
    j.jobs = 2;
    CHECK(base.hash() != j.hash());
    CHECK(base.hash() == parse_config_text(kSl2Generic).hash());
}

TEST_CASE("reports are byte-identical across runs and job counts") {
    RunConfig cfg = parse_config_text(kSl2Generic);
    ReportOutcome a = run_tasks_and_report(cfg, {"serre-dims", "coinvariants"});
    ReportOutcome b = run_tasks_and_report(cfg, {"serre-dims", "coinvariants"});
    CHECK(a.json_text == b.json_text);
    CHECK(a.all_passed);
    RunConfig cfg2 = cfg;
    cfg2.jobs = 3;
    ReportOutcome c = run_tasks_and_report(cfg2, {"serre-dims", "coinvariants"});
    // jobs is echoed in the config block; the task payloads must agree
    auto body = [](const std::string& s) { return s.substr(s.rfind("\"tasks\"")); };
    CHECK(body(a.json_text) == body(c.json_text));
}

TEST_CASE("empty task list gives an empty passing report") {
    RunConfig cfg = parse_config_text(kSl2Generic);
    ReportOutcome out = run_tasks_and_report(cfg, {});
    CHECK(out.all_passed);
    CHECK(out.json_text.find("\"tasks\": []") != std::string::npos);
}

TEST_CASE("verdicts embed computed and oracle values") {
    RunConfig cfg = parse_config_text(kSl2Generic);
    ReportOutcome out = run_tasks_and_report(cfg, {"coinvariants"});
    CHECK(out.json_text.find("\"computed\"") != std::string::npos);
    CHECK(out.json_text.find("\"oracle\"") != std::string::npos);
}

TEST_CASE("disk cache: round trip, corruption recovery, version mismatch") {
    TempDir tmp;
    CartanDatum d({{2}}, {1});
    ShuffleContext sctx(d, WeightSpec(d, {1}), Regime::generic());

    DiskBasisCache cache(tmp.path, "scope", Regime::generic());
    Content c{{2}, 1};
    std::shared_ptr<const ComponentBasis> built;
    {
        BasisContext bctx(sctx, &cache);
        built = bctx.component_basis(c);
        CHECK(built->dim == 2);
    }
    {
        // cold context, warm disk: loads and revalidates the same basis
        BasisContext bctx(sctx, &cache);
        auto loaded = bctx.component_basis(c);
        CHECK(loaded->dim == built->dim);
        CHECK(loaded->basis[0] == built->basis[0]);
        CHECK(loaded->pivot_words == built->pivot_words);
    }

    // corrupt the entry: the context must warn, recompute, and still answer
    std::filesystem::path entry;
    for (const auto& f : std::filesystem::directory_iterator(tmp.path)) entry = f.path();
    {
        std::ofstream out(entry);
        out << "{\"schema_version\": 1, \"content_key\": \"2;1\", \"checksum\": \"0\", \"payload\": {}}";
    }
    {
        BasisContext bctx(sctx, &cache);
        auto recomputed = bctx.component_basis(c);
        CHECK(recomputed->dim == 2);
    }

    // version mismatch is a miss
    {
        std::ofstream out(entry);
        out << "{\"schema_version\": 999}";
    }
    {
        BasisContext bctx(sctx, &cache);
        ComponentBasis probe;
        CHECK_FALSE(cache.load(c.key(), probe));
        CHECK(bctx.component_basis(c)->dim == 2);
    }
}

TEST_CASE("task applicability") {
    RunConfig cfg = parse_config_text(kSl2Generic);
    CHECK(task_applicable(cfg, "theorem-b"));
    CHECK(task_applicable(cfg, "prop-sln"));
    CHECK_FALSE(task_applicable(cfg, "koszul-root-of-unity"));
    RunConfig rou = cfg;
    rou.generic = false;
    rou.ell = 3;
    CHECK(task_applicable(rou, "koszul-root-of-unity"));
    CHECK_FALSE(task_applicable(rou, "theorem-b"));
    CHECK_FALSE(task_applicable(rou, "prop-sln"));
}

TEST_CASE("scalars serialize as exact strings") {
    Regime g = Regime::generic();
    FieldElem x = FieldElem::fraction(g, Poly(1L) + Poly::power_of_q(2), Poly(1L) - Poly::power_of_q(3));
    CHECK(x.to_string() == "(1+q^2)/(1-q^3)");
    Regime r3 = Regime::root_of_unity(3);
    CHECK(FieldElem::qpow(r3, 2).to_string() == "-1-q mod Phi_3");
    CHECK((FieldElem::one(r3) + FieldElem::qpow(r3, 2)).to_string() == "-q mod Phi_3");
}
