#include <doctest.h>

#include "jue/experiment.hpp"
#include "jue/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace jue;

namespace {
const char* kRigidityConfig = R"({
  "kind": "rigidity",
  "seed": 3,
  "n_list": [12],
  "trials": 10,
  "ensemble": {"alpha": 0.0, "beta": 0.0, "method": "tridiagonal"},
  "epsilon": 0.5
})";

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool has(const std::vector<std::string>& v, const std::string& needle) {
    for (const auto& s : v)
        if (s.find(needle) != std::string::npos) return true;
    return false;
}
} // namespace

TEST_CASE("value formatting and CSV quoting") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(2.0) == "2");
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("he said \"hi\"") == "\"he said \"\"hi\"\"\"");
    CHECK(csv_field("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("FNV-1a reference vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("atomic writes land whole and leave no temp file") {
    const auto dir = std::filesystem::temp_directory_path() / "jue_io_test";
    std::filesystem::remove_all(dir);
    const auto target = dir / "sub" / "file.txt";
    write_text_atomic(target.string(), "hello\n");
    CHECK(slurp(target) == "hello\n");
    CHECK(!std::filesystem::exists(target.string() + ".tmp"));
    write_text_atomic(target.string(), "replaced\n");
    CHECK(slurp(target) == "replaced\n");
    std::filesystem::remove_all(dir);
}

TEST_CASE("config parsing and diagnostics") {
    const ExperimentConfig cfg = ExperimentConfig::from_json_text(kRigidityConfig);
    CHECK(cfg.kind == "rigidity");
    CHECK(cfg.seed == 3);
    REQUIRE(cfg.n_list.size() == 1);
    CHECK(cfg.n_list[0] == 12);
    CHECK(cfg.validate().empty());

    ExperimentConfig empty_n = cfg;
    empty_n.n_list.clear();
    CHECK(has(empty_n.validate(), "N-list nonempty"));

    ExperimentConfig bad_manova = cfg;
    bad_manova.method = "manova";
    bad_manova.ens_alpha = 0.5;
    CHECK(has(bad_manova.validate(), "manova requires integer parameters"));

    ExperimentConfig bad_kind = cfg;
    bad_kind.kind = "foo";
    CHECK(has(bad_kind.validate(), "unknown experiment kind"));

    ExperimentConfig unsorted = cfg;
    unsorted.n_list = {20, 10};
    CHECK(has(unsorted.validate(), "ascending"));
}

TEST_CASE("config hash is recomputable from the canonical form") {
    const ExperimentConfig cfg = ExperimentConfig::from_json_text(kRigidityConfig);
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(cfg.canonical_json())));
    CHECK(cfg.hash() == std::string(buf));

    ExperimentConfig other = cfg;
    other.seed = 4;
    CHECK(other.hash() != cfg.hash());
}

TEST_CASE("experiment runs are deterministic and thread-count independent") {
    ExperimentConfig cfg = ExperimentConfig::from_json_text(kRigidityConfig);
    set_thread_count(1);
    const ResultTable a = run(cfg);
    set_thread_count(4);
    const ResultTable b = run(cfg);
    set_thread_count(1);
    CHECK(a.to_csv() == b.to_csv());
    CHECK(a.rows.size() == 10);
    CHECK(a.columns.back() == "config_hash");
    CHECK(a.metadata.at("config_hash") == cfg.hash());
}

TEST_CASE("invalid kind is rejected at run time") {
    ExperimentConfig cfg = ExperimentConfig::from_json_text(kRigidityConfig);
    cfg.kind = "foo";
    CHECK_THROWS_AS(run(cfg), std::invalid_argument);
}

TEST_CASE("parametrix experiment reports passing checks") {
    ExperimentConfig cfg;
    cfg.kind = "parametrix-check";
    cfg.object = "m";
    cfg.obj_gamma = 0.4;
    const ResultTable t = run(cfg);
    REQUIRE(!t.rows.empty());
    for (const auto& row : t.rows) CHECK(row[4] == "true");
}

TEST_CASE("output files are written atomically next to the prefix") {
    ExperimentConfig cfg = ExperimentConfig::from_json_text(kRigidityConfig);
    const auto dir = std::filesystem::temp_directory_path() / "jue_exp_test";
    std::filesystem::remove_all(dir);
    cfg.out = (dir / "res").string();
    const ResultTable t = run(cfg);
    CHECK(slurp(dir / "res.csv") == t.to_csv());
    CHECK(slurp(dir / "res.json") == t.to_json());
    std::filesystem::remove_all(dir);
}
