// Integration checks for the command-line binary; the built binary path is
// passed as argv[1] by ctest.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {
int failures = 0;

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "ok: " << what << "\n";
    } else {
        std::cout << "FAILED: " << what << "\n";
        ++failures;
    }
}

int run_cmd(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    return rc == -1 ? -1 : WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write(const fs::path& p, const std::string& s) {
    std::ofstream f(p, std::ios::binary);
    f << s;
}
} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-jue>\n";
        return 2;
    }
    const std::string jue = argv[1];
    const fs::path dir = fs::temp_directory_path() / "jue_cli_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string d = dir.string();

    // validate: good and bad configs, diagnostics on stdout
    write(dir / "good.json", R"({"kind":"rigidity","seed":3,"n_list":[10],"trials":4,
        "ensemble":{"alpha":0,"beta":0,"method":"tridiagonal"}})");
    write(dir / "bad.json", R"({"kind":"rigidity","seed":3,"n_list":[],"trials":4,
        "ensemble":{"alpha":0.5,"beta":0,"method":"manova"}})");
    expect(run_cmd(jue + " validate --config " + d + "/good.json > " + d + "/v1.txt") == 0,
           "validate accepts a valid config");
    expect(slurp(dir / "v1.txt").empty(), "valid config yields empty diagnostics");
    expect(run_cmd(jue + " validate --config " + d + "/bad.json > " + d + "/v2.txt") != 0,
           "validate flags a broken config");
    const std::string diag = slurp(dir / "v2.txt");
    expect(diag.find("N-list nonempty") != std::string::npos, "empty N-list diagnostic");
    expect(diag.find("manova requires integer parameters") != std::string::npos,
           "manova integrality diagnostic");

    // unknown experiment kind and unknown subcommand exit nonzero
    write(dir / "foo.json", R"({"kind":"foo","seed":1,"n_list":[4],"trials":2})");
    expect(run_cmd(jue + " rigidity --config " + d + "/foo.json 2> /dev/null") != 0,
           "mismatched kind is a usage error");
    expect(run_cmd(jue + " frobnicate 2> /dev/null") != 0, "unknown subcommand exits nonzero");

    // determinism: same config + seed -> identical CSV bytes
    expect(run_cmd(jue + " rigidity --config " + d + "/good.json --out " + d + "/r1 > /dev/null") == 0,
           "rigidity run 1");
    expect(run_cmd(jue + " rigidity --config " + d + "/good.json --out " + d + "/r2 --threads 3 > /dev/null") == 0,
           "rigidity run 2");
    expect(slurp(dir / "r1.csv") == slurp(dir / "r2.csv"), "byte-identical CSV across reruns");
    expect(!slurp(dir / "r1.json").empty(), "JSON sidecar written");
    expect(run_cmd(jue + " rigidity --config " + d + "/good.json --seed 9 --out " + d + "/r3 > /dev/null") == 0,
           "rigidity run with overridden seed");
    expect(slurp(dir / "r1.csv") != slurp(dir / "r3.csv"), "seed override changes the rows");

    // hankel direct mode
    expect(run_cmd(jue + " hankel --alpha 0 --beta 0 --n 1 > " + d + "/h.json") == 0, "hankel direct");
    const std::string h = slurp(dir / "h.json");
    expect(h.find("\"logD\"") != std::string::npos, "hankel JSON has logD");
    expect(h.find("0.6931471805") != std::string::npos, "hankel logD value is log 2");
    expect(h.find("stability_flag") != std::string::npos, "hankel JSON has stability flag");

    // predict direct mode
    expect(run_cmd(jue + " predict --regime edge --n 40 --x 0.0 --gamma 0.5 > " + d + "/p.json") == 0,
           "predict edge");
    const std::string p = slurp(dir / "p.json");
    expect(p.find("\"prediction\"") != std::string::npos, "predict JSON has prediction");
    expect(p.find("\"regime\"") != std::string::npos, "predict JSON has regime");

    // sample determinism
    expect(run_cmd(jue + " sample --n 3 --draws 2 --seed 5 --out " + d + "/s1.csv") == 0, "sample 1");
    expect(run_cmd(jue + " sample --n 3 --draws 2 --seed 5 --out " + d + "/s2.csv") == 0, "sample 2");
    expect(slurp(dir / "s1.csv") == slurp(dir / "s2.csv"), "sample CSV deterministic");
    expect(slurp(dir / "s1.csv").find("lambda_3") != std::string::npos, "sample CSV header");

    // parametrix-check residual report
    expect(run_cmd(jue + " parametrix-check --object m --gamma 0.4 > " + d + "/m.json") == 0,
           "parametrix-check passes");
    expect(slurp(dir / "m.json").find("\"passed\": true") != std::string::npos,
           "residual report marks success");

    fs::remove_all(dir);
    if (failures) {
        std::cout << failures << " cli check(s) failed\n";
        return 1;
    }
    std::cout << "all cli checks passed\n";
    return 0;
}
