#include "jue/experiment.hpp"

#include "jue/asymptotics.hpp"
#include "jue/counting.hpp"
#include "jue/field.hpp"
#include "jue/hankel.hpp"
#include "jue/io.hpp"
#include "jue/parametrix.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace jue {

using nlohmann::json;

namespace {
constexpr const char* kCodeVersion = "1.0.0";

const std::vector<std::string> kKinds = {
    "rigidity",           "clt",
    "hankel-sweep",       "edge-asymptotics",
    "merging-asymptotics", "separated-asymptotics",
    "gmc-compare",        "parametrix-check"};

std::size_t g_threads = 0; // 0 = uninitialized, read env on first use

std::size_t env_threads() {
    const char* v = std::getenv("JUE_THREADS");
    if (!v) return 1;
    const long n = std::strtol(v, nullptr, 10);
    return n > 0 ? static_cast<std::size_t>(n) : 1;
}

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const std::size_t workers = std::min(thread_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n == 0) return 0.0;
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<double> doubles_of(const json& j, const char* key) {
    std::vector<double> out;
    if (j.contains(key))
        for (const auto& v : j.at(key)) out.push_back(v.get<double>());
    return out;
}
} // namespace

void set_thread_count(std::size_t n) { g_threads = n == 0 ? 1 : n; }

std::size_t thread_count() {
    if (g_threads == 0) g_threads = env_threads();
    return g_threads;
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    const json j = json::parse(text);
    ExperimentConfig c;
    c.kind = j.value("kind", "");
    c.seed = j.value("seed", std::uint64_t{0});
    c.out = j.value("out", "");
    if (j.contains("n_list"))
        for (const auto& v : j.at("n_list")) c.n_list.push_back(v.get<std::size_t>());
    c.trials = j.value("trials", std::size_t{0});
    if (j.contains("ensemble")) {
        const json& e = j.at("ensemble");
        c.ens_alpha = e.value("alpha", 0.0);
        c.ens_beta = e.value("beta", 0.0);
        c.method = e.value("method", "tridiagonal");
        c.ens_t = doubles_of(e, "t");
    }
    if (j.contains("weight")) {
        const json& w = j.at("weight");
        c.w_alpha = w.value("alpha", 0.0);
        c.w_beta = w.value("beta", 0.0);
        c.t_coeffs = doubles_of(w, "t");
        if (w.contains("jumps"))
            for (const auto& v : w.at("jumps"))
                c.jumps.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    }
    c.epsilon = j.value("epsilon", 0.5);
    c.gammas = doubles_of(j, "gammas");
    c.epsilons = doubles_of(j, "epsilons");
    c.xs = doubles_of(j, "xs");
    c.f_coeffs = doubles_of(j, "f");
    c.w_coeffs = doubles_of(j, "w");
    c.x1 = j.value("x1", 0.0);
    c.x2 = j.value("x2", 0.0);
    c.gamma1 = j.value("gamma1", 0.0);
    c.gamma2 = j.value("gamma2", 0.0);
    c.object = j.value("object", "");
    c.obj_alpha = j.value("obj_alpha", 0.0);
    c.obj_gamma = j.value("obj_gamma", 0.0);
    c.obj_b_imag = j.value("obj_b_imag", 0.5);
    return c;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read config file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return from_json_text(ss.str());
}

std::string ExperimentConfig::canonical_json() const {
    // `out` is deliberately not part of the canonical form: the hash
    // identifies the experiment, and runs that differ only in where results
    // land must produce byte-identical tables.
    json j;
    j["kind"] = kind;
    j["seed"] = seed;
    j["n_list"] = n_list;
    j["trials"] = trials;
    j["ensemble"] = {{"alpha", ens_alpha}, {"beta", ens_beta}, {"method", method}, {"t", ens_t}};
    json jumps_j = json::array();
    for (const auto& [x, g] : jumps) jumps_j.push_back({x, g});
    j["weight"] = {{"alpha", w_alpha}, {"beta", w_beta}, {"jumps", jumps_j}, {"t", t_coeffs}};
    j["epsilon"] = epsilon;
    j["gammas"] = gammas;
    j["epsilons"] = epsilons;
    j["xs"] = xs;
    j["f"] = f_coeffs;
    j["w"] = w_coeffs;
    j["x1"] = x1;
    j["x2"] = x2;
    j["gamma1"] = gamma1;
    j["gamma2"] = gamma2;
    j["object"] = object;
    j["obj_alpha"] = obj_alpha;
    j["obj_gamma"] = obj_gamma;
    j["obj_b_imag"] = obj_b_imag;
    return j.dump();
}

std::string ExperimentConfig::hash() const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_json())));
    return buf;
}

EnsembleSpec ExperimentConfig::ensemble_spec(std::size_t N) const {
    EnsembleSpec s;
    s.N = N;
    s.alpha = ens_alpha;
    s.beta = ens_beta;
    s.t = ens_t.empty() ? ChebSeries{} : ChebSeries(ens_t);
    s.method = method_from_name(method);
    s.seed = seed;
    return s;
}

WeightSpec ExperimentConfig::weight_spec() const {
    std::vector<Jump> js;
    for (const auto& [x, g] : jumps) js.push_back({x, g});
    return WeightSpec(w_alpha, w_beta, js, t_coeffs.empty() ? ChebSeries{} : ChebSeries(t_coeffs));
}

std::vector<std::string> ExperimentConfig::validate() const {
    std::vector<std::string> d;
    if (std::find(kKinds.begin(), kKinds.end(), kind) == kKinds.end())
        d.push_back("unknown experiment kind: '" + kind + "'");

    const bool needs_n = kind != "parametrix-check";
    if (needs_n && n_list.empty()) d.push_back("N-list nonempty");
    for (std::size_t i = 0; i + 1 < n_list.size(); ++i)
        if (n_list[i] >= n_list[i + 1]) d.push_back("N-list ascending");

    if (method != "manova" && method != "mcmc" && method != "tridiagonal")
        d.push_back("unknown sampling method: '" + method + "'");
    if (method == "manova" &&
        (ens_alpha != std::floor(ens_alpha) || ens_beta != std::floor(ens_beta) ||
         ens_alpha < 0.0 || ens_beta < 0.0))
        d.push_back("manova requires integer parameters");
    if (!(ens_alpha > -1.0 && ens_beta > -1.0)) d.push_back("ensemble parameters must exceed -1");
    if (!(w_alpha > -1.0 && w_beta > -1.0)) d.push_back("weight exponents must exceed -1");
    for (const auto& [x, g] : jumps) {
        (void)g;
        if (!(x > -1.0 && x < 1.0)) d.push_back("jump locations must lie in (-1,1)");
    }
    if (jumps.size() > 2) d.push_back("at most two jumps");

    const bool needs_trials = kind == "rigidity" || kind == "clt" || kind == "gmc-compare";
    if (needs_trials && trials == 0) d.push_back("trials must be positive");
    if (kind == "gmc-compare") {
        if (gammas.empty()) d.push_back("gmc-compare needs a gamma grid");
        if (epsilons.empty()) d.push_back("gmc-compare needs an epsilon grid");
    }
    if (kind == "edge-asymptotics" && (gammas.empty() || xs.empty()))
        d.push_back("edge-asymptotics needs gamma and x grids");
    if (kind == "clt" && f_coeffs.empty()) d.push_back("clt needs statistic coefficients f");
    if (kind == "separated-asymptotics" && w_coeffs.empty())
        d.push_back("separated-asymptotics needs perturbation coefficients w");
    if (kind == "parametrix-check" && object != "pinf" && object != "bessel" && object != "hg" &&
        object != "m")
        d.push_back("parametrix-check object must be one of pinf|bessel|hg|m");

    if (!out.empty()) {
        namespace fs = std::filesystem;
        const fs::path parent = fs::path(out).has_parent_path() ? fs::path(out).parent_path() : ".";
        std::error_code ec;
        const fs::path probe = fs::weakly_canonical(parent, ec);
        if (!ec && fs::exists(probe)) {
            std::ofstream t(probe / ".jue_write_probe");
            if (!t)
                d.push_back("output path not writable: " + out);
            else {
                t.close();
                fs::remove(probe / ".jue_write_probe", ec);
            }
        }
    }
    return d;
}

std::string ResultTable::to_csv() const {
    std::string s;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) s += ',';
        s += csv_field(columns[c]);
    }
    s += "\r\n";
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) s += ',';
            s += csv_field(row[c]);
        }
        s += "\r\n";
    }
    return s;
}

std::string ResultTable::to_json() const {
    json j;
    j["columns"] = columns;
    j["rows"] = rows;
    for (const auto& [k, v] : metadata) {
        if (!v.empty() && (v.front() == '{' || v.front() == '[')) {
            const json parsed = json::parse(v, nullptr, false);
            if (!parsed.is_discarded()) {
                j[k] = parsed;
                continue;
            }
        }
        j[k] = v;
    }
    return j.dump(2) + "\n";
}

namespace {
std::string fd(double v) { return format_double(v); }

ResultTable run_rigidity(const ExperimentConfig& cfg) {
    ResultTable t;
    t.columns = {"N", "trial", "seed", "sup_h", "inf_h", "max_scaled_fluct", "argmax_index"};
    json summary = json::array();
    for (std::size_t N : cfg.n_list) {
        const EnsembleSpec spec = cfg.ensemble_spec(N);
        spec.validate();
        const double logN = std::log(static_cast<double>(N));
        std::vector<RigidityStats> stats(cfg.trials);
        parallel_for(cfg.trials, [&](std::size_t trial) {
            stats[trial] = rigidity_stats(sample(spec, trial));
        });
        std::vector<double> fluct(cfg.trials), count(cfg.trials);
        std::size_t fh = 0, ch = 0;
        const double lo = std::max(0.0, 1.0 - cfg.epsilon), hi = 1.0 + cfg.epsilon;
        for (std::size_t i = 0; i < cfg.trials; ++i) {
            const RigidityStats& st = stats[i];
            fluct[i] = st.max_scaled_fluct * static_cast<double>(N) / logN;
            count[i] = std::max(st.sup_h, -st.inf_h) / (std::numbers::sqrt2 * logN);
            if (fluct[i] >= lo && fluct[i] <= hi) ++fh;
            if (count[i] >= lo && count[i] <= hi) ++ch;
            t.rows.push_back({std::to_string(N), std::to_string(i), std::to_string(cfg.seed),
                              fd(st.sup_h), fd(st.inf_h), fd(st.max_scaled_fluct),
                              std::to_string(st.argmax_index)});
        }
        const WilsonInterval wf = wilson_interval(fh, cfg.trials);
        const WilsonInterval wc = wilson_interval(ch, cfg.trials);
        summary.push_back({{"N", N},
                           {"trials", cfg.trials},
                           {"epsilon", cfg.epsilon},
                           {"median_fluct_ratio", median(fluct)},
                           {"median_count_ratio", median(count)},
                           {"fluct_event", {{"freq", wf.freq}, {"lo", wf.lo}, {"hi", wf.hi}}},
                           {"count_event", {{"freq", wc.freq}, {"lo", wc.lo}, {"hi", wc.hi}}}});
    }
    t.metadata["summary"] = summary.dump();
    return t;
}

ResultTable run_clt(const ExperimentConfig& cfg) {
    ResultTable t;
    t.columns = {"N", "trials", "emp_mean", "emp_var", "mu_pred", "var_pred"};
    const ChebSeries f(cfg.f_coeffs);
    const double center = cfg.f_coeffs.empty() ? 0.0 : cfg.f_coeffs[0];
    for (std::size_t N : cfg.n_list) {
        const EnsembleSpec spec = cfg.ensemble_spec(N);
        spec.validate();
        std::vector<double> xs(cfg.trials);
        parallel_for(cfg.trials, [&](std::size_t trial) {
            const EigenvalueSample s = sample(spec, trial);
            double acc = 0.0;
            for (double lam : s.values) acc += f.eval(lam);
            xs[trial] = acc - static_cast<double>(N) * center;
        });
        double mean = 0.0;
        for (double x : xs) mean += x;
        mean /= static_cast<double>(cfg.trials);
        double var = 0.0;
        for (double x : xs) var += (x - mean) * (x - mean);
        var /= static_cast<double>(cfg.trials - 1);
        const CltMoments m = clt_moments(f, cfg.ens_alpha, cfg.ens_beta,
                                         cfg.ens_t.empty() ? ChebSeries{} : ChebSeries(cfg.ens_t));
        t.rows.push_back({std::to_string(N), std::to_string(cfg.trials), fd(mean), fd(var),
                          fd(m.mu), fd(m.var)});
    }
    return t;
}

ResultTable run_hankel_sweep(const ExperimentConfig& cfg) {
    ResultTable t;
    t.columns = {"N", "log_d", "node_count", "stable"};
    const WeightSpec w = cfg.weight_spec();
    for (std::size_t N : cfg.n_list) {
        const HankelResult r = log_hankel_detailed(w, N);
        t.rows.push_back({std::to_string(N), fd(r.log_d), std::to_string(r.node_count),
                          r.stable ? "true" : "false"});
    }
    return t;
}

ResultTable run_edge(const ExperimentConfig& cfg) {
    ResultTable t;
    t.columns = {"N", "x", "gamma", "measured", "predicted", "residual"};
    const WeightSpec base = cfg.weight_spec().without_jumps();
    for (std::size_t N : cfg.n_list)
        for (double g : cfg.gammas)
            for (double x : cfg.xs) {
                const double measured = log_exp_moment(N, x, g, base);
                const double predicted = predict_edge_ratio(N, x, g);
                t.rows.push_back({std::to_string(N), fd(x), fd(g), fd(measured), fd(predicted),
                                  fd(measured - predicted)});
            }
    return t;
}

ResultTable run_merging(const ExperimentConfig& cfg) {
    ResultTable t;
    t.columns = {"N", "x1", "x2", "gamma1", "gamma2", "measured", "predicted", "residual"};
    const WeightSpec base = cfg.weight_spec().without_jumps();
    for (std::size_t N : cfg.n_list) {
        const double measured =
            log_hankel(base.with_jump(cfg.x1, cfg.gamma1).with_jump(cfg.x2, cfg.gamma2), N) -
            log_hankel(base.with_jump(cfg.x1, cfg.gamma1 + cfg.gamma2), N);
        const double predicted = predict_merging_ratio(N, cfg.x1, cfg.x2, cfg.gamma1, cfg.gamma2);
        t.rows.push_back({std::to_string(N), fd(cfg.x1), fd(cfg.x2), fd(cfg.gamma1), fd(cfg.gamma2),
                          fd(measured), fd(predicted), fd(measured - predicted)});
    }
    return t;
}

ResultTable run_separated(const ExperimentConfig& cfg) {
    ResultTable t;
    t.columns = {"N", "measured", "predicted", "residual"};
    const WeightSpec base = cfg.weight_spec();
    const ChebSeries w(cfg.w_coeffs);
    const ChebSeries t_plus_w = base.t + w;
    const WeightSpec shifted(base.alpha, base.beta, base.jumps, t_plus_w);
    for (std::size_t N : cfg.n_list) {
        const double measured = log_hankel(shifted, N) - log_hankel(base, N);
        const double predicted =
            predict_separated_ratio(N, w, base.jumps, base.alpha, base.beta, base.t);
        t.rows.push_back(
            {std::to_string(N), fd(measured), fd(predicted), fd(measured - predicted)});
    }
    return t;
}

ResultTable run_gmc(const ExperimentConfig& cfg) {
    ResultTable t;
    t.columns = {"N", "gamma", "eps", "trials", "ks_t0", "ks_t1", "ks_t2"};
    for (std::size_t N : cfg.n_list) {
        const EnsembleSpec spec = cfg.ensemble_spec(N);
        spec.validate();
        for (double g : cfg.gammas)
            for (double eps : cfg.epsilons) {
                const MeasureComparison c = compare_measures(spec, g, eps, cfg.trials);
                t.rows.push_back({std::to_string(N), fd(g), fd(eps), std::to_string(cfg.trials),
                                  fd(c.ks[0]), fd(c.ks[1]), fd(c.ks[2])});
            }
    }
    return t;
}

ResultTable run_parametrix(const ExperimentConfig& cfg) {
    ResultTable t;
    t.columns = {"object", "check",        "residual",     "tolerance",
                 "passed", "res_eta_1e-4", "res_eta_1e-5", "res_eta_1e-6"};
    std::vector<CheckResult> checks;
    if (cfg.object == "pinf") {
        checks = check_phi();
        auto g = check_global(cfg.weight_spec(), cfg.seed == 0 ? 7 : cfg.seed);
        checks.insert(checks.end(), g.begin(), g.end());
    } else if (cfg.object == "bessel") {
        checks = check_bessel(cfg.obj_alpha, cfg.seed == 0 ? 7 : cfg.seed);
    } else if (cfg.object == "hg") {
        checks = check_hg(cplx(0.0, cfg.obj_b_imag), cfg.seed == 0 ? 7 : cfg.seed);
    } else if (cfg.object == "m") {
        checks = check_model(cfg.obj_gamma, cfg.seed == 0 ? 7 : cfg.seed);
    } else {
        throw std::invalid_argument("parametrix-check: unknown object '" + cfg.object + "'");
    }
    for (const auto& c : checks) {
        std::vector<std::string> row{cfg.object, c.name, fd(c.residual), fd(c.tolerance),
                                     c.passed() ? "true" : "false"};
        for (std::size_t k = 0; k < 3; ++k)
            row.push_back(k < c.eta_residuals.size() ? fd(c.eta_residuals[k]) : "");
        t.rows.push_back(std::move(row));
    }
    return t;
}
} // namespace

ResultTable run(const ExperimentConfig& config) {
    const auto diagnostics = config.validate();
    if (!diagnostics.empty()) {
        std::string msg = "invalid config:";
        for (const auto& d : diagnostics) msg += " " + d + ";";
        throw std::invalid_argument(msg);
    }

    const auto t0 = std::chrono::steady_clock::now();
    ResultTable t;
    if (config.kind == "rigidity") t = run_rigidity(config);
    else if (config.kind == "clt") t = run_clt(config);
    else if (config.kind == "hankel-sweep") t = run_hankel_sweep(config);
    else if (config.kind == "edge-asymptotics") t = run_edge(config);
    else if (config.kind == "merging-asymptotics") t = run_merging(config);
    else if (config.kind == "separated-asymptotics") t = run_separated(config);
    else if (config.kind == "gmc-compare") t = run_gmc(config);
    else if (config.kind == "parametrix-check") t = run_parametrix(config);
    else throw std::invalid_argument("unknown experiment kind: '" + config.kind + "'");
    const auto t1 = std::chrono::steady_clock::now();

    const std::string h = config.hash();
    t.columns.push_back("config_hash");
    for (auto& row : t.rows) row.push_back(h);
    t.metadata["kind"] = config.kind;
    t.metadata["config_hash"] = h;
    t.metadata["code_version"] = kCodeVersion;
    t.metadata["config"] = config.canonical_json();
    t.metadata["wall_time_s"] =
        format_double(std::chrono::duration<double>(t1 - t0).count());

    if (!config.out.empty()) {
        write_text_atomic(config.out + ".csv", t.to_csv());
        write_text_atomic(config.out + ".json", t.to_json());
    }
    return t;
}

} // namespace jue
