#include "jue/asymptotics.hpp"
#include "jue/experiment.hpp"
#include "jue/io.hpp"
#include "jue/hankel.hpp"
#include "jue/sampler.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stod(tok));
    return out;
}

// "x1:g1[,x2:g2]" -> [(x1,g1),...]
std::vector<std::pair<double, double>> parse_jumps(const std::string& s) {
    std::vector<std::pair<double, double>> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        const auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--jumps", "expected x:gamma pairs, got '" + tok + "'");
        out.emplace_back(std::stod(tok.substr(0, colon)), std::stod(tok.substr(colon + 1)));
    }
    return out;
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty())
        std::cout << content;
    else
        jue::write_text_atomic(out, content);
}

struct ConfigOpts {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string out;
    std::size_t threads = 0;
};

void add_config_opts(CLI::App* cmd, ConfigOpts& o, bool config_required) {
    auto* c = cmd->add_option("--config", o.config_path, "experiment config file (JSON)");
    if (config_required) c->required();
    cmd->add_option("--seed", o.seed, "override the master seed")
        ->each([&o](const std::string&) { o.seed_set = true; });
    cmd->add_option("--out", o.out, "override the output path prefix");
    cmd->add_option("--threads", o.threads, "worker threads (default: JUE_THREADS env, else 1)");
}

jue::ExperimentConfig load_config(const ConfigOpts& o, const std::string& expected_kind) {
    jue::ExperimentConfig cfg = jue::ExperimentConfig::from_file(o.config_path);
    if (!expected_kind.empty()) {
        if (cfg.kind.empty())
            cfg.kind = expected_kind;
        else if (cfg.kind != expected_kind)
            throw CLI::ValidationError("--config", "config kind '" + cfg.kind +
                                                       "' does not match subcommand (expected '" +
                                                       expected_kind + "')");
    }
    if (o.seed_set) cfg.seed = o.seed;
    if (!o.out.empty()) cfg.out = o.out;
    if (o.threads > 0) jue::set_thread_count(o.threads);
    return cfg;
}

int run_and_report(const jue::ExperimentConfig& cfg) {
    const jue::ResultTable t = jue::run(cfg);
    if (cfg.out.empty())
        std::cout << t.to_csv();
    else
        std::cout << "wrote " << cfg.out << ".csv and " << cfg.out << ".json ("
                  << t.rows.size() << " rows, config " << cfg.hash() << ")\n";
    return 0;
}

template <typename T>
void append_raw(std::string& buf, T v) {
    char bytes[sizeof(T)];
    std::memcpy(bytes, &v, sizeof(T));
    buf.append(bytes, sizeof(T));
}

int cmd_sample(std::size_t n, double alpha, double beta, const std::string& method,
               std::size_t draws, std::uint64_t seed, const std::string& out,
               const std::string& format) {
    jue::EnsembleSpec spec;
    spec.N = n;
    spec.alpha = alpha;
    spec.beta = beta;
    spec.method = jue::method_from_name(method);
    spec.seed = seed;
    spec.validate();

    if (format == "csv") {
        std::string s = "draw";
        for (std::size_t j = 1; j <= n; ++j) s += ",lambda_" + std::to_string(j);
        s += "\r\n";
        for (std::size_t d = 0; d < draws; ++d) {
            const jue::EigenvalueSample smp = jue::sample(spec, d);
            s += std::to_string(d);
            for (double v : smp.values) s += "," + jue::format_double(v);
            s += "\r\n";
        }
        emit(out, s);
        return 0;
    }
    if (format == "bin") {
        // header: magic, N, alpha, beta, method code, seed, draw count;
        // payload: draws x N little-endian doubles, ascending per draw
        std::string buf = "JUE1";
        append_raw<std::uint64_t>(buf, n);
        append_raw<double>(buf, alpha);
        append_raw<double>(buf, beta);
        append_raw<std::uint32_t>(buf, static_cast<std::uint32_t>(spec.method));
        append_raw<std::uint64_t>(buf, seed);
        append_raw<std::uint64_t>(buf, draws);
        for (std::size_t d = 0; d < draws; ++d)
            for (double v : jue::sample(spec, d).values) append_raw<double>(buf, v);
        if (out.empty()) throw CLI::ValidationError("--out", "binary format requires --out");
        jue::write_text_atomic(out, buf);
        return 0;
    }
    throw CLI::ValidationError("--format", "expected csv or bin");
}

int cmd_hankel_direct(double alpha, double beta, const std::string& jumps_s,
                      const std::string& tcheb_s, std::size_t n, const std::string& out) {
    std::vector<jue::Jump> jumps;
    for (const auto& [x, g] : parse_jumps(jumps_s)) jumps.push_back({x, g});
    const std::vector<double> tc = parse_doubles(tcheb_s);
    const jue::WeightSpec w(alpha, beta, jumps,
                            tc.empty() ? jue::ChebSeries{} : jue::ChebSeries(tc));
    const jue::HankelResult r = jue::log_hankel_detailed(w, n);
    json j;
    j["logD"] = r.log_d;
    j["node_count"] = r.node_count;
    j["stability_flag"] = r.stable;
    emit(out, j.dump(2) + "\n");
    return 0;
}

int cmd_predict_direct(const std::string& regime, std::size_t n, double x, double gamma, double x1,
                       double x2, double gamma1, double gamma2, double alpha, double beta,
                       const std::string& jumps_s, const std::string& tcheb_s,
                       const std::string& w_s, const std::string& out) {
    json inputs;
    inputs["N"] = n;
    double prediction = 0.0;
    if (regime == "edge") {
        inputs["x"] = x;
        inputs["gamma"] = gamma;
        prediction = jue::predict_edge_ratio(n, x, gamma);
    } else if (regime == "merging") {
        inputs["x1"] = x1;
        inputs["x2"] = x2;
        inputs["gamma1"] = gamma1;
        inputs["gamma2"] = gamma2;
        prediction = jue::predict_merging_ratio(n, x1, x2, gamma1, gamma2);
    } else if (regime == "separated") {
        std::vector<jue::Jump> jumps;
        for (const auto& [jx, jg] : parse_jumps(jumps_s)) jumps.push_back({jx, jg});
        const std::vector<double> tc = parse_doubles(tcheb_s);
        const std::vector<double> wc = parse_doubles(w_s);
        if (wc.empty()) throw CLI::ValidationError("--w", "separated regime needs --w c0,c1,...");
        inputs["alpha"] = alpha;
        inputs["beta"] = beta;
        inputs["jumps"] = jumps_s;
        inputs["t"] = tc;
        inputs["w"] = wc;
        prediction = jue::predict_separated_ratio(
            n, jue::ChebSeries(wc), jumps, alpha, beta,
            tc.empty() ? jue::ChebSeries{} : jue::ChebSeries(tc));
    } else {
        throw CLI::ValidationError("--regime", "expected edge, merging or separated");
    }
    json j;
    j["regime"] = regime;
    j["inputs"] = inputs;
    j["prediction"] = prediction;
    emit(out, j.dump(2) + "\n");
    return 0;
}

// Prediction-only N-sweep from a *-asymptotics config (no Hankel evaluation).
int cmd_predict_batch(const ConfigOpts& o) {
    const jue::ExperimentConfig cfg = load_config(o, "");
    jue::ResultTable t;
    if (cfg.kind == "edge-asymptotics") {
        t.columns = {"N", "x", "gamma", "prediction"};
        for (std::size_t N : cfg.n_list)
            for (double g : cfg.gammas)
                for (double xx : cfg.xs)
                    t.rows.push_back({std::to_string(N), jue::format_double(xx),
                                      jue::format_double(g),
                                      jue::format_double(jue::predict_edge_ratio(N, xx, g))});
    } else if (cfg.kind == "merging-asymptotics") {
        t.columns = {"N", "x1", "x2", "gamma1", "gamma2", "prediction"};
        for (std::size_t N : cfg.n_list)
            t.rows.push_back(
                {std::to_string(N), jue::format_double(cfg.x1), jue::format_double(cfg.x2),
                 jue::format_double(cfg.gamma1), jue::format_double(cfg.gamma2),
                 jue::format_double(
                     jue::predict_merging_ratio(N, cfg.x1, cfg.x2, cfg.gamma1, cfg.gamma2))});
    } else if (cfg.kind == "separated-asymptotics") {
        t.columns = {"N", "prediction"};
        const jue::WeightSpec base = cfg.weight_spec();
        const jue::ChebSeries w(cfg.w_coeffs);
        for (std::size_t N : cfg.n_list)
            t.rows.push_back({std::to_string(N),
                              jue::format_double(jue::predict_separated_ratio(
                                  N, w, base.jumps, base.alpha, base.beta, base.t))});
    } else {
        throw CLI::ValidationError("--config",
                                   "predict batch mode needs an *-asymptotics config kind");
    }
    const std::string h = cfg.hash();
    t.columns.push_back("config_hash");
    for (auto& row : t.rows) row.push_back(h);
    if (cfg.out.empty())
        std::cout << t.to_csv();
    else
        jue::write_text_atomic(cfg.out + ".csv", t.to_csv());
    return 0;
}

int cmd_parametrix(const jue::ExperimentConfig& cfg, const std::string& out) {
    const jue::ResultTable t = jue::run(cfg);
    bool all_passed = true;
    json checks = json::array();
    for (const auto& row : t.rows) {
        json c;
        for (std::size_t k = 0; k < t.columns.size(); ++k) c[t.columns[k]] = row[k];
        checks.push_back(c);
        if (row[4] != "true") all_passed = false;
    }
    json j;
    j["object"] = cfg.object;
    j["passed"] = all_passed;
    j["checks"] = checks;
    emit(out, j.dump(2) + "\n");
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for a log-gas eigenvalue ensemble on [-1,1]"};
    app.require_subcommand(1);

    // sample
    auto* sc_sample = app.add_subcommand("sample", "draw eigenvalue configurations");
    std::size_t s_n = 10, s_draws = 1;
    double s_alpha = 0.0, s_beta = 0.0;
    std::string s_method = "tridiagonal", s_out, s_format = "csv";
    std::uint64_t s_seed = 0;
    sc_sample->add_option("--n", s_n, "matrix size")->required();
    sc_sample->add_option("--alpha", s_alpha, "weight exponent at +1");
    sc_sample->add_option("--beta", s_beta, "weight exponent at -1");
    sc_sample->add_option("--method", s_method, "manova | mcmc | tridiagonal");
    sc_sample->add_option("--draws", s_draws, "number of independent draws");
    sc_sample->add_option("--seed", s_seed, "master seed");
    sc_sample->add_option("--out", s_out, "output file (default: stdout)");
    sc_sample->add_option("--format", s_format, "csv | bin");

    // config-driven experiments
    auto* sc_rigidity = app.add_subcommand("rigidity", "counting-function fluctuation experiment");
    auto* sc_clt = app.add_subcommand("clt", "linear-statistic mean/variance experiment");
    auto* sc_gmc = app.add_subcommand("gmc", "exponential-measure comparison experiment");
    ConfigOpts o_rigidity, o_clt, o_gmc;
    add_config_opts(sc_rigidity, o_rigidity, true);
    add_config_opts(sc_clt, o_clt, true);
    add_config_opts(sc_gmc, o_gmc, true);

    // hankel
    auto* sc_hankel = app.add_subcommand("hankel", "log moment determinant of a weight");
    double h_alpha = 0.0, h_beta = 0.0;
    std::string h_jumps, h_tcheb, h_out;
    std::size_t h_n = 0;
    ConfigOpts o_hankel;
    sc_hankel->add_option("--alpha", h_alpha, "weight exponent at +1");
    sc_hankel->add_option("--beta", h_beta, "weight exponent at -1");
    sc_hankel->add_option("--jumps", h_jumps, "jump list x1:g1[,x2:g2]");
    sc_hankel->add_option("--tcheb", h_tcheb, "Chebyshev coefficients c0,c1,...");
    sc_hankel->add_option("--n", h_n, "determinant order");
    sc_hankel->add_option("--out", h_out, "output file (default: stdout)");
    sc_hankel->add_option("--config", o_hankel.config_path, "hankel-sweep config for batch mode");
    sc_hankel->add_option("--seed", o_hankel.seed, "override the master seed")
        ->each([&o_hankel](const std::string&) { o_hankel.seed_set = true; });
    sc_hankel->add_option("--threads", o_hankel.threads, "worker threads");

    // predict
    auto* sc_predict = app.add_subcommand("predict", "closed-form asymptotic predictions");
    std::string p_regime, p_jumps, p_tcheb, p_w, p_out;
    std::size_t p_n = 0;
    double p_x = 0.0, p_gamma = 0.0, p_x1 = 0.0, p_x2 = 0.0, p_g1 = 0.0, p_g2 = 0.0;
    double p_alpha = 0.0, p_beta = 0.0;
    ConfigOpts o_predict;
    sc_predict->add_option("--regime", p_regime, "edge | merging | separated");
    sc_predict->add_option("--n", p_n, "determinant order");
    sc_predict->add_option("--x", p_x, "jump location (edge)");
    sc_predict->add_option("--gamma", p_gamma, "jump strength (edge)");
    sc_predict->add_option("--x1", p_x1, "first jump location (merging)");
    sc_predict->add_option("--x2", p_x2, "second jump location (merging)");
    sc_predict->add_option("--gamma1", p_g1, "first jump strength (merging)");
    sc_predict->add_option("--gamma2", p_g2, "second jump strength (merging)");
    sc_predict->add_option("--alpha", p_alpha, "weight exponent at +1 (separated)");
    sc_predict->add_option("--beta", p_beta, "weight exponent at -1 (separated)");
    sc_predict->add_option("--jumps", p_jumps, "jump list x1:g1[,x2:g2] (separated)");
    sc_predict->add_option("--tcheb", p_tcheb, "base Chebyshev coefficients (separated)");
    sc_predict->add_option("--w", p_w, "perturbation Chebyshev coefficients (separated)");
    sc_predict->add_option("--out", p_out, "output file (default: stdout)");
    sc_predict->add_option("--config", o_predict.config_path,
                           "*-asymptotics config for batch CSV mode");
    sc_predict->add_option("--seed", o_predict.seed, "override the master seed")
        ->each([&o_predict](const std::string&) { o_predict.seed_set = true; });
    sc_predict->add_option("--out-batch", o_predict.out, "output prefix for batch mode");

    // parametrix-check
    auto* sc_pc = app.add_subcommand("parametrix-check", "model-matrix residual report");
    std::string pc_object, pc_jumps, pc_tcheb, pc_out;
    double pc_beta = 0.0, pc_gamma = 0.5, pc_b_imag = 0.5, pc_obj_alpha = 0.5;
    std::uint64_t pc_seed = 7;
    ConfigOpts o_pc;
    sc_pc->add_option("--object", pc_object, "pinf | bessel | hg | m");
    sc_pc->add_option("--alpha", pc_obj_alpha, "order parameter (bessel); weight exponent (pinf)");
    sc_pc->add_option("--beta", pc_beta, "weight exponent at -1 (pinf)");
    sc_pc->add_option("--jumps", pc_jumps, "jump list x1:g1[,x2:g2] (pinf)");
    sc_pc->add_option("--tcheb", pc_tcheb, "Chebyshev coefficients (pinf)");
    sc_pc->add_option("--gamma", pc_gamma, "jump strength (m)");
    sc_pc->add_option("--b-imag", pc_b_imag, "imaginary part of the parameter (hg)");
    sc_pc->add_option("--seed", pc_seed, "seed for randomized evaluation points");
    sc_pc->add_option("--out", pc_out, "output file (default: stdout)");
    sc_pc->add_option("--config", o_pc.config_path, "parametrix-check config file");

    // validate
    auto* sc_validate = app.add_subcommand("validate", "check a config without running it");
    std::string v_config;
    sc_validate->add_option("--config", v_config, "experiment config file (JSON)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_sample->parsed())
            return cmd_sample(s_n, s_alpha, s_beta, s_method, s_draws, s_seed, s_out, s_format);
        if (sc_rigidity->parsed()) return run_and_report(load_config(o_rigidity, "rigidity"));
        if (sc_clt->parsed()) return run_and_report(load_config(o_clt, "clt"));
        if (sc_gmc->parsed()) return run_and_report(load_config(o_gmc, "gmc-compare"));
        if (sc_hankel->parsed()) {
            if (!o_hankel.config_path.empty())
                return run_and_report(load_config(o_hankel, "hankel-sweep"));
            if (h_n == 0) throw CLI::ValidationError("--n", "determinant order required");
            return cmd_hankel_direct(h_alpha, h_beta, h_jumps, h_tcheb, h_n, h_out);
        }
        if (sc_predict->parsed()) {
            if (!o_predict.config_path.empty()) return cmd_predict_batch(o_predict);
            if (p_regime.empty())
                throw CLI::ValidationError("--regime", "required without --config");
            if (p_n == 0) throw CLI::ValidationError("--n", "determinant order required");
            return cmd_predict_direct(p_regime, p_n, p_x, p_gamma, p_x1, p_x2, p_g1, p_g2, p_alpha,
                                      p_beta, p_jumps, p_tcheb, p_w, p_out);
        }
        if (sc_pc->parsed()) {
            jue::ExperimentConfig cfg;
            if (!o_pc.config_path.empty()) {
                cfg = jue::ExperimentConfig::from_file(o_pc.config_path);
                if (cfg.kind.empty()) cfg.kind = "parametrix-check";
            } else {
                cfg.kind = "parametrix-check";
                cfg.object = pc_object;
                cfg.seed = pc_seed;
                cfg.obj_alpha = pc_obj_alpha;
                cfg.obj_gamma = pc_gamma;
                cfg.obj_b_imag = pc_b_imag;
                cfg.w_alpha = pc_obj_alpha;
                cfg.w_beta = pc_beta;
                cfg.jumps = parse_jumps(pc_jumps);
                cfg.t_coeffs = parse_doubles(pc_tcheb);
            }
            return cmd_parametrix(cfg, pc_out);
        }
        if (sc_validate->parsed()) {
            const jue::ExperimentConfig cfg = jue::ExperimentConfig::from_file(v_config);
            const auto diagnostics = cfg.validate();
            for (const auto& d : diagnostics) std::cout << d << "\n";
            return diagnostics.empty() ? 0 : 2;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
