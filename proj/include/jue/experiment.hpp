#pragma once

#include "jue/sampler.hpp"
#include "jue/weight.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jue {

/// Parsed experiment description. Fields are stored raw so that validate()
/// can report violations instead of throwing during parsing; the typed
/// EnsembleSpec/WeightSpec are built on demand.
struct ExperimentConfig {
    std::string kind;
    std::uint64_t seed = 0;
    std::string out;

    std::vector<std::size_t> n_list;
    std::size_t trials = 0;

    // ensemble payload
    double ens_alpha = 0.0, ens_beta = 0.0;
    std::string method = "tridiagonal";
    std::vector<double> ens_t;

    // weight payload
    double w_alpha = 0.0, w_beta = 0.0;
    std::vector<std::pair<double, double>> jumps; // (location, gamma)
    std::vector<double> t_coeffs;

    // per-kind extras
    double epsilon = 0.5;                   // rigidity event half-width
    std::vector<double> gammas, epsilons, xs;
    std::vector<double> f_coeffs;           // clt statistic
    std::vector<double> w_coeffs;           // separated-regime perturbation
    double x1 = 0.0, x2 = 0.0, gamma1 = 0.0, gamma2 = 0.0;
    std::string object;                     // parametrix-check: pinf|bessel|hg|m
    double obj_alpha = 0.0, obj_gamma = 0.0, obj_b_imag = 0.5;

    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig from_file(const std::string& path);

    /// Canonical sorted-key JSON of all effective fields.
    std::string canonical_json() const;
    /// FNV-1a hash of canonical_json(), hex.
    std::string hash() const;

    /// Schema/invariant diagnostics; empty means valid. Never throws.
    std::vector<std::string> validate() const;

    EnsembleSpec ensemble_spec(std::size_t N) const;
    WeightSpec weight_spec() const;
};

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::map<std::string, std::string> metadata;

    std::string to_csv() const;
    std::string to_json() const;
};

/// Worker-thread count for trial loops; default from the JUE_THREADS
/// environment variable, else 1. Results are independent of the setting.
void set_thread_count(std::size_t n);
std::size_t thread_count();

/// Executes the named experiment deterministically and, when config.out is
/// nonempty, writes <out>.csv and <out>.json atomically.
ResultTable run(const ExperimentConfig& config);

} // namespace jue
