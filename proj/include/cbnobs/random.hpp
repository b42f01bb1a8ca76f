#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cbnobs/cbn.hpp"

namespace cbnobs {

// Erdos-Renyi style random conjunctive network: every ordered pair (i, j) —
// self-loops included unless disabled — carries an edge independently with
// probability p. No node is observed; sensors are what the solver is for.
struct ErConfig {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    int trials = 1;
    bool self_loops_allowed = true;

    void validate() const;  // throws std::invalid_argument
};

struct ExperimentRecord {
    int n = 0;
    double p = 0.0;
    int trials = 0;
    double mean_s = 0.0;  // mean of 100*k/n over trials
    double std_s = 0.0;   // sample standard deviation (n-1), 0 for a single trial
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    std::vector<int> ks;  // per-trial minimal sensor counts
};

// Deterministic in (cfg.seed, trial): the same pair always yields the same
// network. Rows are sampled with geometric skips, so generation costs
// O(n + edges) rather than O(n^2).
Cbn generate_random_cbn(const ErConfig& cfg, int trial);

// Probability that a fixed node has in-degree exactly 1 and no self-loop:
// q(p) = (n-1) p (1-p)^(n-1). Maximized at p = 1/n with value (1-1/n)^n.
double q_of_p(int n, double p);

struct SensorShareBounds {
    double lower = 0.0;  // 100 (1 - q(p))
    double upper = 0.0;  // 100 (1 - q(p)/2)
};

// Bounds on the expected minimal sensor share E(k)*100/n.
SensorShareBounds bounds(int n, double p);

// d^2 q / d p^2 = -(n-1)^2 (1-p)^(n-3) (2 - n p); large and negative at
// p = 1/n, which is why the dip in sensor share is so sharp.
double curvature_at(int n, double p);

// Runs cfg.trials networks per grid point (trial indices 0..trials-1) and
// solves each one. Deterministic given (seed, n, p_grid, trials, self_loops).
std::vector<ExperimentRecord> run_experiment(const ErConfig& cfg,
                                             const std::vector<double>& p_grid);

// Log-spaced around 1/n, denser near the dip: exponents
// {-2, -1.5, -1, -0.75, -0.5, -0.25, 0, 0.25, 0.5, 0.75, 1, 2} applied as
// 10^e / n, clipped to (0, 1].
std::vector<double> default_p_grid(int n);

// Header: n,p,trials,mean_s,std_s,lower_bound,upper_bound
std::string write_experiment_csv(const std::vector<ExperimentRecord>& records);

// Long form, one row per trial: n,p,trial,k
std::string write_per_trial_csv(const std::vector<ExperimentRecord>& records);

}  // namespace cbnobs
