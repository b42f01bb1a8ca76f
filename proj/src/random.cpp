#include "cbnobs/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cbnobs/minimal.hpp"

namespace cbnobs {

void ErConfig::validate() const {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
    if (trials < 1) throw std::invalid_argument("trials must be positive");
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

// Positions of the successes of a Bernoulli(p) run of length `length`,
// sampled with geometric skips: O(1 + p*length) draws instead of `length`.
std::vector<int> sample_positions(int length, double p, std::mt19937_64& rng) {
    std::vector<int> positions;
    if (length <= 0 || p <= 0.0) return positions;
    if (p >= 1.0) {
        positions.resize(length);
        std::iota(positions.begin(), positions.end(), 0);
        return positions;
    }
    const double denom = std::log1p(-p);
    double pos = -1.0;
    while (true) {
        double u = next_unit(rng);
        pos += 1.0 + std::floor(std::log1p(-u) / denom);
        if (!(pos < length)) break;
        positions.push_back(static_cast<int>(pos));
    }
    return positions;
}

}  // namespace

Cbn generate_random_cbn(const ErConfig& cfg, int trial) {
    cfg.validate();
    if (trial < 0) throw std::invalid_argument("trial must be non-negative");
    std::mt19937_64 rng(splitmix64(cfg.seed) ^
                        splitmix64(0x517CC1B727220A95ull * (static_cast<std::uint64_t>(trial) + 1)));

    Cbn cbn;
    cbn.n = cfg.n;
    cbn.updates.resize(cfg.n);
    for (int j = 0; j < cfg.n; ++j) {
        if (cfg.self_loops_allowed) {
            cbn.updates[j] = sample_positions(cfg.n, cfg.p, rng);
        } else {
            for (int t : sample_positions(cfg.n - 1, cfg.p, rng))
                cbn.updates[j].push_back(t < j ? t : t + 1);
        }
    }
    cbn.validate();
    return cbn;
}

double q_of_p(int n, double p) {
    if (n < 2) throw std::invalid_argument("q(p) needs n >= 2");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
    return (n - 1) * p * std::pow(1.0 - p, n - 1);
}

SensorShareBounds bounds(int n, double p) {
    const double q = q_of_p(n, p);
    return {100.0 * (1.0 - q), 100.0 * (1.0 - q / 2.0)};
}

double curvature_at(int n, double p) {
    if (n < 3) throw std::invalid_argument("curvature needs n >= 3");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
    const double nm1 = n - 1;
    return -nm1 * nm1 * std::pow(1.0 - p, n - 3) * (2.0 - n * p);
}

std::vector<double> default_p_grid(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    static constexpr double kExponents[] = {-2.0, -1.5, -1.0, -0.75, -0.5, -0.25,
                                            0.0,  0.25, 0.5,  0.75,  1.0,  2.0};
    std::vector<double> grid;
    for (double e : kExponents) {
        double p = std::min(std::pow(10.0, e) / n, 1.0);
        if (grid.empty() || p > grid.back()) grid.push_back(p);
    }
    return grid;
}

std::vector<ExperimentRecord> run_experiment(const ErConfig& cfg,
                                             const std::vector<double>& p_grid) {
    cfg.validate();
    std::vector<ExperimentRecord> records;
    records.reserve(p_grid.size());
    for (double p : p_grid) {
        ErConfig point = cfg;
        point.p = p;
        point.validate();

        ExperimentRecord rec;
        rec.n = cfg.n;
        rec.p = p;
        rec.trials = cfg.trials;
        rec.ks.reserve(cfg.trials);
        for (int trial = 0; trial < cfg.trials; ++trial) {
            Cbn net = generate_random_cbn(point, trial);
            rec.ks.push_back(static_cast<int>(solve_minimal(net).chosen.size()));
        }

        double sum = 0.0;
        for (int k : rec.ks) sum += 100.0 * k / cfg.n;
        rec.mean_s = sum / cfg.trials;
        double ss = 0.0;
        for (int k : rec.ks) {
            double d = 100.0 * k / cfg.n - rec.mean_s;
            ss += d * d;
        }
        rec.std_s = cfg.trials > 1 ? std::sqrt(ss / (cfg.trials - 1)) : 0.0;

        SensorShareBounds b = bounds(cfg.n, p);
        rec.lower_bound = b.lower;
        rec.upper_bound = b.upper;
        records.push_back(std::move(rec));
    }
    return records;
}

namespace {

std::string format_double(const char* fmt, double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), fmt, value);
    return buffer;
}

}  // namespace

std::string write_experiment_csv(const std::vector<ExperimentRecord>& records) {
    std::string out = "n,p,trials,mean_s,std_s,lower_bound,upper_bound\n";
    for (const auto& rec : records) {
        out += std::to_string(rec.n) + "," + format_double("%.10g", rec.p) + "," +
               std::to_string(rec.trials) + "," + format_double("%.6f", rec.mean_s) + "," +
               format_double("%.6f", rec.std_s) + "," +
               format_double("%.6f", rec.lower_bound) + "," +
               format_double("%.6f", rec.upper_bound) + "\n";
    }
    return out;
}

std::string write_per_trial_csv(const std::vector<ExperimentRecord>& records) {
    std::string out = "n,p,trial,k\n";
    for (const auto& rec : records)
        for (size_t trial = 0; trial < rec.ks.size(); ++trial)
            out += std::to_string(rec.n) + "," + format_double("%.10g", rec.p) + "," +
                   std::to_string(trial) + "," + std::to_string(rec.ks[trial]) + "\n";
    return out;
}

}  // namespace cbnobs
