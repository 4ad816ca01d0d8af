#include "taskdiff/difficulty.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace taskdiff {

std::vector<double> default_epsilon_grid() {
    return {1.0, 0.5, 0.4, 0.3, 0.25, 0.2, 0.15, 0.1, 0.05, 0.02, 0.01};
}

void DifficultyConfig::validate() const {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon outside [0,1]");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta outside (0,1)");
    if (!(r_star > 0.0 && r_star <= 1.0)) throw std::invalid_argument("r_star outside (0,1]");
    if (epsilon_grid.empty()) throw std::invalid_argument("empty epsilon grid");
    for (size_t i = 0; i + 1 < epsilon_grid.size(); ++i)
        if (!(epsilon_grid[i] > epsilon_grid[i + 1]))
            throw std::invalid_argument("epsilon grid must be strictly descending");
    for (double e : epsilon_grid)
        if (!(e >= 0.0 && e <= 1.0)) throw std::invalid_argument("grid tolerance outside [0,1]");
    if (k_max < 1) throw std::invalid_argument("k_max < 1");
    if (n_confirm < 0) throw std::invalid_argument("n_confirm < 0");
    if (n_seeds < 1) throw std::invalid_argument("n_seeds < 1");
}

EffortBreakdown effort_components(double length_bits, double steps, double bids) {
    EffortBreakdown b;
    b.length_bits = length_bits;
    b.log_steps = std::log2(std::max(1.0, steps));
    if (bids == kInfinity) {
        b.log_bids = kInfinity;
        b.total = kInfinity;
    } else {
        b.log_bids = std::log2(std::max(1.0, bids));
        b.total = b.length_bits + b.log_steps + b.log_bids;
    }
    return b;
}

double els(const Program& pi, const TaskDef& mu, const TrialProtocol& proto, int64_t n_seeds,
           uint64_t eval_seed) {
    ResponseEstimate est = estimate_response(pi, mu, proto, n_seeds, eval_seed);
    return static_cast<double>(pi.length_bits()) + std::log2(std::max(1.0, est.mean_steps));
}

double ebids(double mean, double variance, double epsilon, double delta, double r_star) {
    double margin = mean + epsilon - r_star;
    if (!(margin > 0.0)) return kInfinity;
    double z = z_quantile(delta);
    return std::ceil(z * z * variance / (margin * margin));
}

namespace {

EffortBreakdown effort_of(const Program& pi, const ResponseEstimate& est,
                          const DifficultyConfig& cfg) {
    double bids =
        ebids(est.smoothed_mean(), est.smoothed_variance(), cfg.epsilon, cfg.delta, cfg.r_star);
    return effort_components(static_cast<double>(pi.length_bits()), est.mean_steps, bids);
}

double els_of(const Program& pi, const ResponseEstimate& est) {
    return static_cast<double>(pi.length_bits()) + std::log2(std::max(1.0, est.mean_steps));
}

} // namespace

double everification(const Program& pi, const TaskDef& mu, const DifficultyConfig& cfg,
                     const TrialProtocol& proto) {
    ResponseEstimate est = estimate_response(pi, mu, proto, cfg.n_seeds, cfg.eval_seed);
    double bids =
        ebids(est.smoothed_mean(), est.smoothed_variance(), cfg.epsilon, cfg.delta, cfg.r_star);
    if (bids == kInfinity) return kInfinity;
    return std::max(1.0, est.mean_steps) * std::max(1.0, bids);
}

EffortBreakdown eeffort(const Program& pi, const TaskDef& mu, const DifficultyConfig& cfg,
                        const TrialProtocol& proto) {
    ResponseEstimate est = estimate_response(pi, mu, proto, cfg.n_seeds, cfg.eval_seed);
    return effort_of(pi, est, cfg);
}

std::vector<ProgramEval> sweep_programs(const TaskDef& mu, const TrialProtocol& proto,
                                        int64_t k_max, int64_t n_seeds, uint64_t eval_seed) {
    std::vector<ProgramEval> out;
    enumerate_programs(k_max, [&](const Program& p) {
        out.push_back({p, estimate_response(p, mu, proto, n_seeds, eval_seed)});
        return true;
    });
    return out;
}

std::optional<HardnessResult> hardness_from_sweep(const std::vector<ProgramEval>& sweep,
                                                  const DifficultyConfig& cfg) {
    std::optional<HardnessResult> best;
    for (const ProgramEval& pe : sweep) {
        if (!estimate_acceptable(pe.est, cfg.epsilon)) continue;
        EffortBreakdown b = effort_of(pe.program, pe.est, cfg);
        if (!best || b.total < best->bits) {
            best = HardnessResult{b.total, pe.program, b};
        }
    }
    return best;
}

std::optional<HardnessResult> hardness(const TaskDef& mu, const DifficultyConfig& cfg,
                                       const TrialProtocol& proto) {
    cfg.validate();
    return hardness_from_sweep(sweep_programs(mu, proto, cfg.k_max, cfg.n_seeds, cfg.eval_seed),
                               cfg);
}

std::vector<OptEntry> opt_policies_from_sweep(const std::vector<ProgramEval>& sweep,
                                              const std::vector<double>& epsilon_grid) {
    std::vector<OptEntry> entries;
    for (double eps0 : epsilon_grid) {
        OptEntry entry;
        entry.epsilon0 = eps0;
        for (const ProgramEval& pe : sweep) {
            if (!estimate_acceptable(pe.est, eps0)) continue;
            double e = els_of(pe.program, pe.est);
            if (!entry.witness || e < entry.els) {
                entry.witness = pe.program;
                entry.els = e;
            }
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<OptEntry> opt_policies(const TaskDef& mu, const TrialProtocol& proto,
                                   const std::vector<double>& epsilon_grid, int64_t k_max,
                                   int64_t n_seeds, uint64_t eval_seed) {
    if (epsilon_grid.empty()) throw std::invalid_argument("empty epsilon grid");
    for (size_t i = 0; i + 1 < epsilon_grid.size(); ++i)
        if (!(epsilon_grid[i] > epsilon_grid[i + 1]))
            throw std::invalid_argument("epsilon grid must be strictly descending");
    return opt_policies_from_sweep(sweep_programs(mu, proto, k_max, n_seeds, eval_seed),
                                   epsilon_grid);
}

std::optional<double> instance_difficulty_from_entries(uint64_t sigma, const TaskDef& mu,
                                                       const std::vector<OptEntry>& entries,
                                                       const DifficultyConfig& cfg,
                                                       const TrialProtocol& proto) {
    TaskInstance instance(mu, sigma);
    for (const OptEntry& entry : entries) {
        if (!entry.witness) continue;
        ResponseEstimate est =
            estimate_on_instance(*entry.witness, instance, proto, cfg.eval_seed);
        if (estimate_acceptable(est, cfg.epsilon)) return entry.els;
    }
    return std::nullopt;
}

std::optional<double> instance_difficulty(uint64_t sigma, const TaskDef& mu,
                                          const DifficultyConfig& cfg,
                                          const TrialProtocol& proto) {
    cfg.validate();
    auto entries = opt_policies(mu, proto, cfg.epsilon_grid, cfg.k_max, cfg.n_seeds, cfg.eval_seed);
    return instance_difficulty_from_entries(sigma, mu, entries, cfg, proto);
}

std::optional<double> distance(const TaskDef& mu1, const TaskDef& mu2,
                               const DifficultyConfig& cfg, const TrialProtocol& proto) {
    auto h_mix = hardness(compose(mu1, mu2, 0.5), cfg, proto);
    auto h1 = hardness(mu1, cfg, proto);
    auto h2 = hardness(mu2, cfg, proto);
    if (!h_mix || !h1 || !h2) return std::nullopt;
    return 2.0 * h_mix->bits - h1->bits - h2->bits;
}

std::optional<bool> covers(const TaskDef& mu1, const TaskDef& mu2, const DifficultyConfig& cfg,
                           const TrialProtocol& proto, double slack_bits) {
    if (slack_bits < 0.0) throw std::invalid_argument("slack must be nonnegative");
    auto h_mix = hardness(compose(mu1, mu2, 0.5), cfg, proto);
    auto h1 = hardness(mu1, cfg, proto);
    if (!h_mix || !h1) return std::nullopt;
    return h_mix->bits <= h1->bits + slack_bits;
}

std::vector<CurvePoint> response_curve(const Program& pi,
                                       const std::vector<std::pair<TaskInstance, double>>& instances,
                                       double bin_width, const DifficultyConfig& cfg,
                                       const TrialProtocol& proto) {
    if (!(bin_width > 0.0)) throw std::invalid_argument("bin width must be positive");
    std::map<int64_t, std::pair<double, int64_t>> bins; // key -> (hits, count)
    for (const auto& [instance, h] : instances) {
        if (!std::isfinite(h)) throw std::invalid_argument("instance difficulty must be finite");
        ResponseEstimate est = estimate_on_instance(pi, instance, proto, cfg.eval_seed);
        int64_t key = static_cast<int64_t>(std::floor(h / bin_width));
        auto& [hits, count] = bins[key];
        if (estimate_acceptable(est, cfg.epsilon)) hits += 1.0;
        count += 1;
    }
    std::vector<CurvePoint> out;
    for (const auto& [key, agg] : bins) {
        CurvePoint pt;
        pt.bin_lo = static_cast<double>(key) * bin_width;
        pt.rate = agg.first / static_cast<double>(agg.second);
        pt.count = agg.second;
        out.push_back(pt);
    }
    return out;
}

} // namespace taskdiff
