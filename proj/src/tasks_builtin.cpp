#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "taskdiff/task.hpp"

namespace taskdiff {

int64_t param_int(const TaskParams& p, const std::string& key, int64_t dflt) {
    auto it = p.find(key);
    if (it == p.end()) return dflt;
    if (const int64_t* v = std::get_if<int64_t>(&it->second)) return *v;
    if (const double* v = std::get_if<double>(&it->second)) {
        if (*v == std::floor(*v)) return static_cast<int64_t>(*v);
    }
    throw BadConfig(key + " must be an integer");
}

double param_double(const TaskParams& p, const std::string& key, double dflt) {
    auto it = p.find(key);
    if (it == p.end()) return dflt;
    if (const double* v = std::get_if<double>(&it->second)) return *v;
    if (const int64_t* v = std::get_if<int64_t>(&it->second)) return static_cast<double>(*v);
    throw BadConfig(key + " must be numeric");
}

std::string param_string(const TaskParams& p, const std::string& key, const std::string& dflt) {
    auto it = p.find(key);
    if (it == p.end()) return dflt;
    if (const std::string* v = std::get_if<std::string>(&it->second)) return *v;
    throw BadConfig(key + " must be a string");
}

namespace {

// Task content streams are keyed by (sigma, trial) and salted per task kind,
// so distinct task types never march in lock-step on shared seeds. Mixture
// components keep their own salt, which preserves the alpha = 1 identity.
class SeededBehavior : public TaskBehavior {
public:
    explicit SeededBehavior(const std::string& kind)
        : salt_(fnv1a64(kind.data(), kind.size())) {}

protected:
    RngStream episode_stream(uint64_t sigma, int64_t trial) const {
        return RngStream(
            derive(derive(sigma, StreamTag::task, static_cast<uint64_t>(trial)), salt_));
    }

private:
    uint64_t salt_;
};

int64_t require_range(const TaskParams& p, const std::string& key, int64_t dflt, int64_t lo,
                      int64_t hi) {
    int64_t v = param_int(p, key, dflt);
    if (v < lo || v > hi) throw BadConfig(key + " out of range");
    return v;
}

// --- coin -------------------------------------------------------------------

class CoinEpisode final : public Episode {
public:
    CoinEpisode(double p, RngStream rng) { response_ = rng.next_double() < p ? 1.0 : 0.0; }
    void on_tick(int64_t, TapeFrame& frame, const ActionLog&) override { frame.obs.assign(1, 0); }
    double response(const ActionLog&, int64_t) override { return response_; }

private:
    double response_;
};

class CoinBehavior final : public SeededBehavior {
public:
    explicit CoinBehavior(double p) : SeededBehavior("coin"), p_(p) {}
    std::unique_ptr<Episode> make_episode(uint64_t sigma, int64_t trial) const override {
        return std::make_unique<CoinEpisode>(p_, episode_stream(sigma, trial));
    }

private:
    double p_;
};

// --- numerousness -----------------------------------------------------------

constexpr int kPanel = 64;       // pixels per side
constexpr int kCellPx = 16;      // pixels per cell side
constexpr int kPanelArea = kPanel * kPanel;

void render_panel(RngStream& rng, int count, int32_t* out) {
    std::fill(out, out + kPanelArea, 0);
    // distinct cells for the dots, partial Fisher-Yates
    int cells[16];
    std::iota(cells, cells + 16, 0);
    for (int i = 0; i < count; ++i) {
        int j = i + static_cast<int>(rng.next_below(static_cast<uint64_t>(16 - i)));
        std::swap(cells[i], cells[j]);
    }
    for (int i = 0; i < count; ++i) {
        int row = cells[i] / 4, col = cells[i] % 4;
        double d = rng.next_uniform(0.2, 1.0);
        double r = d / 2.0;
        double cx = col + rng.next_uniform(r, 1.0 - r); // cell units, circle kept inside
        double cy = row + rng.next_uniform(r, 1.0 - r);
        double rpx = r * kCellPx, cxpx = cx * kCellPx, cypx = cy * kCellPx;
        int x0 = std::max(0, static_cast<int>(cxpx - rpx - 1.0));
        int x1 = std::min(kPanel, static_cast<int>(cxpx + rpx + 2.0));
        int y0 = std::max(0, static_cast<int>(cypx - rpx - 1.0));
        int y1 = std::min(kPanel, static_cast<int>(cypx + rpx + 2.0));
        for (int y = y0; y < y1; ++y) {
            double dy = y + 0.5 - cypx;
            for (int x = x0; x < x1; ++x) {
                double dx = x + 0.5 - cxpx;
                if (dx * dx + dy * dy <= rpx * rpx) out[y * kPanel + x] = 1;
            }
        }
    }
}

class NumerousnessEpisode final : public Episode {
public:
    explicit NumerousnessEpisode(RngStream rng) {
        do {
            count_left_ = static_cast<int>(rng.next_range(1, 16));
            count_right_ = static_cast<int>(rng.next_range(1, 16));
        } while (count_left_ == count_right_); // equal pairs are discarded
        obs_.resize(2 * kPanelArea);
        render_panel(rng, count_left_, obs_.data());
        render_panel(rng, count_right_, obs_.data() + kPanelArea);
    }

    void on_tick(int64_t tick, TapeFrame& frame, const ActionLog&) override {
        if (tick == 0) frame.obs = obs_;
    }

    double response(const ActionLog& actions, int64_t) override {
        if (actions.empty()) return 0.0; // never selected a panel
        bool chose_left = actions.last() == 0;
        bool left_lesser = count_left_ < count_right_;
        return chose_left == left_lesser ? 1.0 : 0.0;
    }

    int count_left() const { return count_left_; }
    int count_right() const { return count_right_; }

private:
    int count_left_, count_right_;
    std::vector<int32_t> obs_;
};

class NumerousnessBehavior final : public SeededBehavior {
public:
    NumerousnessBehavior() : SeededBehavior("numerousness") {}
    std::unique_ptr<Episode> make_episode(uint64_t sigma, int64_t trial) const override {
        return std::make_unique<NumerousnessEpisode>(episode_stream(sigma, trial));
    }
};

// --- imitation ----------------------------------------------------------------

// Observation symbol redrawn every `hold` ticks (hold = 0: constant for the
// whole episode). Match rule: the action in effect at tick t is compared to
// the observation shown during tick t-1, averaged over t = 1 .. tau-1. A
// copy loop that completes within one tick scores exactly 1.
class ImitationEpisode final : public Episode {
public:
    ImitationEpisode(int alphabet, int64_t hold, RngStream rng)
        : alphabet_(alphabet), hold_(hold), rng_(rng) {}

    void on_tick(int64_t tick, TapeFrame& frame, const ActionLog&) override {
        frame.obs.assign(1, symbol_at(tick));
    }

    double response(const ActionLog& actions, int64_t tau) override {
        if (tau < 2) return 0.0;
        int64_t matches = 0;
        for (int64_t t = 1; t < tau; ++t)
            if (actions.in_effect_at(t, 0) == symbol_at(t - 1)) ++matches;
        return static_cast<double>(matches) / static_cast<double>(tau - 1);
    }

private:
    int32_t symbol_at(int64_t tick) {
        size_t seg = hold_ > 0 ? static_cast<size_t>(tick / hold_) : 0;
        while (drawn_.size() <= seg)
            drawn_.push_back(static_cast<int32_t>(rng_.next_below(static_cast<uint64_t>(alphabet_))));
        return drawn_[seg];
    }

    int alphabet_;
    int64_t hold_;
    RngStream rng_;
    std::vector<int32_t> drawn_;
};

class ImitationBehavior final : public SeededBehavior {
public:
    ImitationBehavior(int alphabet, int64_t hold)
        : SeededBehavior("imitation"), alphabet_(alphabet), hold_(hold) {}
    std::unique_ptr<Episode> make_episode(uint64_t sigma, int64_t trial) const override {
        return std::make_unique<ImitationEpisode>(alphabet_, hold_, episode_stream(sigma, trial));
    }

private:
    int alphabet_;
    int64_t hold_;
};

// --- guess_sequence -----------------------------------------------------------

// Hidden symbol sequence; each action event is a guess at the current
// position. A match advances the position and pays reward 1 on the next
// tick. Response: fraction of the sequence completed.
class GuessEpisode final : public Episode {
public:
    GuessEpisode(int alphabet, int length, RngStream rng) : length_(length) {
        for (int i = 0; i < length; ++i)
            target_.push_back(static_cast<int32_t>(rng.next_below(static_cast<uint64_t>(alphabet))));
    }

    void on_tick(int64_t tick, TapeFrame& frame, const ActionLog& actions) override {
        // reward is a one-tick pulse for the latest guess processed
        int32_t reward = 0;
        const auto& events = actions.events();
        while (cursor_ < events.size() && events[cursor_].tick < tick) {
            reward = 0;
            if (progress_ < length_ && events[cursor_].value == target_[static_cast<size_t>(progress_)]) {
                ++progress_;
                reward = 1;
            }
            ++cursor_;
        }
        frame.obs.assign(1, progress_);
        frame.reward = reward;
    }

    double response(const ActionLog&, int64_t) override {
        return static_cast<double>(progress_) / static_cast<double>(length_);
    }

private:
    std::vector<int32_t> target_;
    int length_;
    int32_t progress_ = 0;
    size_t cursor_ = 0;
};

class GuessBehavior final : public SeededBehavior {
public:
    GuessBehavior(int alphabet, int length)
        : SeededBehavior("guess_sequence"), alphabet_(alphabet), length_(length) {}
    std::unique_ptr<Episode> make_episode(uint64_t sigma, int64_t trial) const override {
        return std::make_unique<GuessEpisode>(alphabet_, length_, episode_stream(sigma, trial));
    }

private:
    int alphabet_, length_;
};

// --- constant_string ----------------------------------------------------------

// The agent must emit the target during the answer window; the correct
// string is shown afterwards (so a memory-carrying agent can learn it
// across trials). Response: normalized longest common prefix.
class ConstantStringEpisode final : public Episode {
public:
    ConstantStringEpisode(std::vector<int32_t> target, int64_t answer_ticks)
        : target_(std::move(target)), answer_ticks_(answer_ticks) {}

    void on_tick(int64_t tick, TapeFrame& frame, const ActionLog&) override {
        if (tick < answer_ticks_) {
            frame.obs.assign(1, 1); // answer phase
        } else {
            frame.obs.assign(1, 2); // reveal phase
            frame.obs.insert(frame.obs.end(), target_.begin(), target_.end());
        }
    }

    double response(const ActionLog& actions, int64_t) override {
        size_t lcp = 0;
        for (const ActionEvent& e : actions.events()) {
            if (e.tick >= answer_ticks_) break;
            if (lcp < target_.size() && e.value == target_[lcp]) ++lcp;
            else break;
        }
        return static_cast<double>(lcp) / static_cast<double>(target_.size());
    }

private:
    std::vector<int32_t> target_;
    int64_t answer_ticks_;
};

class ConstantStringBehavior final : public SeededBehavior {
public:
    ConstantStringBehavior(std::vector<int32_t> target, int64_t answer_ticks)
        : SeededBehavior("constant_string"), target_(std::move(target)),
          answer_ticks_(answer_ticks) {}
    std::unique_ptr<Episode> make_episode(uint64_t, int64_t) const override {
        // same text for all instances and trials
        return std::make_unique<ConstantStringEpisode>(target_, answer_ticks_);
    }

private:
    std::vector<int32_t> target_;
    int64_t answer_ticks_;
};

// --- addition -----------------------------------------------------------------

class AdditionEpisode final : public Episode {
public:
    AdditionEpisode(int64_t lo, int64_t hi, RngStream rng) {
        a_ = rng.next_range(lo, hi);
        b_ = rng.next_range(lo, hi);
    }

    void on_tick(int64_t tick, TapeFrame& frame, const ActionLog&) override {
        if (tick == 0) {
            frame.obs = {static_cast<int32_t>(a_), static_cast<int32_t>(b_)};
        }
    }

    double response(const ActionLog& actions, int64_t) override {
        std::string truth = std::to_string(a_ + b_);
        std::string answer = actions.empty() ? std::string() : std::to_string(actions.last());
        size_t lcp = 0;
        while (lcp < truth.size() && lcp < answer.size() && truth[lcp] == answer[lcp]) ++lcp;
        return static_cast<double>(lcp) / static_cast<double>(truth.size());
    }

private:
    int64_t a_, b_;
};

class AdditionBehavior final : public SeededBehavior {
public:
    AdditionBehavior(int64_t lo, int64_t hi)
        : SeededBehavior("addition"), lo_(lo), hi_(hi) {}
    std::unique_ptr<Episode> make_episode(uint64_t sigma, int64_t trial) const override {
        return std::make_unique<AdditionEpisode>(lo_, hi_, episode_stream(sigma, trial));
    }

private:
    int64_t lo_, hi_;
};

// --- response_time --------------------------------------------------------------

// A left/right signal appears at a random tick and stays visible for
// `window` ticks. Credit for the first action at or after the signal:
// correct side within the window scores (window - latency) / window.
class ResponseTimeEpisode final : public Episode {
public:
    ResponseTimeEpisode(int64_t delay_min, int64_t delay_max, int64_t window, RngStream rng)
        : window_(window) {
        signal_tick_ = rng.next_range(delay_min, delay_max);
        side_ = static_cast<int32_t>(rng.next_below(2));
    }

    void on_tick(int64_t tick, TapeFrame& frame, const ActionLog&) override {
        bool visible = tick >= signal_tick_ && tick < signal_tick_ + window_;
        frame.obs.assign(1, visible ? 1 + side_ : 0);
    }

    double response(const ActionLog& actions, int64_t) override {
        for (const ActionEvent& e : actions.events()) {
            if (e.tick < signal_tick_) continue; // early presses are ignored
            int64_t latency = e.tick - signal_tick_;
            if (latency >= window_) return 0.0;
            if (e.value != side_) return 0.0;
            return static_cast<double>(window_ - latency) / static_cast<double>(window_);
        }
        return 0.0;
    }

private:
    int64_t signal_tick_, window_;
    int32_t side_;
};

class ResponseTimeBehavior final : public SeededBehavior {
public:
    ResponseTimeBehavior(int64_t dmin, int64_t dmax, int64_t window)
        : SeededBehavior("response_time"), dmin_(dmin), dmax_(dmax), window_(window) {}
    std::unique_ptr<Episode> make_episode(uint64_t sigma, int64_t trial) const override {
        return std::make_unique<ResponseTimeEpisode>(dmin_, dmax_, window_,
                                                     episode_stream(sigma, trial));
    }

private:
    int64_t dmin_, dmax_, window_;
};

// --- maze ---------------------------------------------------------------------

class MazeEpisode final : public Episode {
public:
    MazeEpisode(int w, int h, double wall_frac, RngStream rng) : w_(w), h_(h) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            grid_.assign(static_cast<size_t>(w * h), 0);
            for (int i = 0; i < w * h; ++i)
                grid_[static_cast<size_t>(i)] = rng.next_double() < wall_frac ? 1 : 0;
            grid_[0] = 0;
            grid_[static_cast<size_t>(w * h - 1)] = 0;
            if (compute_dists()) break;
            if (attempt == 63) {
                std::fill(grid_.begin(), grid_.end(), 0); // give up on walls
                compute_dists();
            }
        }
        start_dist_ = dist_[0];
        best_dist_ = start_dist_;
    }

    void on_tick(int64_t tick, TapeFrame& frame, const ActionLog& actions) override {
        const auto& events = actions.events();
        while (cursor_ < events.size() && events[cursor_].tick < tick) {
            apply_move(events[cursor_].value);
            ++cursor_;
        }
        frame.obs.clear();
        frame.obs.push_back(x_);
        frame.obs.push_back(y_);
        frame.obs.push_back(w_ - 1);
        frame.obs.push_back(h_ - 1);
        frame.obs.push_back(w_);
        frame.obs.push_back(h_);
        frame.obs.insert(frame.obs.end(), grid_.begin(), grid_.end());
    }

    double response(const ActionLog&, int64_t) override {
        if (reached_) return 1.0;
        // partial credit for covering at least half the optimal path
        if (static_cast<double>(best_dist_) <= static_cast<double>(start_dist_) / 2.0) return 0.25;
        return 0.0;
    }

private:
    bool compute_dists() {
        dist_.assign(grid_.size(), -1);
        std::deque<int> queue;
        int exit_idx = w_ * h_ - 1;
        dist_[static_cast<size_t>(exit_idx)] = 0;
        queue.push_back(exit_idx);
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            int cx = cur % w_, cy = cur / w_;
            const int dx[4] = {1, -1, 0, 0};
            const int dy[4] = {0, 0, 1, -1};
            for (int d = 0; d < 4; ++d) {
                int nx = cx + dx[d], ny = cy + dy[d];
                if (nx < 0 || ny < 0 || nx >= w_ || ny >= h_) continue;
                int ni = ny * w_ + nx;
                if (grid_[static_cast<size_t>(ni)] || dist_[static_cast<size_t>(ni)] >= 0) continue;
                dist_[static_cast<size_t>(ni)] = dist_[static_cast<size_t>(cur)] + 1;
                queue.push_back(ni);
            }
        }
        return dist_[0] >= 0;
    }

    void apply_move(int32_t dir) {
        if (reached_) return;
        int d = static_cast<int>(((dir % 4) + 4) % 4);
        const int dx[4] = {1, -1, 0, 0};
        const int dy[4] = {0, 0, 1, -1};
        int nx = x_ + dx[d], ny = y_ + dy[d];
        if (nx < 0 || ny < 0 || nx >= w_ || ny >= h_) return;
        int ni = ny * w_ + nx;
        if (grid_[static_cast<size_t>(ni)]) return;
        x_ = nx;
        y_ = ny;
        int dst = dist_[static_cast<size_t>(ni)];
        if (dst >= 0 && dst < best_dist_) best_dist_ = dst;
        if (x_ == w_ - 1 && y_ == h_ - 1) reached_ = true;
    }

    int w_, h_;
    std::vector<int32_t> grid_;
    std::vector<int> dist_;
    int32_t x_ = 0, y_ = 0;
    int start_dist_ = 0, best_dist_ = 0;
    bool reached_ = false;
    size_t cursor_ = 0;
};

class MazeBehavior final : public SeededBehavior {
public:
    MazeBehavior(int w, int h, double wall_frac)
        : SeededBehavior("maze"), w_(w), h_(h), wall_frac_(wall_frac) {}
    std::unique_ptr<Episode> make_episode(uint64_t sigma, int64_t trial) const override {
        return std::make_unique<MazeEpisode>(w_, h_, wall_frac_, episode_stream(sigma, trial));
    }

private:
    int w_, h_;
    double wall_frac_;
};

// --- mixture ------------------------------------------------------------------

class MixtureBehavior final : public TaskBehavior {
public:
    MixtureBehavior(TaskDef left, TaskDef right, double alpha, const std::string& name)
        : left_(std::move(left)), right_(std::move(right)), alpha_(alpha),
          salt_(fnv1a64(name.data(), name.size())) {}

    std::unique_ptr<Episode> make_episode(uint64_t sigma, int64_t trial) const override {
        // salted per mixture node so nested compositions draw independent
        // coins; the chosen component is seeded exactly as it is standalone
        RngStream coin(
            derive(derive(sigma, StreamTag::mixture, static_cast<uint64_t>(trial)), salt_));
        const TaskDef& pick = coin.next_double() < alpha_ ? left_ : right_;
        return pick.behavior->make_episode(sigma, trial);
    }

private:
    TaskDef left_, right_;
    double alpha_;
    uint64_t salt_;
};

} // namespace

TaskDef make_coin(double p, const TaskParams& cfg) {
    if (!(p >= 0.0 && p <= 1.0)) throw BadConfig("coin p out of range");
    TaskDef def;
    def.name = "coin";
    def.default_tau = 1;
    def.enumerable_seeds = param_int(cfg, "enumerable_seeds", 0);
    def.params = cfg;
    def.params["p"] = p;
    def.obs_desc = "constant 0";
    def.act_desc = "ignored";
    def.behavior = std::make_shared<CoinBehavior>(p);
    return def;
}

TaskDef make_numerousness(const TaskParams& cfg) {
    TaskDef def;
    def.name = "numerousness";
    def.default_tau = 4;
    def.enumerable_seeds = param_int(cfg, "enumerable_seeds", 0);
    def.params = cfg;
    def.obs_desc = "two 64x64 binary rasters, left then right, row-major";
    def.act_desc = "0 chooses left, any other value chooses right";
    def.behavior = std::make_shared<NumerousnessBehavior>();
    return def;
}

TaskDef make_builtin(const std::string& name, const TaskParams& cfg) {
    TaskDef def;
    def.name = name;
    def.params = cfg;
    def.enumerable_seeds = param_int(cfg, "enumerable_seeds", 0);
    if (name == "imitation") {
        int64_t alphabet = require_range(cfg, "alphabet", 2, 2, 16);
        int64_t hold = require_range(cfg, "hold", 0, 0, 1 << 20);
        def.default_tau = 16;
        def.obs_desc = "one symbol in [0, alphabet)";
        def.act_desc = "symbol to imitate";
        def.behavior = std::make_shared<ImitationBehavior>(static_cast<int>(alphabet), hold);
    } else if (name == "guess_sequence") {
        int64_t alphabet = require_range(cfg, "alphabet", 2, 2, 16);
        int64_t length = require_range(cfg, "length", 4, 1, 64);
        def.default_tau = 8 * length;
        def.reward_channel = true;
        def.obs_desc = "current progress index";
        def.act_desc = "guessed symbol";
        def.behavior =
            std::make_shared<GuessBehavior>(static_cast<int>(alphabet), static_cast<int>(length));
    } else if (name == "constant_string") {
        std::string target = param_string(cfg, "target", "0110");
        if (target.empty() || target.size() > 64) throw BadConfig("target length out of range");
        std::vector<int32_t> symbols;
        for (char c : target) {
            if (c < '0' || c > '9') throw BadConfig("target must be digits");
            symbols.push_back(c - '0');
        }
        int64_t answer_ticks = require_range(cfg, "answer_ticks", 8, 1, 1 << 20);
        def.default_tau = answer_ticks * 2;
        def.obs_desc = "phase flag; target symbols during reveal";
        def.act_desc = "output symbols, counted before the reveal";
        def.behavior = std::make_shared<ConstantStringBehavior>(std::move(symbols), answer_ticks);
    } else if (name == "addition") {
        int64_t lo = require_range(cfg, "min", 0, 0, 1000000);
        int64_t hi = require_range(cfg, "max", 99, lo, 1000000);
        def.default_tau = 8;
        def.obs_desc = "the two operands";
        def.act_desc = "last action value is the answer";
        def.behavior = std::make_shared<AdditionBehavior>(lo, hi);
    } else if (name == "response_time") {
        int64_t dmin = require_range(cfg, "delay_min", 2, 0, 1 << 20);
        int64_t dmax = require_range(cfg, "delay_max", 24, dmin, 1 << 20);
        int64_t window = require_range(cfg, "window", 8, 1, 1 << 20);
        def.default_tau = dmax + window + 2;
        def.obs_desc = "0 until the signal; then 1+side while visible";
        def.act_desc = "0 = left, 1 = right";
        def.behavior = std::make_shared<ResponseTimeBehavior>(dmin, dmax, window);
    } else if (name == "maze") {
        int64_t w = require_range(cfg, "width", 6, 2, 16);
        int64_t h = require_range(cfg, "height", 6, 2, 16);
        double wall_frac = param_double(cfg, "wall_frac", 0.25);
        if (!(wall_frac >= 0.0 && wall_frac < 1.0)) throw BadConfig("wall_frac out of range");
        def.default_tau = 4 * w * h;
        def.obs_desc = "agent x,y; exit x,y; width,height; grid row-major (1 = wall)";
        def.act_desc = "move: 0 +x, 1 -x, 2 +y, 3 -y";
        def.behavior = std::make_shared<MazeBehavior>(static_cast<int>(w), static_cast<int>(h),
                                                      wall_frac);
    } else {
        throw UnknownTask(name);
    }
    return def;
}

TaskDef compose(const TaskDef& left, const TaskDef& right, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw BadConfig("alpha out of range");
    TaskDef def;
    def.name = "mix(" + left.name + "|" + right.name + ")"; // no commas: names land in CSV
    def.default_tau = std::max(left.default_tau, right.default_tau);
    def.reward_channel = left.reward_channel || right.reward_channel;
    // seed spaces coincide, so enumerability survives composition
    if (left.enumerable_seeds > 0 && right.enumerable_seeds > 0)
        def.enumerable_seeds = std::max(left.enumerable_seeds, right.enumerable_seeds);
    def.params["alpha"] = alpha;
    def.obs_desc = "per-trial choice between the components";
    def.act_desc = "as the chosen component";
    def.behavior = std::make_shared<MixtureBehavior>(left, right, alpha, def.name);
    return def;
}

} // namespace taskdiff
