#include "lureduce/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lureduce/kernels.hpp"

namespace lureduce {

std::string_view to_string(Strategy s) {
    return s == Strategy::Greedy ? "greedy" : "round-robin";
}

Strategy parse_strategy(std::string_view text) {
    if (text == "greedy") return Strategy::Greedy;
    if (text == "round-robin") return Strategy::RoundRobin;
    throw InvalidArgumentError("unknown strategy '" + std::string(text) +
                               "' (expected greedy or round-robin)");
}

Mat2 zeroing_rotation(Complex anchor_amp, Complex target_amp) {
    const double r = std::hypot(std::abs(anchor_amp), std::abs(target_amp));
    if (r < 1e-300) return Mat2::identity();
    const Complex x = anchor_amp / r;
    const Complex y = target_amp / r;
    return {std::conj(x), std::conj(y), -y, x};
}

std::vector<StageTarget> stage_targets(int n, int l, int k) {
    checked_dimension(n, l, std::numeric_limits<std::size_t>::max());
    if (k < 0 || k > n - 2) {
        throw InvalidArgumentError("stage " + std::to_string(k) + " outside [0, " +
                                   std::to_string(n - 2) + "]");
    }
    std::vector<StageTarget> out;
    out.reserve(static_cast<std::size_t>((n - 1 - k) * l));
    for (int site = 0; site < l; ++site) {
        for (int d = k + 1; d < n; ++d) {
            MultiIndex idx(static_cast<std::size_t>(l), k);
            idx[static_cast<std::size_t>(site)] = d;
            const std::size_t flat = index_encode(idx, n);
            out.push_back({k, site, d, flat, std::move(idx)});
        }
    }
    return out;
}

std::size_t stage_anchor(int n, int l, int k) {
    return index_encode(MultiIndex(static_cast<std::size_t>(l), k), n);
}

namespace {

struct Pivot {
    std::size_t position = 0;  // into the target list
    double magnitude = 0.0;
};

Pivot max_target(const PureState& s, const std::vector<StageTarget>& targets) {
    Pivot best;
    bool first = true;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const double m = std::abs(s[targets[i].flat]);
        if (first || m > best.magnitude ||
            (m == best.magnitude && targets[i].flat < targets[best.position].flat)) {
            best = {i, m};
            first = false;
        }
    }
    return best;
}

double sum_squares(const PureState& s, const std::vector<StageTarget>& targets) {
    double acc = 0.0;
    for (const StageTarget& t : targets) acc += std::norm(s[t.flat]);
    return acc;
}

}  // namespace

StageResult eliminate_stage(PureState state, int k, Strategy strategy, double epsilon,
                            int max_iters) {
    if (!(epsilon > 0.0)) throw InvalidArgumentError("epsilon must be positive");
    if (max_iters < 0) throw InvalidArgumentError("max_iters must be nonnegative");
    const double original_norm = state.norm();
    if (std::abs(original_norm * original_norm - 1.0) > kNormTolerance) {
        throw InvalidArgumentError("eliminate_stage requires a normalized state");
    }

    const int n = state.levels();
    const int l = state.sites();
    const auto targets = stage_targets(n, l, k);
    const std::size_t anchor = stage_anchor(n, l, k);

    StageResult result{std::move(state), {}, {}};
    StageReport& rep = result.report;
    rep.stage = k;
    rep.anchor_history.push_back(std::abs(result.state[anchor]));

    std::size_t cursor = 0;
    while (true) {
        const Pivot worst = max_target(result.state, targets);
        if (worst.magnitude < epsilon) {
            rep.converged = true;
            rep.residual = worst.magnitude;
            break;
        }
        if (rep.iterations >= max_iters) {
            rep.residual = worst.magnitude;
            rep.residual_sumsq = sum_squares(result.state, targets);
            DecompositionTrace partial{original_norm, std::move(result.rotations),
                                       std::move(result.state)};
            ReductionReport partial_report;
            partial_report.stages.push_back(rep);
            partial_report.strategy = strategy;
            partial_report.epsilon = epsilon;
            throw NonConvergenceError("stage " + std::to_string(k) + " did not converge after " +
                                          std::to_string(max_iters) + " iterations (residual " +
                                          std::to_string(worst.magnitude) + ")",
                                      std::move(partial), std::move(partial_report),
                                      worst.magnitude);
        }

        std::size_t pick = worst.position;
        if (strategy == Strategy::RoundRobin) {
            // Next target in list order, starting at the cursor, that is not yet eliminated.
            while (std::abs(result.state[targets[cursor].flat]) < epsilon) {
                cursor = (cursor + 1) % targets.size();
            }
            pick = cursor;
            cursor = (cursor + 1) % targets.size();
        }

        const StageTarget& t = targets[pick];
        const Complex target_amp = result.state[t.flat];
        const Mat2 rot = zeroing_rotation(result.state[anchor], target_amp);
        apply_plane_rotation_inplace(result.state, t.site, k, t.digit, rot);
        result.rotations.push_back({k, t.site, k, t.digit, rot});

        ++rep.iterations;
        rep.pivot_history.push_back(std::abs(target_amp));
        rep.anchor_history.push_back(std::abs(result.state[anchor]));
    }
    rep.residual_sumsq = sum_squares(result.state, targets);
    return result;
}

long long term_bound(int n, int l) {
    if (n < 2 || l < 1) throw InvalidArgumentError("term_bound needs n >= 2 and l >= 1");
    long long power = 1;
    for (int i = 0; i < l; ++i) {
        if (power > std::numeric_limits<long long>::max() / n) {
            throw InvalidArgumentError("n^l overflows a 64-bit integer");
        }
        power *= n;
    }
    return power - static_cast<long long>(n) * (n - 1) / 2 * l;
}

std::size_t support_count(const PureState& state, double threshold) {
    const auto amps = state.amplitudes();
    return static_cast<std::size_t>(std::count_if(
        amps.begin(), amps.end(), [threshold](const Complex& a) { return std::abs(a) > threshold; }));
}

ReductionResult reduce(const PureState& state, const ReduceOptions& options) {
    const int n = state.levels();
    const int l = state.sites();
    const double nsq = state.norm_squared();
    if (std::abs(nsq - 1.0) > kNormTolerance) {
        throw InvalidArgumentError("reduce requires a normalized state, |psi|^2 = " +
                                   std::to_string(nsq));
    }

    ReductionResult out;
    ReductionReport& rep = out.report;
    rep.strategy = options.strategy;
    rep.epsilon = options.epsilon;
    rep.threshold = options.threshold > 0.0 ? options.threshold : 10.0 * options.epsilon;
    rep.bound = term_bound(n, l);
    rep.support_before = support_count(state, rep.threshold);

    out.trace.original_norm = std::sqrt(nsq);
    PureState current = state;

    auto finish = [&](PureState final_state) {
        rep.support_after = support_count(final_state, rep.threshold);
        rep.norm_drift = std::abs(final_state.norm() - 1.0);
        out.trace.final_state = std::move(final_state);
    };

    for (int k = 0; k <= n - 2; ++k) {
        StageResult stage;
        try {
            stage = eliminate_stage(std::move(current), k, options.strategy, options.epsilon,
                                    options.max_iters_per_stage);
        } catch (NonConvergenceError& e) {
            for (auto& r : e.trace.rotations) out.trace.rotations.push_back(r);
            rep.stages.push_back(e.report.stages.front());
            rep.converged = false;
            finish(std::move(e.trace.final_state));
            throw NonConvergenceError(e.what(), std::move(out.trace), std::move(out.report),
                                      e.residual);
        }
        current = std::move(stage.state);
        out.trace.rotations.insert(out.trace.rotations.end(), stage.rotations.begin(),
                                   stage.rotations.end());
        rep.stages.push_back(std::move(stage.report));

        for (int earlier = 0; earlier < k; ++earlier) {
            for (const StageTarget& t : stage_targets(n, l, earlier)) {
                if (const double m = std::abs(current[t.flat]); m > 10.0 * options.epsilon) {
                    throw InternalConsistencyError(
                        "stage " + std::to_string(earlier) + " target at flat index " +
                        std::to_string(t.flat) + " grew to " + std::to_string(m) +
                        " during stage " + std::to_string(k));
                }
            }
        }
    }
    rep.converged = true;
    finish(std::move(current));
    return out;
}

PureState invert_trace(const DecompositionTrace& trace) {
    PureState s = trace.final_state;
    for (auto it = trace.rotations.rbegin(); it != trace.rotations.rend(); ++it) {
        apply_plane_rotation_inplace(s, it->site, it->level_a, it->level_b, it->entries.adjoint());
    }
    return s;
}

}  // namespace lureduce
