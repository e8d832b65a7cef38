#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lureduce/errors.hpp"
#include "lureduce/state.hpp"

namespace lureduce {

enum class Strategy { Greedy, RoundRobin };

std::string_view to_string(Strategy s);
/// Accepts "greedy" and "round-robin"; throws InvalidArgumentError otherwise.
Strategy parse_strategy(std::string_view text);

inline constexpr double kDefaultEpsilon = 1e-12;
inline constexpr int kDefaultMaxIters = 100000;

/// One recorded elimination step: `entries` acts on span{|level_a>, |level_b>} of `site`.
struct LocalRotation {
    int stage = 0;
    int site = 0;
    int level_a = 0;
    int level_b = 1;
    Mat2 entries;
};

/// A term removed in stage k: digit `digit` (> k) at `site`, digit k on every other site.
struct StageTarget {
    int stage = 0;
    int site = 0;
    int digit = 1;
    std::size_t flat = 0;
    MultiIndex index;
};

struct DecompositionTrace {
    double original_norm = 1.0;
    std::vector<LocalRotation> rotations;
    PureState final_state;
};

struct StageReport {
    int stage = 0;
    int iterations = 0;
    bool converged = false;
    double residual = 0.0;         // max target magnitude at exit
    double residual_sumsq = 0.0;   // sum of squared target magnitudes at exit
    std::vector<double> anchor_history;  // |alpha^(N)|, N = 0..iterations
    std::vector<double> pivot_history;   // |alpha_max^(N)|, N = 1..iterations
};

struct ReductionReport {
    std::vector<StageReport> stages;
    std::size_t support_before = 0;
    std::size_t support_after = 0;
    long long bound = 0;
    double norm_drift = 0.0;
    Strategy strategy = Strategy::Greedy;
    double epsilon = kDefaultEpsilon;
    double threshold = 10 * kDefaultEpsilon;
    bool converged = false;
};

struct ReduceOptions {
    Strategy strategy = Strategy::Greedy;
    double epsilon = kDefaultEpsilon;
    int max_iters_per_stage = kDefaultMaxIters;
    /// Support-count threshold; <= 0 means 10 * epsilon.
    double threshold = 0.0;
};

struct StageResult {
    PureState state;
    std::vector<LocalRotation> rotations;
    StageReport report;
};

struct ReductionResult {
    DecompositionTrace trace;
    ReductionReport report;
};

/// A stage hit its iteration cap. Carries everything computed up to that point.
class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& what, DecompositionTrace partial_trace,
                        ReductionReport partial_report, double residual)
        : Error(what),
          trace(std::move(partial_trace)),
          report(std::move(partial_report)),
          residual(residual) {}

    DecompositionTrace trace;
    ReductionReport report;
    double residual;
};

/// Unitary R with R (x, y)^T = (r, 0)^T, r = sqrt(|x|^2 + |y|^2) >= 0.
/// Identity when r < 1e-300.
Mat2 zeroing_rotation(Complex anchor_amp, Complex target_amp);

/// All stage-k targets ordered by ascending site, then ascending digit.
std::vector<StageTarget> stage_targets(int n, int l, int k);

/// Flat index of |kk...k>.
std::size_t stage_anchor(int n, int l, int k);

/// Runs the stage-k elimination loop until every target is below epsilon.
/// Throws NonConvergenceError (holding the partial stage as a trace) after max_iters.
StageResult eliminate_stage(PureState state, int k, Strategy strategy, double epsilon,
                            int max_iters);

/// Runs stages 0..n-2 in order and checks that earlier stages stay eliminated.
ReductionResult reduce(const PureState& state, const ReduceOptions& options = {});

/// n^l - n(n-1)l/2.
long long term_bound(int n, int l);

std::size_t support_count(const PureState& state, double threshold);

/// Applies the adjoints of the recorded rotations to final_state in reverse order.
PureState invert_trace(const DecompositionTrace& trace);

}  // namespace lureduce
