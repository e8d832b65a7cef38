#include "lureduce/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

#include "lureduce/io.hpp"
#include "lureduce/kernels.hpp"
#include "lureduce/spectral.hpp"

namespace lureduce::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path derived_path(const fs::path& input, const char* suffix) {
    fs::path p = input;
    p.replace_extension();
    p += suffix;
    return p;
}

bool is_derived_output(const fs::path& p) {
    const std::string name = p.filename().string();
    for (const char* suffix : {".reduced.json", ".trace.json", ".report.json"}) {
        const std::string s = suffix;
        if (name.size() > s.size() && name.compare(name.size() - s.size(), s.size(), s) == 0) {
            return true;
        }
    }
    return false;
}

struct RunSummary {
    int code = kSuccess;
    std::string message;
};

RunSummary reduce_one(const fs::path& input, const fs::path& output, const fs::path& trace_path,
                      const fs::path& report_path, const ReduceOptions& options) {
    io::LoadedState loaded;
    try {
        loaded = io::load_state(input);
    } catch (const Error& e) {
        return {kInvalidInput, e.what()};
    }

    const auto start = std::chrono::steady_clock::now();
    ReductionResult result;
    RunSummary summary;
    json error = nullptr;
    try {
        result = reduce(loaded.state, options);
    } catch (NonConvergenceError& e) {
        result.trace = std::move(e.trace);
        result.report = std::move(e.report);
        summary = {kNonConvergence, e.what()};
        error = e.what();
    } catch (const InvalidArgumentError& e) {
        return {kInvalidInput, e.what()};
    } catch (const Error& e) {
        return {kNonConvergence, e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    json report = io::report_to_json(result.report);
    report["tool_version"] = std::string(io::kToolVersion);
    report["input"] = input.string();
    report["input_digest"] = loaded.digest;
    report["seed"] = loaded.seed ? json(*loaded.seed) : json(nullptr);
    report["renormalized_on_load"] = loaded.renormalized;
    report["wall_clock_seconds"] = seconds;
    report["error"] = error;

    try {
        io::save_state(output, result.trace.final_state);
        io::write_json(trace_path, io::trace_to_json(result.trace));
        io::write_json(report_path, report);
    } catch (const Error& e) {
        return {kInvalidInput, e.what()};
    }
    if (summary.code == kSuccess) {
        std::ostringstream msg;
        msg << input.string() << ": " << result.trace.rotations.size() << " rotations, support "
            << result.report.support_before << " -> " << result.report.support_after << " (bound "
            << result.report.bound << ")";
        summary.message = msg.str();
    }
    return summary;
}

}  // namespace

int cmd_random(const RandomOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const PureState s = random_state(opts.n, opts.l, opts.seed);
        io::save_state(opts.output, s, opts.seed);
        out << "wrote " << s.size() << " amplitudes to " << opts.output.string() << "\n";
        return kSuccess;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
}

int cmd_reduce(const ReduceCommandOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.batch.empty()) {
        const RunSummary r = reduce_one(
            opts.input, opts.output.empty() ? derived_path(opts.input, ".reduced.json") : opts.output,
            opts.trace.empty() ? derived_path(opts.input, ".trace.json") : opts.trace,
            opts.report.empty() ? derived_path(opts.input, ".report.json") : opts.report, opts.reduce);
        (r.code == kSuccess ? out : err) << (r.code == kSuccess ? "" : "error: ") << r.message << "\n";
        return r.code;
    }

    std::vector<fs::path> inputs;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(opts.batch, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json" &&
            !is_derived_output(entry.path())) {
            inputs.push_back(entry.path());
        }
    }
    if (ec) {
        err << "error: cannot list '" << opts.batch.string() << "': " << ec.message() << "\n";
        return kInvalidInput;
    }
    std::sort(inputs.begin(), inputs.end());

    // Runs are independent; each writes only its own derived files.
    std::vector<RunSummary> results(inputs.size());
    const auto count = static_cast<std::int64_t>(inputs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        const fs::path& in = inputs[static_cast<std::size_t>(i)];
        results[static_cast<std::size_t>(i)] =
            reduce_one(in, derived_path(in, ".reduced.json"), derived_path(in, ".trace.json"),
                       derived_path(in, ".report.json"), opts.reduce);
    }

    int code = kSuccess;
    for (const RunSummary& r : results) {
        (r.code == kSuccess ? out : err) << (r.code == kSuccess ? "" : "error: ") << r.message << "\n";
        code = std::max(code, r.code);
    }
    out << "processed " << inputs.size() << " files\n";
    return code;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const PureState original = io::state_from_json(io::read_json(opts.original));
        int n = 0, l = 0;
        DecompositionTrace trace = io::trace_from_json(io::read_json(opts.trace), &n, &l);
        trace.final_state = io::state_from_json(io::read_json(opts.reduced));
        if (original.levels() != trace.final_state.levels() ||
            original.sites() != trace.final_state.sites() || n != original.levels() ||
            l != original.sites()) {
            err << "error: shape mismatch between original, trace and reduced files\n";
            return kInvalidInput;
        }
        const PureState restored = invert_trace(trace);
        // Loaded inputs may have been re-normalized before reduction.
        PureState reference = original;
        const double norm = reference.norm();
        if (norm > 0.0) {
            for (Complex& a : reference.amplitudes()) a /= norm;
        }
        const double deviation =
            kernels::omp::max_abs_diff(restored.amplitudes(), reference.amplitudes());
        out << "max deviation: " << json(deviation).dump() << "\n";
        if (deviation < kVerifyTolerance) return kSuccess;
        err << "verification failed: deviation exceeds " << kVerifyTolerance << "\n";
        return kVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
}

int cmd_schmidt(const fs::path& input, std::ostream& out, std::ostream& err) {
    io::LoadedState loaded;
    try {
        loaded = io::load_state(input);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    const PureState& state = loaded.state;
    if (state.sites() != 2) {
        err << "error: schmidt needs a bipartite state (l = 2), got l = " << state.sites() << "\n";
        return kInvalidInput;
    }

    std::vector<double> from_reduction;
    try {
        const ReductionResult r = reduce(state, {Strategy::Greedy, kDefaultEpsilon, kDefaultMaxIters});
        for (int i = 0; i < state.levels(); ++i) {
            from_reduction.push_back(
                std::abs(r.trace.final_state[static_cast<std::size_t>(i * (state.levels() + 1))]));
        }
        std::sort(from_reduction.begin(), from_reduction.end(), std::greater<>());
    } catch (const Error& e) {
        err << "error: reduction failed: " << e.what() << "\n";
        return kNonConvergence;
    }

    spectral::SpectralResult oracle;
    try {
        oracle = spectral::schmidt_coefficients(state);
    } catch (const Error& e) {
        err << "error: oracle failed: " << e.what() << "\n";
        return kNonConvergence;
    }

    double diff = 0.0;
    for (std::size_t i = 0; i < from_reduction.size(); ++i) {
        diff = std::max(diff, std::abs(from_reduction[i] - oracle.schmidt_coefficients[i]));
    }
    out << "reduction: " << json(from_reduction).dump() << "\n";
    out << "oracle:    " << json(oracle.schmidt_coefficients).dump() << "\n";
    out << "max_abs_difference: " << json(diff).dump() << "\n";
    if (diff < kSchmidtTolerance) return kSuccess;
    err << "coefficient lists disagree beyond " << kSchmidtTolerance << "\n";
    return kVerificationFailed;
}

}  // namespace lureduce::cli
