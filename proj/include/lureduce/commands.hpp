#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "lureduce/reduction.hpp"

// Subcommand implementations behind the `lureduce` executable. Each returns
// the process exit code.
namespace lureduce::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInvalidInput = 1,
    kNonConvergence = 2,  // also oracle failure
    kVerificationFailed = 3,
};

/// Gate for verify: max amplitude deviation after undoing the trace.
inline constexpr double kVerifyTolerance = 1e-9;
/// Gate for schmidt: max difference between the two coefficient lists.
inline constexpr double kSchmidtTolerance = 1e-8;

struct RandomOptions {
    int n = 2;
    int l = 1;
    std::uint64_t seed = 0;
    std::filesystem::path output;
};

struct ReduceCommandOptions {
    std::filesystem::path input;
    std::filesystem::path output;  // empty: <input stem>.reduced.json
    std::filesystem::path trace;   // empty: <input stem>.trace.json
    std::filesystem::path report;  // empty: <input stem>.report.json
    std::filesystem::path batch;   // when set, input/output/trace/report are ignored
    ReduceOptions reduce;
};

struct VerifyOptions {
    std::filesystem::path original;
    std::filesystem::path trace;
    std::filesystem::path reduced;
};

int cmd_random(const RandomOptions& opts, std::ostream& out, std::ostream& err);
int cmd_reduce(const ReduceCommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_schmidt(const std::filesystem::path& input, std::ostream& out, std::ostream& err);

}  // namespace lureduce::cli
