#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "lureduce/reduction.hpp"

// JSON encodings of states, traces and reports. Doubles are written in the
// shortest decimal form that parses back to the same bits.
namespace lureduce::io {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Loaded inputs within this distance of unit norm are re-normalized.
inline constexpr double kLoadNormTolerance = 1e-8;

struct LoadedState {
    PureState state;
    bool renormalized = false;
    std::optional<std::uint64_t> seed;
    std::string digest;  // fnv1a-64 of the file bytes, hex
};

nlohmann::json state_to_json(const PureState& state, std::optional<std::uint64_t> seed = {});
/// Throws InvalidArgumentError on schema violations. Does not check the norm.
PureState state_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const DecompositionTrace& trace);
/// Rotations and original norm only; final_state is left empty.
DecompositionTrace trace_from_json(const nlohmann::json& j, int* n_out = nullptr,
                                   int* l_out = nullptr);

nlohmann::json report_to_json(const ReductionReport& report);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);
nlohmann::json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

/// Reads a state file; renormalizes when 1e-10 < | |psi| - 1 | <= 1e-8, rejects larger drift.
LoadedState load_state(const std::filesystem::path& path);
void save_state(const std::filesystem::path& path, const PureState& state,
                std::optional<std::uint64_t> seed = {});

std::string fnv1a_hex(std::string_view bytes);

}  // namespace lureduce::io
