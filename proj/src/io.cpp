#include "lureduce/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lureduce/errors.hpp"

namespace lureduce::io {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InvalidArgumentError("complex value must be a [real, imaginary] pair, got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

template <typename T>
T required(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidArgumentError(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InvalidArgumentError(std::string("field '") + key + "': " + e.what());
    }
}

json stage_to_json(const StageReport& s) {
    return {{"stage", s.stage},
            {"iterations", s.iterations},
            {"converged", s.converged},
            {"residual", s.residual},
            {"residual_sumsq", s.residual_sumsq},
            {"anchor_history", s.anchor_history},
            {"pivot_history", s.pivot_history}};
}

}  // namespace

json state_to_json(const PureState& state, std::optional<std::uint64_t> seed) {
    json amps = json::array();
    for (const Complex& a : state.amplitudes()) amps.push_back(complex_to_json(a));
    json j = {{"n", state.levels()}, {"l", state.sites()}, {"amplitudes", std::move(amps)}};
    if (seed) j["seed"] = *seed;
    return j;
}

PureState state_from_json(const json& j) {
    const int n = required<int>(j, "n");
    const int l = required<int>(j, "l");
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) {
        throw InvalidArgumentError("'amplitudes' must be an array");
    }
    const json& arr = j["amplitudes"];
    std::vector<Complex> amps;
    amps.reserve(arr.size());
    for (const json& a : arr) amps.push_back(complex_from_json(a));
    return PureState(n, l, std::move(amps));
}

json trace_to_json(const DecompositionTrace& trace) {
    json rots = json::array();
    for (const LocalRotation& r : trace.rotations) {
        rots.push_back({{"stage", r.stage},
                        {"site", r.site},
                        {"level_a", r.level_a},
                        {"level_b", r.level_b},
                        {"entries", json::array({complex_to_json(r.entries.m00),
                                                 complex_to_json(r.entries.m01),
                                                 complex_to_json(r.entries.m10),
                                                 complex_to_json(r.entries.m11)})}});
    }
    return {{"n", trace.final_state.levels()},
            {"l", trace.final_state.sites()},
            {"original_norm", trace.original_norm},
            {"rotations", std::move(rots)}};
}

DecompositionTrace trace_from_json(const json& j, int* n_out, int* l_out) {
    DecompositionTrace t;
    const int n = required<int>(j, "n");
    const int l = required<int>(j, "l");
    if (n_out) *n_out = n;
    if (l_out) *l_out = l;
    t.original_norm = required<double>(j, "original_norm");
    if (!j.contains("rotations") || !j["rotations"].is_array()) {
        throw InvalidArgumentError("'rotations' must be an array");
    }
    const json& rots = j["rotations"];
    for (const json& r : rots) {
        LocalRotation rot;
        rot.stage = required<int>(r, "stage");
        rot.site = required<int>(r, "site");
        rot.level_a = required<int>(r, "level_a");
        rot.level_b = required<int>(r, "level_b");
        const json e = r.contains("entries") ? r["entries"] : json();
        if (!e.is_array() || e.size() != 4) {
            throw InvalidArgumentError("rotation 'entries' must hold 4 complex values");
        }
        rot.entries = {complex_from_json(e[0]), complex_from_json(e[1]), complex_from_json(e[2]),
                       complex_from_json(e[3])};
        if (rot.site < 0 || rot.site >= l || rot.level_a < 0 || rot.level_a >= rot.level_b ||
            rot.level_b >= n) {
            throw InvalidArgumentError("rotation addresses a site or level outside the state");
        }
        t.rotations.push_back(rot);
    }
    return t;
}

json report_to_json(const ReductionReport& report) {
    json stages = json::array();
    for (const StageReport& s : report.stages) stages.push_back(stage_to_json(s));
    std::size_t rotations = 0;
    for (const StageReport& s : report.stages) rotations += static_cast<std::size_t>(s.iterations);
    return {{"stages", std::move(stages)},
            {"support_before", report.support_before},
            {"support_after", report.support_after},
            {"bound", report.bound},
            {"norm_drift", report.norm_drift},
            {"strategy", std::string(to_string(report.strategy))},
            {"epsilon", report.epsilon},
            {"threshold", report.threshold},
            {"converged", report.converged},
            {"rotation_count", rotations}};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgumentError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgumentError("cannot write '" + path.string() + "'");
    out << text;
}

json read_json(const std::filesystem::path& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw InvalidArgumentError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

void write_json(const std::filesystem::path& path, const json& j) {
    write_file(path, j.dump(2) + "\n");
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

LoadedState load_state(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgumentError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
    LoadedState out{state_from_json(j), false, std::nullopt, "fnv1a64:" + fnv1a_hex(text)};
    if (j.contains("seed") && j["seed"].is_number_unsigned()) out.seed = j["seed"].get<std::uint64_t>();

    const double norm = out.state.norm();
    const double drift = std::abs(norm - 1.0);
    if (!(drift <= kLoadNormTolerance)) {
        throw InvalidArgumentError("state in '" + path.string() + "' has norm " +
                                   std::to_string(norm) + ", too far from 1 to re-normalize");
    }
    if (std::abs(norm * norm - 1.0) > kNormTolerance) {
        for (Complex& a : out.state.amplitudes()) a /= norm;
        out.renormalized = true;
    }
    return out;
}

void save_state(const std::filesystem::path& path, const PureState& state,
                std::optional<std::uint64_t> seed) {
    write_json(path, state_to_json(state, seed));
}

}  // namespace lureduce::io
