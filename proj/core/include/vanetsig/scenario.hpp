#ifndef VANETSIG_SCENARIO_HPP_
#define VANETSIG_SCENARIO_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace vanetsig {

// One priority class: messages of this class carry weight `weight` and
// want verification within `due_offset` ticks of arrival.  Classes are
// sampled per message with probability proportional to `share`.
struct PriorityClass {
    long long weight = 1;
    double share = 1.0;
    long long due_offset = 10;
};

struct ScenarioConfig {
    int vehicles = 4;
    int groups = 1;
    double rate = 2.0;        // mean message arrivals per tick across all vehicles
    long long jitter = 0;     // uniform extra delay [0, jitter] added to due offsets
    long long horizon = 50;   // ticks of simulated time
    double forgery_rate = 0.0;
    std::string backend = "transparent";  // transparent | ss256 | ss512 | curve
    int l = 20;               // small-exponent bit length
    std::size_t max_batch = 64;
    std::uint64_t seed = 1;   // default stream seed; callers may override
    std::vector<PriorityClass> classes;  // empty = one default class
};

// Plain key=value lines, '#' comments, blank lines ignored.  Repeated
// "class = weight share due_offset" lines build the priority mix.
// Malformed input throws std::invalid_argument naming the line.
ScenarioConfig parse_scenario_config(std::istream& in);
ScenarioConfig load_scenario_config(const std::string& path);

struct ArrivalEvent {
    long long tick = 0;
    long long due = 0;
    long long weight = 1;
    std::size_t vehicle = 0;  // index into Scenario::vehicle_ids
    std::size_t group = 0;    // index into Scenario::group_ids
    std::string message;
    bool forged = false;
};

struct Scenario {
    ScenarioConfig config;
    std::vector<std::string> group_ids;
    std::vector<std::string> vehicle_ids;
    std::vector<std::size_t> vehicle_group;  // vehicle index -> group index
    std::vector<ArrivalEvent> events;        // non-decreasing tick order
};

// Deterministic expansion of a config into a concrete arrival stream;
// the same (config, seed) pair always yields the same scenario.
Scenario gen_scenario(const ScenarioConfig& config, std::uint64_t seed);

}  // namespace vanetsig

#endif  // VANETSIG_SCENARIO_HPP_
