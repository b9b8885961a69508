#include "vanetsig/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace vanetsig {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_line(std::size_t lineno, const std::string& what) {
    throw std::invalid_argument("scenario line " + std::to_string(lineno) + ": " + what);
}

template <typename T>
T parse_num(const std::string& value, std::size_t lineno, const std::string& key) {
    std::istringstream in(value);
    T out;
    std::string extra;
    if (!(in >> out) || (in >> extra)) bad_line(lineno, "bad value for " + key);
    return out;
}

void validate(const ScenarioConfig& c) {
    if (c.vehicles < 1) throw std::invalid_argument("scenario: vehicles must be >= 1");
    if (c.groups < 1) throw std::invalid_argument("scenario: groups must be >= 1");
    if (!(c.rate > 0)) throw std::invalid_argument("scenario: rate must be > 0");
    if (c.jitter < 0) throw std::invalid_argument("scenario: jitter must be >= 0");
    if (c.horizon < 1) throw std::invalid_argument("scenario: horizon must be >= 1");
    if (c.forgery_rate < 0 || c.forgery_rate > 1)
        throw std::invalid_argument("scenario: forgery_rate must lie in [0,1]");
    if (c.max_batch < 1) throw std::invalid_argument("scenario: max_batch must be >= 1");
    if (c.backend != "transparent" && c.backend != "curve" && c.backend != "ss256" &&
        c.backend != "ss512")
        throw std::invalid_argument("scenario: unknown backend " + c.backend);
    for (const PriorityClass& pc : c.classes) {
        if (pc.weight < 0) throw std::invalid_argument("scenario: class weight must be >= 0");
        if (!(pc.share > 0)) throw std::invalid_argument("scenario: class share must be > 0");
        if (pc.due_offset < 1)
            throw std::invalid_argument("scenario: class due_offset must be >= 1");
    }
}

}  // namespace

ScenarioConfig parse_scenario_config(std::istream& in) {
    ScenarioConfig c;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos) bad_line(lineno, "expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty() || value.empty()) bad_line(lineno, "expected key = value");

        if (key == "vehicles") {
            c.vehicles = parse_num<int>(value, lineno, key);
        } else if (key == "groups") {
            c.groups = parse_num<int>(value, lineno, key);
        } else if (key == "rate") {
            c.rate = parse_num<double>(value, lineno, key);
        } else if (key == "jitter") {
            c.jitter = parse_num<long long>(value, lineno, key);
        } else if (key == "horizon") {
            c.horizon = parse_num<long long>(value, lineno, key);
        } else if (key == "forgery_rate") {
            c.forgery_rate = parse_num<double>(value, lineno, key);
        } else if (key == "backend") {
            c.backend = value;
        } else if (key == "l") {
            c.l = parse_num<int>(value, lineno, key);
        } else if (key == "max_batch") {
            c.max_batch = parse_num<std::size_t>(value, lineno, key);
        } else if (key == "seed") {
            c.seed = parse_num<std::uint64_t>(value, lineno, key);
        } else if (key == "class") {
            std::istringstream fields(value);
            PriorityClass pc;
            std::string extra;
            if (!(fields >> pc.weight >> pc.share >> pc.due_offset) || (fields >> extra))
                bad_line(lineno, "class wants \"weight share due_offset\"");
            c.classes.push_back(pc);
        } else {
            bad_line(lineno, "unknown key " + key);
        }
    }
    validate(c);
    return c;
}

ScenarioConfig load_scenario_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read scenario file: " + path);
    return parse_scenario_config(in);
}

Scenario gen_scenario(const ScenarioConfig& config, std::uint64_t seed) {
    validate(config);
    Scenario sc;
    sc.config = config;
    for (int g = 0; g < config.groups; ++g) sc.group_ids.push_back("gm-" + std::to_string(g + 1));
    for (int v = 0; v < config.vehicles; ++v) {
        sc.vehicle_ids.push_back("veh-" + std::to_string(v + 1));
        sc.vehicle_group.push_back(std::size_t(v) % std::size_t(config.groups));
    }

    std::vector<PriorityClass> classes = config.classes;
    if (classes.empty()) classes.push_back(PriorityClass{});
    std::vector<double> shares;
    for (const PriorityClass& pc : classes) shares.push_back(pc.share);

    std::mt19937_64 rng(seed);
    std::poisson_distribution<int> arrivals(config.rate);
    std::uniform_int_distribution<std::size_t> pick_vehicle(0, sc.vehicle_ids.size() - 1);
    std::discrete_distribution<std::size_t> pick_class(shares.begin(), shares.end());
    std::uniform_int_distribution<long long> extra(0, config.jitter);
    std::bernoulli_distribution forge(config.forgery_rate);

    std::size_t seq = 0;
    for (long long tick = 0; tick < config.horizon; ++tick) {
        int k = arrivals(rng);
        for (int i = 0; i < k; ++i) {
            ArrivalEvent ev;
            ev.tick = tick;
            ev.vehicle = pick_vehicle(rng);
            ev.group = sc.vehicle_group[ev.vehicle];
            const PriorityClass& pc = classes[pick_class(rng)];
            ev.weight = pc.weight;
            ev.due = tick + pc.due_offset + (config.jitter > 0 ? extra(rng) : 0);
            ev.forged = config.forgery_rate > 0 && forge(rng);
            ev.message = sc.vehicle_ids[ev.vehicle] + "-t" + std::to_string(tick) + "-n" +
                         std::to_string(seq++);
            sc.events.push_back(std::move(ev));
        }
    }
    return sc;
}

}  // namespace vanetsig
