#ifndef VANETSIG_PIPELINE_HPP_
#define VANETSIG_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vanetsig/scenario.hpp"

namespace vanetsig {

// One measured verification pass over the scenario's messages.
struct BenchRow {
    std::string mode;          // individual-original | individual-modified | batch
    std::size_t n = 0;         // messages processed
    std::uint64_t pairings = 0;
    double wall_ms = 0.0;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    std::size_t false_accepts = 0;  // accepted messages that were forged
    std::size_t chosen_b = 0;       // batch mode only; 0 elsewhere
};

struct BenchReport {
    std::vector<BenchRow> rows;
    // audit runs only: batch verdicts that differ from the per-message check
    std::size_t audit_mismatches = 0;
};

struct PipelineOptions {
    std::size_t batch_size = 0;     // 0 = pick via a sweep over the first window
    long long lateness_budget = 0;  // budget for the automatic pick
    bool audit = false;             // re-verify every message individually
    bool bench_individual = false;  // add individual-original and -modified rows
    std::size_t queue_capacity = 64;
};

// Signs every message in the scenario, then runs the two-stage
// verification pipeline: a producer thread does the pairing-free
// per-message precomputation as arrivals occur, a consumer thread
// finalizes per-group batches of the chosen size over a bounded queue.
// Forged messages carry a response tweak that survives the challenge
// check, so they are only caught at finalization (and isolated there).
BenchReport run_pipeline(const Scenario& scenario, const PipelineOptions& opt);

// CSV with header mode,n,pairings,wall_ms,accepted,rejected,false_accepts,chosen_b.
std::string report_csv(const BenchReport& report);
void emit_report(const BenchReport& report, const std::string& path);
BenchReport parse_report(std::istream& in);

}  // namespace vanetsig

#endif  // VANETSIG_PIPELINE_HPP_
