#ifndef VANETSIG_SCHEDULER_HPP_
#define VANETSIG_SCHEDULER_HPP_

// Scheduling of verification work, in two layers.
//
// Layer 1 treats each signature's pairing-free precomputation as a job
// on one machine — release time r (arrival), due time d, identical
// processing time p — and maximizes the total weight of on-time jobs
// (1|r_i;p_j=p|Σ w_i U_i).  The exact dynamic program W_k(s,e) runs
// over the start-time grid T = {r_i + l·p} in O(n^7); an exhaustive
// oracle backs it for small n.
//
// Layer 2 picks the batch size for the 3-pairing finalization: sweep
// b = 2..n over a stream of precomputed items, time each batch, record
// (b, b_t, C_max_b, L_max_b), stop at the first batch mismatch, then
// choose the largest b whose lateness fits a budget.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vanetsig/batch.hpp"

namespace vanetsig {

struct Job {
    int id = 0;
    long long r = 0;  // release tick
    long long d = 0;  // due tick
    long long p = 1;  // processing ticks (identical across jobs for the DP)
    long long w = 1;  // weight / priority value
};

struct ScheduledJob {
    int id = 0;
    long long start = 0;
    long long C = 0;  // completion = start + p
    long long L = 0;  // lateness = C - d
    int U = 0;        // 1 iff late
};

struct ScheduleResult {
    std::vector<ScheduledJob> jobs;  // in execution order
    long long C_max = 0;             // 0 when empty
    long long L_max = 0;
    long long on_time_weight = 0;
};

// Greedy timing of a given order: each job starts at
// max(previous completion, its release).  Accepts arbitrary instances
// (late jobs simply score U=1); throws on unknown or repeated ids.
ScheduleResult schedule_metrics(std::span<const Job> jobs, std::span<const int> order);

// The start-time grid T = {r_i + l·p | l = 0..n-1}, sorted, deduplicated.
std::vector<long long> time_points(std::span<const Job> jobs);

struct DpResult {
    std::vector<int> selected;  // scheduled job ids, in start order
    ScheduleResult schedule;    // witness schedule: every selected job on time
    long long weight = 0;
    std::uint64_t ops = 0;  // inner-recurrence evaluations; bounded by n^7
};

// Exact maximum-weight on-time selection.  Requires identical p and
// r + p <= d per job; offenders throw, or are dropped when
// filter_infeasible is set.
DpResult dp_max_weight(std::span<const Job> jobs, bool filter_infeasible = false);

// Exhaustive reference for dp_max_weight (arbitrary p allowed).
// Refuses n > 10.
long long brute_force_oracle(std::span<const Job> jobs);

// Job files: one job per line, "id r d p w" (w may be omitted -> 1).
std::vector<Job> parse_jobs(std::istream& in);
std::vector<Job> load_jobs(const std::string& path);

// --- batch-size sweep -------------------------------------------------

// One precomputed signature as it leaves verification part 1: the five
// aggregation slots plus its part-1 completion tick and due tick.
struct TimedItem {
    BatchItem item;
    long long C = 0;
    long long d = 0;
};

// b_t clock for a batch of size b: a deterministic affine model
// (base + per_item·b ticks) for reproducible runs, or measured wall
// time (microseconds).
struct SweepCostModel {
    bool measured = false;
    long long base = 1;
    long long per_item = 1;
};

struct BatchSizeRecord {
    std::size_t b = 0;
    long long b_t = 0;
    long long C_max_b = 0;  // s_b + b_t + max part-1 completion in the window
    long long L_max_b = 0;  // C_max_b - earliest due time in the window
    bool ok = false;        // false = the batch equation failed at this b
};

// For b = 2..n: fold the first b items, evaluate the 3-pairing batch
// equation, record the metrics; on a mismatch emit the error record and
// stop.  Items must all carry hash_ok and one group digest.
std::vector<BatchSizeRecord> batch_size_sweep(const SystemParams& params,
                                              std::span<const TimedItem> items, const G2Elem& S,
                                              long long s_b, const SweepCostModel& model);

struct BatchChoice {
    std::size_t b = 0;
    bool feasible = false;  // false: nothing met the budget, smallest b returned
};

// Largest b among successful records with L_max_b <= budget, ties
// toward smaller C_max_b; none -> smallest b flagged infeasible.
BatchChoice choose_batch_size(std::span<const BatchSizeRecord> records,
                              long long max_lateness_budget);

// CSV with header "b,b_t,C_max_b,L_max_b,status".
std::string sweep_csv(std::span<const BatchSizeRecord> records);

}  // namespace vanetsig

#endif  // VANETSIG_SCHEDULER_HPP_
