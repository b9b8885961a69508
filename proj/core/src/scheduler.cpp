#include "vanetsig/scheduler.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vanetsig {

namespace {

void check_job_basics(const Job& j) {
    if (j.r < 0) throw std::invalid_argument("job " + std::to_string(j.id) + ": negative release");
    if (j.p < 1) throw std::invalid_argument("job " + std::to_string(j.id) + ": processing < 1");
    if (j.w < 0) throw std::invalid_argument("job " + std::to_string(j.id) + ": negative weight");
}

void check_unique_ids(std::span<const Job> jobs) {
    std::set<int> ids;
    for (const Job& j : jobs)
        if (!ids.insert(j.id).second)
            throw std::invalid_argument("duplicate job id " + std::to_string(j.id));
}

}  // namespace

ScheduleResult schedule_metrics(std::span<const Job> jobs, std::span<const int> order) {
    check_unique_ids(jobs);
    std::map<int, const Job*> by_id;
    for (const Job& j : jobs) {
        check_job_basics(j);
        by_id[j.id] = &j;
    }

    ScheduleResult res;
    std::set<int> used;
    long long t = 0;
    for (int id : order) {
        auto it = by_id.find(id);
        if (it == by_id.end()) throw std::invalid_argument("unknown job id " + std::to_string(id));
        if (!used.insert(id).second)
            throw std::invalid_argument("job id " + std::to_string(id) + " appears twice");
        const Job& j = *it->second;
        long long start = std::max(t, j.r);
        ScheduledJob row;
        row.id = id;
        row.start = start;
        row.C = start + j.p;
        row.L = row.C - j.d;
        row.U = row.C <= j.d ? 0 : 1;
        t = row.C;
        if (row.U == 0) res.on_time_weight += j.w;
        res.jobs.push_back(row);
    }
    if (!res.jobs.empty()) {
        res.L_max = res.jobs.front().L;
        for (const ScheduledJob& row : res.jobs) {
            res.C_max = std::max(res.C_max, row.C);
            res.L_max = std::max(res.L_max, row.L);
        }
    }
    return res;
}

std::vector<long long> time_points(std::span<const Job> jobs) {
    std::vector<long long> t;
    const long long n = static_cast<long long>(jobs.size());
    for (const Job& j : jobs)
        for (long long l = 0; l < n; ++l) t.push_back(j.r + l * j.p);
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
}

DpResult dp_max_weight(std::span<const Job> jobs_in, bool filter_infeasible) {
    check_unique_ids(jobs_in);
    std::vector<Job> jobs;
    for (const Job& j : jobs_in) {
        check_job_basics(j);
        if (j.r + j.p > j.d) {
            if (filter_infeasible) continue;
            throw std::invalid_argument("job " + std::to_string(j.id) +
                                        " violates r + p <= d; filter or fix the instance");
        }
        jobs.push_back(j);
    }
    DpResult res;
    if (jobs.empty()) return res;
    for (const Job& j : jobs)
        if (j.p != jobs.front().p)
            throw std::invalid_argument("identical processing times required");
    const long long p = jobs.front().p;

    // index by non-decreasing due time; the recurrence peels job k (the
    // latest-due job considered so far) off the window
    std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
        return a.d != b.d ? a.d < b.d : a.id < b.id;
    });
    const std::size_t n = jobs.size();

    // start-time grid plus window sentinels: the answer cell is
    // (min T - p, max T + p), so that every release falls strictly
    // inside the outer window and the last start can still complete
    std::vector<long long> grid = time_points(jobs);
    grid.insert(grid.begin(), grid.front() - p);
    grid.push_back(grid.back() + p);
    const std::size_t m = grid.size();
    auto gi = [&](long long v) {
        return std::size_t(std::lower_bound(grid.begin(), grid.end(), v) - grid.begin());
    };

    // W rolls over k; the choice table keeps every layer for the
    // witness reconstruction (-1 = job k not scheduled in this window)
    std::vector<long long> prev(m * m, 0), cur(m * m, 0);
    std::vector<int> choice(n * m * m, -1);
    auto at = [m](std::vector<long long>& w, std::size_t a, std::size_t b) -> long long& {
        return w[a * m + b];
    };

    for (std::size_t k = 0; k < n; ++k) {
        const Job& jk = jobs[k];
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a; b < m; ++b) {
                long long best = at(prev, a, b);
                int pick = -1;
                if (grid[a] <= jk.r && jk.r < grid[b]) {
                    long long lo = std::max(jk.r, grid[a] + p);
                    long long hi = std::min(jk.d, grid[b]) - p;
                    for (std::size_t s = gi(lo); s < m && grid[s] <= hi; ++s) {
                        ++res.ops;
                        long long cand = jk.w + at(prev, a, s) + at(prev, s, b);
                        if (cand > best) {
                            best = cand;
                            pick = static_cast<int>(s);
                        }
                    }
                }
                at(cur, a, b) = best;
                choice[(k * m + a) * m + b] = pick;
            }
        }
        std::swap(prev, cur);
    }
    res.weight = at(prev, 0, m - 1);

    // follow the argmax choices back down to (job, start) pairs
    std::vector<std::pair<long long, std::size_t>> starts;  // (start, job index)
    struct Frame {
        std::size_t k, a, b;
    };
    std::vector<Frame> stack{{n, 0, m - 1}};
    while (!stack.empty()) {
        auto [k, a, b] = stack.back();
        stack.pop_back();
        if (k == 0) continue;
        int pick = choice[((k - 1) * m + a) * m + b];
        if (pick < 0) {
            stack.push_back({k - 1, a, b});
        } else {
            starts.emplace_back(grid[std::size_t(pick)], k - 1);
            stack.push_back({k - 1, a, std::size_t(pick)});
            stack.push_back({k - 1, std::size_t(pick), b});
        }
    }
    std::sort(starts.begin(), starts.end());

    for (const auto& [start, idx] : starts) {
        const Job& j = jobs[idx];
        ScheduledJob row;
        row.id = j.id;
        row.start = start;
        row.C = start + p;
        row.L = row.C - j.d;
        row.U = row.C <= j.d ? 0 : 1;
        res.selected.push_back(j.id);
        res.schedule.jobs.push_back(row);
        res.schedule.C_max = std::max(res.schedule.C_max, row.C);
        if (row.U == 0) res.schedule.on_time_weight += j.w;
    }
    if (!res.schedule.jobs.empty()) {
        res.schedule.L_max = res.schedule.jobs.front().L;
        for (const ScheduledJob& row : res.schedule.jobs)
            res.schedule.L_max = std::max(res.schedule.L_max, row.L);
    }
    return res;
}

long long brute_force_oracle(std::span<const Job> jobs) {
    if (jobs.size() > 10) throw std::invalid_argument("oracle limited to n <= 10");
    check_unique_ids(jobs);
    for (const Job& j : jobs) check_job_basics(j);
    const unsigned full = (1u << jobs.size()) - 1u;
    std::map<std::pair<unsigned, long long>, long long> memo;

    // schedule any remaining job next (at max(now, r)) or stop; the
    // untouched remainder models jobs never selected
    auto best = [&](auto&& self, unsigned mask, long long now) -> long long {
        if (mask == 0) return 0;
        auto key = std::make_pair(mask, now);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        long long r = 0;
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            if (!(mask & (1u << i))) continue;
            long long start = std::max(now, jobs[i].r);
            long long C = start + jobs[i].p;
            if (C <= jobs[i].d) r = std::max(r, jobs[i].w + self(self, mask & ~(1u << i), C));
        }
        memo.emplace(key, r);
        return r;
    };
    return best(best, full, 0);
}

std::vector<Job> parse_jobs(std::istream& in) {
    std::vector<Job> jobs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        if (trimmed.find_first_not_of(" \t") == std::string::npos) continue;
        if (trimmed[trimmed.find_first_not_of(" \t")] == '#') continue;
        std::istringstream fields(line);
        Job j;
        if (!(fields >> j.id >> j.r >> j.d >> j.p))
            throw std::invalid_argument("jobs line " + std::to_string(lineno) +
                                        ": expected \"id r d p [w]\"");
        if (!(fields >> j.w)) {
            j.w = 1;
            fields.clear();
        }
        std::string extra;
        if (fields >> extra)
            throw std::invalid_argument("jobs line " + std::to_string(lineno) +
                                        ": trailing fields");
        jobs.push_back(j);
    }
    return jobs;
}

std::vector<Job> load_jobs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read jobs file: " + path);
    return parse_jobs(in);
}

std::vector<BatchSizeRecord> batch_size_sweep(const SystemParams& params,
                                              std::span<const TimedItem> items, const G2Elem& S,
                                              long long s_b, const SweepCostModel& model) {
    std::vector<BatchSizeRecord> records;
    const std::size_t n = items.size();
    if (n < 2) return records;
    for (const TimedItem& it : items) {
        if (!it.item.hash_ok)
            throw std::invalid_argument("sweep input contains an item that failed part 1");
        if (it.item.group_digest != items.front().item.group_digest)
            throw std::invalid_argument("sweep input mixes groups");
    }

    const GroupContext& ctx = params.ctx;
    // carry the aggregate products forward instead of refolding the
    // whole prefix for each b; no history queue needed
    G3Elem mu = items[0].item.M;
    G1Elem Bp = items[0].item.B, Kp = items[0].item.K, Qp = items[0].item.Q;
    G3Elem nu = items[0].item.nu;
    long long c_max = items[0].C;
    long long d1 = items[0].d;

    for (std::size_t b = 2; b <= n; ++b) {
        const BatchItem& it = items[b - 1].item;
        mu = mu * it.M;
        Bp = Bp * it.B;
        Kp = Kp * it.K;
        Qp = Qp * it.Q;
        nu = nu * it.nu;
        c_max = std::max(c_max, items[b - 1].C);
        d1 = std::min(d1, items[b - 1].d);

        auto t0 = std::chrono::steady_clock::now();
        G3Elem eta = ctx.pair(Bp, params.B()) * ctx.pair(Kp, params.K_T) * ctx.pair(Qp, S) * nu;
        bool ok = mu == eta;
        auto t1 = std::chrono::steady_clock::now();

        BatchSizeRecord rec;
        rec.b = b;
        rec.b_t = model.measured
                      ? std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()
                      : model.base + model.per_item * static_cast<long long>(b);
        rec.C_max_b = s_b + rec.b_t + c_max;
        rec.L_max_b = rec.C_max_b - d1;
        rec.ok = ok;
        records.push_back(rec);
        if (!ok) break;  // batch error: report and stop
    }
    return records;
}

BatchChoice choose_batch_size(std::span<const BatchSizeRecord> records,
                              long long max_lateness_budget) {
    if (records.empty()) throw std::invalid_argument("no batch-size records");
    const BatchSizeRecord* best = nullptr;
    for (const BatchSizeRecord& r : records) {
        if (!r.ok || r.L_max_b > max_lateness_budget) continue;
        if (!best || r.b > best->b || (r.b == best->b && r.C_max_b < best->C_max_b)) best = &r;
    }
    if (best) return BatchChoice{best->b, true};
    const BatchSizeRecord* fallback = &records.front();
    for (const BatchSizeRecord& r : records)
        if (r.b < fallback->b || (r.b == fallback->b && r.C_max_b < fallback->C_max_b))
            fallback = &r;
    return BatchChoice{fallback->b, false};
}

std::string sweep_csv(std::span<const BatchSizeRecord> records) {
    std::ostringstream out;
    out << "b,b_t,C_max_b,L_max_b,status\n";
    for (const BatchSizeRecord& r : records)
        out << r.b << ',' << r.b_t << ',' << r.C_max_b << ',' << r.L_max_b << ','
            << (r.ok ? "ok" : "batch_error") << '\n';
    return out.str();
}

}  // namespace vanetsig
