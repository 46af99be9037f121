#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace idea {

enum class MinimumOrigin { idea_contraction, mbh_sample, harvest };

std::string to_string(MinimumOrigin o);
MinimumOrigin origin_from_string(const std::string& s);

// One completed local search. x is in unit-box coordinates.
struct MinimumRecord {
    std::vector<double> x;
    double f = std::numeric_limits<double>::infinity();
    long evaluations_used = 0; // cost of the local search that produced it
    long found_at = 0;         // total evaluation count of the run when recorded
    MinimumOrigin origin = MinimumOrigin::harvest;
    bool degenerate = false;   // objective non-finite at the start point
};

struct Archive {
    std::vector<MinimumRecord> records;

    void add(MinimumRecord r) { records.push_back(std::move(r)); }
    std::size_t size() const { return records.size(); }
    bool empty() const { return records.empty(); }

    const MinimumRecord* best() const {
        const MinimumRecord* b = nullptr;
        for (const auto& r : records)
            if (!r.degenerate && (!b || r.f < b->f)) b = &r;
        return b;
    }
};

struct TracePoint {
    long generation = 0;
    long evaluations = 0;
    double best_f = std::numeric_limits<double>::infinity();
    double rho_a = 0.0;
};

// Outcome of one optimizer run; positions are unit-box coordinates.
struct RunReport {
    std::vector<TracePoint> trace;
    std::vector<double> best_x;
    double best_f = std::numeric_limits<double>::infinity();
    long evaluations = 0;
    long nonfinite_evaluations = 0;
    long restarts_bubble = 0;
    long restarts_global = 0;
    long local_searches = 0;

    // best objective seen up to an evaluation budget, +inf if none yet
    double best_f_at(long budget) const {
        double b = std::numeric_limits<double>::infinity();
        for (const auto& t : trace) {
            if (t.evaluations > budget) break;
            b = t.best_f;
        }
        return b;
    }
};

void write_trace_csv(const std::string& path, const RunReport& report);
void write_archive_jsonl(const std::string& path, const Archive& archive);
Archive read_archive_jsonl(const std::string& path);

} // namespace idea
