#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hcn/optimizer.hpp"

namespace hcn {

enum class SweepAxis : std::uint8_t { kCellularUsers, kD2dPairs, kRisSideN, kQuantBitsE };

std::string to_string(SweepAxis axis);
bool parse_axis(const std::string& name, SweepAxis& out);

struct ExperimentSpec {
    SweepAxis axis = SweepAxis::kCellularUsers;
    std::vector<int> axis_values;
    int fixed_cellular = 5;
    int fixed_d2d = 10;
    int fixed_n = 4;
    int fixed_e = 3;
    std::vector<SchemeId> schemes = all_schemes();
    int seeds = 20;
    std::uint64_t master_seed = 1;
    SimParams base_params;
};

struct ResultRecord {
    int axis_value = 0;
    SchemeId scheme = SchemeId::kPa;
    int seed_index = 0;
    double sum_rate_bps = 0;
    int iterations = 0;
    bool feasible = false;
    double wall_time_s = 0;
};

enum class RunMode : std::uint8_t { kSerial, kParallel };

// One run of a sweep cell: scenario, channels and solver seeds all derive
// from (master seed, repetition), shared across schemes and axis values so
// every comparison uses common random numbers.
ResultRecord run_one(const ExperimentSpec& spec, std::size_t axis_index, SchemeId scheme,
                     int repetition, std::string* solve_json = nullptr);

// Full sweep over axis values x schemes x seeds. Records are returned in
// canonical (axis, scheme, seed) order regardless of run mode, so the
// parallel and serial paths produce identical output files.
std::vector<ResultRecord> run_sweep(const ExperimentSpec& spec, RunMode mode = RunMode::kSerial,
                                    const std::string& trace_dir = {});

struct SummaryRow {
    int axis_value = 0;
    SchemeId scheme = SchemeId::kPa;
    double mean_sum_rate = 0;
    double stderr_sum_rate = 0;
};

struct ImprovementRow {
    int axis_value = 0;
    SchemeId baseline = SchemeId::kMp;
    double improvement_pct = 0;  // (mean_PA - mean_X) / mean_X * 100
};

struct Summary {
    std::vector<SummaryRow> rows;
    std::vector<ImprovementRow> improvements;  // empty unless PA present
};

Summary summarize(const std::vector<ResultRecord>& records);

// CSV schema: axis,scheme,seed,sum_rate_bps,iterations,feasible,wall_time_s
void write_records_csv(std::ostream& out, const std::vector<ResultRecord>& records);
std::vector<ResultRecord> read_records_csv(std::istream& in);
void write_summary_csv(std::ostream& out, const Summary& summary);

}  // namespace hcn
