#include "hcn/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hcn/rng.hpp"

namespace hcn {

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::kCellularUsers: return "cellular_users";
        case SweepAxis::kD2dPairs: return "d2d_pairs";
        case SweepAxis::kRisSideN: return "ris_side_N";
        case SweepAxis::kQuantBitsE: return "quant_bits_e";
    }
    return "?";
}

bool parse_axis(const std::string& name, SweepAxis& out) {
    for (SweepAxis a : {SweepAxis::kCellularUsers, SweepAxis::kD2dPairs, SweepAxis::kRisSideN,
                        SweepAxis::kQuantBitsE}) {
        if (to_string(a) == name) {
            out = a;
            return true;
        }
    }
    return false;
}

namespace {

struct Instance {
    SimParams params;
    int num_cellular;
    int num_d2d;
};

Instance instance_for(const ExperimentSpec& spec, int axis_value) {
    Instance inst{spec.base_params, spec.fixed_cellular, spec.fixed_d2d};
    inst.params.elements_per_side = spec.fixed_n;
    inst.params.quant_bits = spec.fixed_e;
    switch (spec.axis) {
        case SweepAxis::kCellularUsers: inst.num_cellular = axis_value; break;
        case SweepAxis::kD2dPairs: inst.num_d2d = axis_value; break;
        case SweepAxis::kRisSideN: inst.params.elements_per_side = axis_value; break;
        case SweepAxis::kQuantBitsE: inst.params.quant_bits = axis_value; break;
    }
    return inst;
}

}  // namespace

ResultRecord run_one(const ExperimentSpec& spec, std::size_t axis_index, SchemeId scheme,
                     int repetition, std::string* solve_json) {
    const int axis_value = spec.axis_values[axis_index];
    const Instance inst = instance_for(spec, axis_value);
    const std::uint64_t run_seed =
        derive_run_seed(spec.master_seed, static_cast<std::size_t>(repetition));

    const auto start = std::chrono::steady_clock::now();
    const Scenario scenario =
        generate_scenario(inst.params, inst.num_cellular, inst.num_d2d, run_seed);
    const ChannelRealization channels = draw_channels(scenario, run_seed);
    const SolveResult solved = maximize_sum_rate(scenario, channels, scheme, run_seed);
    const auto stop = std::chrono::steady_clock::now();

    if (solve_json) *solve_json = solved.to_json_text();

    ResultRecord rec;
    rec.axis_value = axis_value;
    rec.scheme = scheme;
    rec.seed_index = repetition;
    rec.sum_rate_bps = solved.sum_rate;
    rec.iterations = solved.iterations;
    rec.feasible = solved.feasible;
    rec.wall_time_s = std::chrono::duration<double>(stop - start).count();
    return rec;
}

std::vector<ResultRecord> run_sweep(const ExperimentSpec& spec, RunMode mode,
                                    const std::string& trace_dir) {
    if (spec.axis_values.empty()) throw std::invalid_argument("axis_values must be non-empty");
    if (spec.seeds < 1) throw std::invalid_argument("seeds must be >= 1");

    struct Cell {
        std::size_t axis_index;
        std::size_t scheme_index;
        int repetition;
    };
    std::vector<Cell> cells;
    for (std::size_t a = 0; a < spec.axis_values.size(); ++a) {
        for (std::size_t s = 0; s < spec.schemes.size(); ++s) {
            for (int r = 0; r < spec.seeds; ++r) cells.push_back({a, s, r});
        }
    }

    std::vector<ResultRecord> records(cells.size());
    std::vector<std::string> traces(trace_dir.empty() ? 0 : cells.size());

    const auto run_cell = [&](std::size_t k) {
        const Cell& c = cells[k];
        std::string* json = trace_dir.empty() ? nullptr : &traces[k];
        records[k] = run_one(spec, c.axis_index, spec.schemes[c.scheme_index], c.repetition, json);
    };

    if (mode == RunMode::kParallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(cells.size()); ++k) {
            run_cell(static_cast<std::size_t>(k));
        }
    } else {
        for (std::size_t k = 0; k < cells.size(); ++k) run_cell(k);
    }

    if (!trace_dir.empty()) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            const Cell& c = cells[k];
            std::ostringstream name;
            name << trace_dir << "/axis" << spec.axis_values[c.axis_index] << "_"
                 << to_string(spec.schemes[c.scheme_index]) << "_seed" << c.repetition << ".json";
            std::ofstream out(name.str());
            out << traces[k] << "\n";
        }
    }
    // cells were generated in canonical (axis, scheme, seed) order already.
    return records;
}

Summary summarize(const std::vector<ResultRecord>& records) {
    if (records.empty()) throw std::invalid_argument("empty record set");

    // Preserve first-appearance order of axis values and schemes.
    std::vector<int> axis_order;
    std::vector<SchemeId> scheme_order;
    std::map<std::pair<int, int>, std::vector<double>> groups;
    for (const ResultRecord& r : records) {
        if (std::find(axis_order.begin(), axis_order.end(), r.axis_value) == axis_order.end())
            axis_order.push_back(r.axis_value);
        if (std::find(scheme_order.begin(), scheme_order.end(), r.scheme) == scheme_order.end())
            scheme_order.push_back(r.scheme);
        groups[{r.axis_value, static_cast<int>(r.scheme)}].push_back(r.sum_rate_bps);
    }

    Summary summary;
    for (int axis : axis_order) {
        for (SchemeId scheme : scheme_order) {
            const auto it = groups.find({axis, static_cast<int>(scheme)});
            if (it == groups.end()) continue;
            const auto& xs = it->second;
            double mean = 0.0;
            for (double x : xs) mean += x;
            mean /= static_cast<double>(xs.size());
            double var = 0.0;
            for (double x : xs) var += (x - mean) * (x - mean);
            const double se = xs.size() > 1
                                  ? std::sqrt(var / (static_cast<double>(xs.size()) - 1.0) /
                                              static_cast<double>(xs.size()))
                                  : 0.0;
            summary.rows.push_back({axis, scheme, mean, se});
        }
    }
    const bool has_pa =
        std::find(scheme_order.begin(), scheme_order.end(), SchemeId::kPa) != scheme_order.end();
    if (has_pa) {
        for (int axis : axis_order) {
            const auto pa = groups.find({axis, static_cast<int>(SchemeId::kPa)});
            if (pa == groups.end()) continue;
            double pa_mean = 0.0;
            for (double x : pa->second) pa_mean += x;
            pa_mean /= static_cast<double>(pa->second.size());
            for (SchemeId scheme : scheme_order) {
                if (scheme == SchemeId::kPa) continue;
                const auto it = groups.find({axis, static_cast<int>(scheme)});
                if (it == groups.end()) continue;
                double mean = 0.0;
                for (double x : it->second) mean += x;
                mean /= static_cast<double>(it->second.size());
                summary.improvements.push_back(
                    {axis, scheme, (pa_mean - mean) / mean * 100.0});
            }
        }
    }
    return summary;
}

void write_records_csv(std::ostream& out, const std::vector<ResultRecord>& records) {
    out << "axis,scheme,seed,sum_rate_bps,iterations,feasible,wall_time_s\n";
    out << std::setprecision(17);
    for (const ResultRecord& r : records) {
        out << r.axis_value << ',' << to_string(r.scheme) << ',' << r.seed_index << ','
            << r.sum_rate_bps << ',' << r.iterations << ',' << (r.feasible ? 1 : 0) << ','
            << r.wall_time_s << '\n';
    }
}

std::vector<ResultRecord> read_records_csv(std::istream& in) {
    std::vector<ResultRecord> records;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string field;
        ResultRecord r;
        std::getline(ss, field, ',');
        r.axis_value = std::stoi(field);
        std::getline(ss, field, ',');
        if (!parse_scheme(field, r.scheme)) throw std::invalid_argument("bad scheme: " + field);
        std::getline(ss, field, ',');
        r.seed_index = std::stoi(field);
        std::getline(ss, field, ',');
        r.sum_rate_bps = std::stod(field);
        std::getline(ss, field, ',');
        r.iterations = std::stoi(field);
        std::getline(ss, field, ',');
        r.feasible = field == "1";
        std::getline(ss, field, ',');
        r.wall_time_s = std::stod(field);
        records.push_back(r);
    }
    return records;
}

void write_summary_csv(std::ostream& out, const Summary& summary) {
    out << "axis,scheme,mean_sum_rate_bps,stderr_sum_rate_bps\n";
    out << std::setprecision(17);
    for (const SummaryRow& row : summary.rows) {
        out << row.axis_value << ',' << to_string(row.scheme) << ',' << row.mean_sum_rate << ','
            << row.stderr_sum_rate << '\n';
    }
    if (!summary.improvements.empty()) {
        out << "axis,baseline,pa_improvement_pct\n";
        for (const ImprovementRow& row : summary.improvements) {
            out << row.axis_value << ',' << to_string(row.baseline) << ','
                << row.improvement_pct << '\n';
        }
    }
}

}  // namespace hcn
