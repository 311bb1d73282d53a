#include "hcn/optimizer.hpp"

#include <cmath>

#include "json.hpp"

#include "hcn/rng.hpp"

namespace hcn {

std::string to_string(SchemeId scheme) {
    switch (scheme) {
        case SchemeId::kPa: return "PA";
        case SchemeId::kMp: return "MP";
        case SchemeId::kRp: return "RP";
        case SchemeId::kNonRis: return "NonRIS";
        case SchemeId::kNonCg: return "NonCG";
        case SchemeId::kFmm: return "Fmm";
    }
    return "?";
}

bool parse_scheme(const std::string& name, SchemeId& out) {
    for (SchemeId s : all_schemes()) {
        if (to_string(s) == name) {
            out = s;
            return true;
        }
    }
    return false;
}

std::vector<SchemeId> all_schemes() {
    return {SchemeId::kPa,     SchemeId::kMp,    SchemeId::kRp,
            SchemeId::kNonRis, SchemeId::kNonCg, SchemeId::kFmm};
}

std::string SolveResult::to_json_text() const {
    nlohmann::json j;
    j["sum_rate_bps"] = sum_rate;
    j["iterations"] = iterations;
    j["feasible"] = feasible;
    j["termination"] = termination;
    j["rate_trace"] = rate_trace;
    j["coalition_of"] = partition.coalition_of;
    j["power_w"] = power.p;
    j["phases"] = nlohmann::json::parse(phases.to_json_text());
    return j.dump(2);
}

namespace {

PhaseConfig random_phases(const Scenario& scenario, std::vector<int> assist,
                          std::mt19937_64& rng) {
    const SimParams& p = scenario.params;
    PhaseConfig cfg = PhaseConfig::zeros(p.quant_bits, p.codebook,
                                         static_cast<int>(scenario.panels.size()),
                                         p.elements_per_side, std::move(assist));
    std::uniform_int_distribution<int> pick(0, (1 << p.quant_bits) - 1);
    for (int& idx : cfg.index) idx = pick(rng);
    return cfg;
}

struct State {
    Partition partition;
    PowerVector power;
    PhaseConfig phases;
};

}  // namespace

SolveResult maximize_sum_rate(const Scenario& scenario, const ChannelRealization& channels,
                              SchemeId scheme, std::uint64_t solver_seed) {
    const SimParams& params = scenario.params;
    const int C = scenario.num_cellular();
    const int D = scenario.num_d2d();

    const ChannelRealization* ch = &channels;
    ChannelRealization zeroed;
    if (scheme == SchemeId::kNonRis) {
        zeroed = channels;
        zeroed.zero_reflections();
        ch = &zeroed;
    }

    const bool run_coalition = scheme != SchemeId::kNonCg && scheme != SchemeId::kFmm;
    const bool run_power = scheme != SchemeId::kMp;
    const bool run_phase = scheme != SchemeId::kRp;

    // Mode assignment: random initializer for the outer loop; Fmm pins the
    // mm-wave coalition. With C = 0 there is only one coalition and no draw.
    Partition partition = Partition::all_mmwave(C, D);
    if (scheme != SchemeId::kFmm && C > 0) {
        auto mode_rng = make_rng(solver_seed, RngStream::kModeInit);
        std::uniform_int_distribution<int> pick(0, C);
        for (int& c : partition.coalition_of) c = pick(mode_rng);
    }

    PowerVector power = PowerVector::band_max(scenario, partition);

    auto phase_rng = make_rng(solver_seed, RngStream::kPhaseInit);
    PhaseConfig phases = random_phases(scenario, assign_panels(scenario), phase_rng);
    EffectiveGains gains = compose_gains(params, *ch, phases);
    if (scheme == SchemeId::kRp) {
        // Feasible random draw: redraw up to 100 times, else keep the best
        // draw by sum rate. Frozen afterwards.
        PhaseConfig best = phases;
        double best_rate = system_sum_rate(scenario, partition, power, gains, *ch);
        bool found = sinr_feasible(scenario, partition, power, gains, *ch);
        for (int attempt = 1; attempt < 100 && !found; ++attempt) {
            phases = random_phases(scenario, phases.assist, phase_rng);
            gains = compose_gains(params, *ch, phases);
            if (sinr_feasible(scenario, partition, power, gains, *ch)) {
                found = true;
                best = phases;
                break;
            }
            const double rate = system_sum_rate(scenario, partition, power, gains, *ch);
            if (rate > best_rate) {
                best_rate = rate;
                best = phases;
            }
        }
        phases = best;
        gains = compose_gains(params, *ch, phases);
    }

    auto coalition_rng = make_rng(solver_seed, RngStream::kCoalition);

    SolveResult result;
    double rate = system_sum_rate(scenario, partition, power, gains, *ch);
    result.rate_trace.push_back(rate);

    State best{partition, power, phases};
    double best_rate = rate;

    int rho = 0;
    result.termination = "max_iterations";
    for (; rho < params.max_outer_iterations; ++rho) {
        if (run_coalition) {
            partition = form_coalitions(scenario, partition, power, gains, *ch, coalition_rng);
        }
        if (scheme == SchemeId::kMp) {
            power = PowerVector::band_max(scenario, partition);
        }
        if (run_power) {
            for (int c = 0; c <= C; ++c) {
                const CoalitionPowerProblem problem =
                    build_power_problem(scenario, partition, gains, *ch, c);
                if (problem.size() == 0) continue;
                std::vector<double> initial(problem.link_ids.size());
                for (std::size_t k = 0; k < problem.link_ids.size(); ++k) {
                    initial[k] = power.p[static_cast<std::size_t>(problem.link_ids[k])];
                }
                const PowerSolveResult solved = allocate_power(problem, initial, params);

                // Coalitions occupy disjoint bands, so each solution can be
                // judged by its own outage-weighted contribution. Keep the
                // incumbent power unless the solve improves the contribution
                // without adding SINR violations; a solution that silences a
                // member to inflate the others' rates is an invalid state.
                double contrib_before = 0.0;
                for (int id : problem.link_ids) {
                    contrib_before +=
                        link_rate_contribution(scenario, partition, power, gains, *ch, id);
                }
                PowerVector candidate = power;
                for (std::size_t k = 0; k < problem.link_ids.size(); ++k) {
                    candidate.p[static_cast<std::size_t>(problem.link_ids[k])] = solved.p[k];
                }
                double contrib_after = 0.0;
                for (int id : problem.link_ids) {
                    contrib_after +=
                        link_rate_contribution(scenario, partition, candidate, gains, *ch, id);
                }
                const int violations_before = sinr_violation_count(
                    scenario, partition, power, gains, *ch, problem.link_ids);
                const int violations_after = sinr_violation_count(
                    scenario, partition, candidate, gains, *ch, problem.link_ids);
                if (contrib_after > contrib_before && violations_after <= violations_before)
                    power = candidate;
            }
        }
        if (run_phase) {
            phases = optimize_phases(scenario, *ch, partition, power, phases);
            gains = compose_gains(params, *ch, phases);
        }

        const double next_rate = system_sum_rate(scenario, partition, power, gains, *ch);
        result.rate_trace.push_back(next_rate);
        if (next_rate > best_rate) {
            best_rate = next_rate;
            best = {partition, power, phases};
        }
        if (std::abs(next_rate - rate) < params.eps_outer) {
            rate = next_rate;
            ++rho;
            result.termination = "converged";
            break;
        }
        rate = next_rate;
    }

    result.partition = std::move(best.partition);
    result.power = std::move(best.power);
    result.phases = std::move(best.phases);
    result.iterations = rho;
    const EffectiveGains best_gains = compose_gains(params, *ch, result.phases);
    result.sum_rate =
        system_sum_rate(scenario, result.partition, result.power, best_gains, *ch);
    result.feasible =
        sinr_feasible(scenario, result.partition, result.power, best_gains, *ch);
    return result;
}

}  // namespace hcn
