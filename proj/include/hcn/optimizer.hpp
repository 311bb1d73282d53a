#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcn/coalition.hpp"
#include "hcn/phase_search.hpp"
#include "hcn/power.hpp"
#include "hcn/rate.hpp"

namespace hcn {

enum class SchemeId : std::uint8_t {
    kPa,      // full stack: coalition game + power allocation + phase search
    kMp,      // powers pinned at band max, no power allocation
    kRp,      // one random feasible phase draw, frozen; no phase search
    kNonRis,  // reflected channels zeroed
    kNonCg,   // uniform-random mode assignment, no coalition game
    kFmm,     // all D2D pinned to the mm-wave coalition
};

std::string to_string(SchemeId scheme);
bool parse_scheme(const std::string& name, SchemeId& out);
std::vector<SchemeId> all_schemes();

struct SolveResult {
    Partition partition;
    PowerVector power;
    PhaseConfig phases;
    double sum_rate = 0;  // bit/s, recomputed from the returned state
    int iterations = 0;
    std::vector<double> rate_trace;  // rate after each outer iteration (index 0 = initial)
    bool feasible = false;
    std::string termination;  // "converged" or "max_iterations"

    std::string to_json_text() const;
};

// Block-coordinate outer loop: coalition game, per-coalition power
// allocation, phase search, repeated until |R(rho+1) - R(rho)| < eps_outer or
// max_outer_iterations. Returns the best state visited. Scheme variants
// disable blocks per SchemeId.
SolveResult maximize_sum_rate(const Scenario& scenario, const ChannelRealization& channels,
                              SchemeId scheme, std::uint64_t solver_seed);

}  // namespace hcn
