#pragma once

#include <vector>

#include "hcn/channel.hpp"
#include "hcn/ris.hpp"
#include "hcn/scenario.hpp"

namespace hcn {

enum class Band : std::uint8_t { kCellular, kMmwave };

// Coalition structure over D2D pairs: coalitions 0..C-1 are owned by the
// matching cellular user, coalition C is the shared mm-wave coalition.
struct Partition {
    int num_cellular = 0;
    std::vector<int> coalition_of;  // per d2d index, value in [0, C]

    int mmwave_coalition() const { return num_cellular; }
    int num_coalitions() const { return num_cellular + 1; }
    bool is_mmwave(int d2d_index) const {
        return coalition_of[static_cast<std::size_t>(d2d_index)] == num_cellular;
    }
    std::vector<int> members(int coalition) const;

    static Partition all_mmwave(int num_cellular, int num_d2d);
};

// Transmit power in watts per link id (length D + C).
struct PowerVector {
    std::vector<double> p;

    static PowerVector band_max(const Scenario& scenario, const Partition& partition);
};

Band link_band(const Scenario& scenario, const Partition& partition, int link_id);
double band_cap_w(const SimParams& params, Band band);
double band_width_hz(const SimParams& params, Band band);

// Transmitters whose power appears in the SINR denominator of link_id.
std::vector<int> interference_set(const Scenario& scenario, const Partition& partition,
                                  int link_id);

double compute_sinr(const Scenario& scenario, const Partition& partition,
                    const PowerVector& power, const EffectiveGains& gains,
                    const ChannelRealization& channels, int link_id);

// Shannon rate W * log2(1 + sinr) in bit/s for the link's current band.
double link_rate(const Scenario& scenario, const Partition& partition, double sinr, int link_id);

// The link's contribution to the system sum rate: its Shannon rate, scaled by
// (1 - P_out) when the link is a D2D pair operating in the mm-wave band.
double link_rate_contribution(const Scenario& scenario, const Partition& partition,
                              const PowerVector& power, const EffectiveGains& gains,
                              const ChannelRealization& channels, int link_id);

double system_sum_rate(const Scenario& scenario, const Partition& partition,
                       const PowerVector& power, const EffectiveGains& gains,
                       const ChannelRealization& channels);

// R(F_c): members' rates plus the owner's uplink rate for cellular coalitions;
// outage-weighted member rates for the mm-wave coalition.
double coalition_utility(const Scenario& scenario, const Partition& partition,
                         const PowerVector& power, const EffectiveGains& gains,
                         const ChannelRealization& channels, int coalition);

// Every link meets gamma_min. Shared by all three solvers.
bool sinr_feasible(const Scenario& scenario, const Partition& partition,
                   const PowerVector& power, const EffectiveGains& gains,
                   const ChannelRealization& channels);

// Same predicate restricted to a subset of link ids.
bool sinr_feasible_links(const Scenario& scenario, const Partition& partition,
                         const PowerVector& power, const EffectiveGains& gains,
                         const ChannelRealization& channels, const std::vector<int>& link_ids);

// Number of links in the subset whose SINR falls below gamma_min.
int sinr_violation_count(const Scenario& scenario, const Partition& partition,
                         const PowerVector& power, const EffectiveGains& gains,
                         const ChannelRealization& channels, const std::vector<int>& link_ids);

}  // namespace hcn
