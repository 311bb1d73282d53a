#include "hcn/rate.hpp"

#include <cmath>
#include <stdexcept>

namespace hcn {

std::vector<int> Partition::members(int coalition) const {
    std::vector<int> out;
    for (std::size_t d = 0; d < coalition_of.size(); ++d) {
        if (coalition_of[d] == coalition) out.push_back(static_cast<int>(d));
    }
    return out;
}

Partition Partition::all_mmwave(int num_cellular, int num_d2d) {
    Partition p;
    p.num_cellular = num_cellular;
    p.coalition_of.assign(static_cast<std::size_t>(num_d2d), num_cellular);
    return p;
}

Band link_band(const Scenario& scenario, const Partition& partition, int link_id) {
    const Link& link = scenario.links[static_cast<std::size_t>(link_id)];
    if (link.kind == LinkKind::kCellularUplink) return Band::kCellular;
    return partition.is_mmwave(link.index) ? Band::kMmwave : Band::kCellular;
}

double band_cap_w(const SimParams& params, Band band) {
    return band == Band::kCellular ? params.pmax_cellular_w() : params.pmax_mmwave_w();
}

double band_width_hz(const SimParams& params, Band band) {
    return band == Band::kCellular ? params.bw_cellular_hz : params.bw_mmwave_hz;
}

PowerVector PowerVector::band_max(const Scenario& scenario, const Partition& partition) {
    PowerVector pv;
    pv.p.resize(static_cast<std::size_t>(scenario.num_links()));
    for (const Link& link : scenario.links) {
        pv.p[static_cast<std::size_t>(link.id)] =
            band_cap_w(scenario.params, link_band(scenario, partition, link.id));
    }
    return pv;
}

std::vector<int> interference_set(const Scenario& scenario, const Partition& partition,
                                  int link_id) {
    const Link& link = scenario.links[static_cast<std::size_t>(link_id)];
    const int D = scenario.num_d2d();
    std::vector<int> out;
    if (link.kind == LinkKind::kCellularUplink) {
        // BS receiving user c: every D2D transmitter sharing c's uplink band.
        for (int d : partition.members(link.index)) out.push_back(d);
        return out;
    }
    const int coalition = partition.coalition_of[static_cast<std::size_t>(link.index)];
    if (coalition == partition.mmwave_coalition()) {
        for (int d : partition.members(coalition)) {
            if (d != link.index) out.push_back(d);
        }
    } else {
        for (int d : partition.members(coalition)) {
            if (d != link.index) out.push_back(d);
        }
        out.push_back(D + coalition);  // the owning cellular user interferes
    }
    return out;
}

double compute_sinr(const Scenario& scenario, const Partition& partition,
                    const PowerVector& power, const EffectiveGains& gains,
                    const ChannelRealization& channels, int link_id) {
    const Link& link = scenario.links[static_cast<std::size_t>(link_id)];
    if (link.kind == LinkKind::kD2d &&
        partition.coalition_of.size() != static_cast<std::size_t>(scenario.num_d2d()))
        throw std::invalid_argument("partition inconsistent with scenario");

    const Band band = link_band(scenario, partition, link_id);
    const auto& g = band == Band::kCellular ? gains.cellular : gains.mmwave;
    const double sigma2 =
        band == Band::kCellular ? channels.sigma2_cellular : channels.sigma2_mmwave;

    const double own = std::norm(g[gains.at(link_id, link_id)]);
    double denom = sigma2;
    for (int j : interference_set(scenario, partition, link_id)) {
        denom += std::norm(g[gains.at(link_id, j)]) * power.p[static_cast<std::size_t>(j)];
    }
    return own * power.p[static_cast<std::size_t>(link_id)] / denom;
}

double link_rate(const Scenario& scenario, const Partition& partition, double sinr, int link_id) {
    if (sinr < 0.0) throw std::invalid_argument("negative sinr");
    const Band band = link_band(scenario, partition, link_id);
    return band_width_hz(scenario.params, band) * std::log2(1.0 + sinr);
}

double link_rate_contribution(const Scenario& scenario, const Partition& partition,
                              const PowerVector& power, const EffectiveGains& gains,
                              const ChannelRealization& channels, int link_id) {
    const double sinr = compute_sinr(scenario, partition, power, gains, channels, link_id);
    double rate = link_rate(scenario, partition, sinr, link_id);
    const Link& link = scenario.links[static_cast<std::size_t>(link_id)];
    if (link.kind == LinkKind::kD2d && partition.is_mmwave(link.index)) {
        rate *= 1.0 - channels.p_out[static_cast<std::size_t>(link_id)];
    }
    return rate;
}

double system_sum_rate(const Scenario& scenario, const Partition& partition,
                       const PowerVector& power, const EffectiveGains& gains,
                       const ChannelRealization& channels) {
    double total = 0.0;
    for (const Link& link : scenario.links) {
        total += link_rate_contribution(scenario, partition, power, gains, channels, link.id);
    }
    return total;
}

double coalition_utility(const Scenario& scenario, const Partition& partition,
                         const PowerVector& power, const EffectiveGains& gains,
                         const ChannelRealization& channels, int coalition) {
    double total = 0.0;
    for (int d : partition.members(coalition)) {
        total += link_rate_contribution(scenario, partition, power, gains, channels, d);
    }
    if (coalition != partition.mmwave_coalition()) {
        const int uplink = scenario.num_d2d() + coalition;
        total += link_rate_contribution(scenario, partition, power, gains, channels, uplink);
    }
    return total;
}

bool sinr_feasible_links(const Scenario& scenario, const Partition& partition,
                         const PowerVector& power, const EffectiveGains& gains,
                         const ChannelRealization& channels, const std::vector<int>& link_ids) {
    const double gamma = scenario.params.sinr_min_linear();
    for (int id : link_ids) {
        if (compute_sinr(scenario, partition, power, gains, channels, id) < gamma) return false;
    }
    return true;
}

int sinr_violation_count(const Scenario& scenario, const Partition& partition,
                         const PowerVector& power, const EffectiveGains& gains,
                         const ChannelRealization& channels, const std::vector<int>& link_ids) {
    const double gamma = scenario.params.sinr_min_linear();
    int count = 0;
    for (int id : link_ids) {
        if (compute_sinr(scenario, partition, power, gains, channels, id) < gamma) ++count;
    }
    return count;
}

bool sinr_feasible(const Scenario& scenario, const Partition& partition,
                   const PowerVector& power, const EffectiveGains& gains,
                   const ChannelRealization& channels) {
    const double gamma = scenario.params.sinr_min_linear();
    for (const Link& link : scenario.links) {
        if (compute_sinr(scenario, partition, power, gains, channels, link.id) < gamma)
            return false;
    }
    return true;
}

}  // namespace hcn
