#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "hcn/rate.hpp"

namespace hcn {

struct SwitchEvent {
    int d2d_index;
    int from_coalition;
    int to_coalition;
    double total_utility_after;
};

// True iff moving d2d_index from its coalition to `to_coalition` strictly
// increases the two involved coalitions' combined utility without adding any
// gamma_min violations among the links the move touches. Ties are rejected.
// The moving pair is evaluated at the target band's power cap.
bool prefers_switch(const Scenario& scenario, const Partition& partition,
                    const PowerVector& power, const EffectiveGains& gains,
                    const ChannelRealization& channels, int d2d_index, int to_coalition);

// Switch-operation dynamics: iterate pairs in ascending id, draw a random
// target coalition, apply the switch when preferred, stop after 10*D
// consecutive failures confirmed by an exhaustive stability audit. Returns a
// Nash-stable partition; also updates `power` in place (moved pairs restart at
// their new band cap).
Partition form_coalitions(const Scenario& scenario, Partition partition, PowerVector& power,
                          const EffectiveGains& gains, const ChannelRealization& channels,
                          std::mt19937_64& rng,
                          const std::function<void(const SwitchEvent&)>& on_switch = {});

}  // namespace hcn
