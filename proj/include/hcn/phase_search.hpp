#pragma once

#include "hcn/rate.hpp"

namespace hcn {

// Coordinate-descent sweeps over every panel and element, repeated until a
// full sweep changes nothing: each element's codeword is set to the admissible
// value maximizing the outage-weighted sum rate of all links whose SINR the
// panel touches, ties broken toward the incumbent and then the lowest
// codebook index. A codeword is admissible when it does not increase the
// number of gamma_min violations among those links, so an already-infeasible
// state is tuned rather than frozen. The global sum rate is non-decreasing
// across element updates and the result is exactly 1-opt.
PhaseConfig optimize_phases(const Scenario& scenario, const ChannelRealization& channels,
                            const Partition& partition, const PowerVector& power,
                            PhaseConfig incumbent);

}  // namespace hcn
