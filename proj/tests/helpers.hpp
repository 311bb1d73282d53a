#pragma once

// Shared fixture builders for the test suites: hand-built scenarios with
// explicit geometry and hand-filled channel tensors, so oracle values can be
// computed independently of the library's samplers.

#include <complex>
#include <random>
#include <utility>
#include <vector>

#include "hcn/channel.hpp"
#include "hcn/rate.hpp"
#include "hcn/ris.hpp"
#include "hcn/scenario.hpp"

namespace hcn::testing {

// A scenario with explicit node positions. Positions only matter for
// geometry-dependent code (sampling, outage, panel assignment); tests that
// hand-fill channels can use arbitrary distinct positions.
inline Scenario make_manual_scenario(const SimParams& params,
                                     const std::vector<std::pair<Vec3, Vec3>>& d2d,
                                     const std::vector<Vec3>& cellular) {
    Scenario s;
    s.params = params;
    s.bs = Node{0, {50.0, 100.0, 0.0}, NodeRole::kBs};
    int node_id = 1;
    for (const Vec3& pos : cellular) {
        s.cellular_users.push_back({node_id++, pos, NodeRole::kCellularUser});
    }
    for (const auto& [tx, rx] : d2d) {
        s.d2d_pairs.emplace_back(Node{node_id, tx, NodeRole::kD2dTx},
                                 Node{node_id + 1, rx, NodeRole::kD2dRx});
        node_id += 2;
    }
    s.panels = default_panel_layout(params.elements_per_side);
    const int D = static_cast<int>(d2d.size());
    for (int d = 0; d < D; ++d) s.links.push_back({d, LinkKind::kD2d, d});
    for (int c = 0; c < static_cast<int>(cellular.size()); ++c)
        s.links.push_back({D + c, LinkKind::kCellularUplink, c});
    return s;
}

// An empty (all-zero) channel realization of the given shape, ready for tests
// to fill individual entries.
inline ChannelRealization make_blank_channels(int num_links, int num_panels,
                                              int elements_per_side, double sigma2_cellular,
                                              double sigma2_mmwave) {
    ChannelRealization ch;
    ch.num_links = num_links;
    ch.num_panels = num_panels;
    ch.elements_per_side = elements_per_side;
    const std::size_t l2 = static_cast<std::size_t>(num_links) * num_links;
    const std::size_t n2 = static_cast<std::size_t>(elements_per_side) * elements_per_side;
    ch.g_direct.assign(l2, Complex{0, 0});
    ch.h_direct.assign(l2, Complex{0, 0});
    ch.g_refl.assign(l2 * num_panels * n2, Complex{0, 0});
    ch.h_refl.assign(l2 * num_panels * n2, Complex{0, 0});
    ch.sigma2_cellular = sigma2_cellular;
    ch.sigma2_mmwave = sigma2_mmwave;
    ch.p_out.assign(static_cast<std::size_t>(num_links), 0.0);
    return ch;
}

inline Complex random_unit_complex(std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> n(0.0, scale);
    return {n(rng), n(rng)};
}

// Fill every direct and reflected entry with random complex values at the
// given scales.
inline void randomize_channels(ChannelRealization& ch, std::mt19937_64& rng,
                               double direct_scale = 1.0, double refl_scale = 0.3) {
    for (auto& v : ch.g_direct) v = random_unit_complex(rng, direct_scale);
    for (auto& v : ch.h_direct) v = random_unit_complex(rng, direct_scale);
    for (auto& v : ch.g_refl) v = random_unit_complex(rng, refl_scale);
    for (auto& v : ch.h_refl) v = random_unit_complex(rng, refl_scale);
}

}  // namespace hcn::testing
