#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hcn/params.hpp"

namespace hcn {

using Vec3 = std::array<double, 3>;

double distance(const Vec3& a, const Vec3& b);

enum class NodeRole : std::uint8_t { kBs, kCellularUser, kD2dTx, kD2dRx };

struct Node {
    int id = 0;
    Vec3 position{0, 0, 0};
    NodeRole role = NodeRole::kBs;
};

// Element spacing along Y and Z within one panel (d_ye = d_ze).
inline constexpr double kElementSpacingM = 0.005;

struct RisPanel {
    int id = 0;
    Vec3 anchor{0, 0, 0};
    int elements_per_side = 4;

    Vec3 element_position(int lz, int ly) const {
        return {anchor[0], anchor[1] + ly * kElementSpacingM, anchor[2] + lz * kElementSpacingM};
    }
};

enum class LinkKind : std::uint8_t { kCellularUplink, kD2d };

// Links are ordered D2D first (ids 0..D-1), then cellular uplinks
// (ids D..D+C-1, receiver = BS). Cellular uplink D+c belongs to user c.
struct Link {
    int id = 0;
    LinkKind kind = LinkKind::kD2d;
    int index = 0;  // d2d pair index, or cellular user index
};

struct Scenario {
    SimParams params;
    Node bs;
    std::vector<Node> cellular_users;
    std::vector<std::pair<Node, Node>> d2d_pairs;  // (tx, rx)
    std::vector<RisPanel> panels;
    std::vector<Link> links;

    int num_d2d() const { return static_cast<int>(d2d_pairs.size()); }
    int num_cellular() const { return static_cast<int>(cellular_users.size()); }
    int num_links() const { return static_cast<int>(links.size()); }

    const Vec3& tx_position(int link_id) const;
    const Vec3& rx_position(int link_id) const;
    bool tx_is_bs(int /*link_id*/) const { return false; }  // uplink-only cell
    bool rx_is_bs(int link_id) const {
        return links[static_cast<std::size_t>(link_id)].kind == LinkKind::kCellularUplink;
    }
    double link_distance(int link_id) const {
        return distance(tx_position(link_id), rx_position(link_id));
    }
};

// Random deployment in the [0,100] x [0,200] rectangle at z = 0, BS at
// (50,100,0), 8 RIS panels on the fixed two-row layout. Deterministic for a
// given (params, C, D, seed). D2D receivers are drawn uniformly in the disc of
// radius r_max around their transmitter, resampled until inside the rectangle.
Scenario generate_scenario(const SimParams& params, int num_cellular, int num_d2d,
                           std::uint64_t seed);

// The fixed two-row panel layout used by generate_scenario, exposed so
// hand-built fixtures can reuse it.
std::vector<RisPanel> default_panel_layout(int elements_per_side);

struct ReflectPath {
    double tx_to_element;  // m
    double element_to_rx;  // m
};

// Per-element path lengths through one panel, row-major over (lz, ly).
std::vector<ReflectPath> reflect_path_lengths(const Vec3& tx, const Vec3& rx,
                                              const RisPanel& panel);

std::string scenario_to_json_text(const Scenario& s);

}  // namespace hcn
