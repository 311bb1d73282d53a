#include "hcn/scenario.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "json.hpp"

#include "hcn/rng.hpp"

namespace hcn {

double distance(const Vec3& a, const Vec3& b) {
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    const double dz = a[2] - b[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

namespace {

constexpr double kAreaX = 100.0;
constexpr double kAreaY = 200.0;
constexpr int kPlacementRetries = 10000;

bool inside_area(double x, double y) {
    return x >= 0.0 && x <= kAreaX && y >= 0.0 && y <= kAreaY;
}

}  // namespace

const Vec3& Scenario::tx_position(int link_id) const {
    const Link& l = links[static_cast<std::size_t>(link_id)];
    if (l.kind == LinkKind::kD2d) return d2d_pairs[static_cast<std::size_t>(l.index)].first.position;
    return cellular_users[static_cast<std::size_t>(l.index)].position;
}

const Vec3& Scenario::rx_position(int link_id) const {
    const Link& l = links[static_cast<std::size_t>(link_id)];
    if (l.kind == LinkKind::kD2d) return d2d_pairs[static_cast<std::size_t>(l.index)].second.position;
    return bs.position;
}

std::vector<RisPanel> default_panel_layout(int elements_per_side) {
    // Two parallel rows of four panels, first anchor (0,25,0), steps of 50 m.
    std::vector<RisPanel> panels;
    int id = 0;
    for (const double row_x : {0.0, 50.0}) {
        for (int m = 0; m < 4; ++m) {
            panels.push_back({id++, {row_x, 25.0 + 50.0 * m, 0.0}, elements_per_side});
        }
    }
    return panels;
}

Scenario generate_scenario(const SimParams& params, int num_cellular, int num_d2d,
                           std::uint64_t seed) {
    params.validate();
    if (num_cellular < 0) throw std::invalid_argument("num_cellular must be >= 0");
    if (num_d2d < 1) throw std::invalid_argument("num_d2d must be >= 1");

    Scenario s;
    s.params = params;
    s.bs = Node{0, {50.0, 100.0, 0.0}, NodeRole::kBs};

    auto rng = make_rng(seed, RngStream::kPlacement);
    std::uniform_real_distribution<double> ux(0.0, kAreaX);
    std::uniform_real_distribution<double> uy(0.0, kAreaY);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    int node_id = 1;
    for (int c = 0; c < num_cellular; ++c) {
        s.cellular_users.push_back({node_id++, {ux(rng), uy(rng), 0.0}, NodeRole::kCellularUser});
    }
    for (int d = 0; d < num_d2d; ++d) {
        const Vec3 tx{ux(rng), uy(rng), 0.0};
        // Receiver uniform in the disc of radius r_max around the transmitter,
        // resampled until it lands inside the deployment rectangle.
        Vec3 rx{};
        bool placed = false;
        for (int attempt = 0; attempt < kPlacementRetries; ++attempt) {
            const double r = params.d2d_max_dist_m * std::sqrt(unit(rng));
            const double phi = 2.0 * M_PI * unit(rng);
            rx = {tx[0] + r * std::cos(phi), tx[1] + r * std::sin(phi), 0.0};
            if (inside_area(rx[0], rx[1])) {
                placed = true;
                break;
            }
        }
        if (!placed) throw std::runtime_error("d2d receiver placement did not terminate");
        s.d2d_pairs.emplace_back(Node{node_id, tx, NodeRole::kD2dTx},
                                 Node{node_id + 1, rx, NodeRole::kD2dRx});
        node_id += 2;
    }

    s.panels = default_panel_layout(params.elements_per_side);

    for (int d = 0; d < num_d2d; ++d) s.links.push_back({d, LinkKind::kD2d, d});
    for (int c = 0; c < num_cellular; ++c)
        s.links.push_back({num_d2d + c, LinkKind::kCellularUplink, c});
    return s;
}

std::vector<ReflectPath> reflect_path_lengths(const Vec3& tx, const Vec3& rx,
                                              const RisPanel& panel) {
    const int n = panel.elements_per_side;
    std::vector<ReflectPath> grid;
    grid.reserve(static_cast<std::size_t>(n) * n);
    for (int lz = 0; lz < n; ++lz) {
        for (int ly = 0; ly < n; ++ly) {
            const Vec3 elem = panel.element_position(lz, ly);
            grid.push_back({distance(tx, elem), distance(elem, rx)});
        }
    }
    return grid;
}

std::string scenario_to_json_text(const Scenario& s) {
    nlohmann::json j;
    j["params"] = nlohmann::json::parse(params_to_json_text(s.params));
    j["bs"] = {{"id", s.bs.id}, {"position", s.bs.position}};
    for (const auto& u : s.cellular_users)
        j["cellular_users"].push_back({{"id", u.id}, {"position", u.position}});
    j["cellular_users"] = j.value("cellular_users", nlohmann::json::array());
    j["d2d_pairs"] = nlohmann::json::array();
    for (const auto& [tx, rx] : s.d2d_pairs)
        j["d2d_pairs"].push_back({{"tx_id", tx.id},
                                  {"tx_position", tx.position},
                                  {"rx_id", rx.id},
                                  {"rx_position", rx.position}});
    j["panels"] = nlohmann::json::array();
    for (const auto& p : s.panels)
        j["panels"].push_back({{"id", p.id},
                               {"anchor", p.anchor},
                               {"elements_per_side", p.elements_per_side}});
    return j.dump(2);
}

}  // namespace hcn
