#include "hcn/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "hcn/rng.hpp"

namespace hcn {

namespace {

Complex circular_gaussian(std::mt19937_64& rng) {
    // CN(0,1): unit-variance circularly symmetric complex normal.
    std::normal_distribution<double> n(0.0, M_SQRT1_2);
    const double re = n(rng);
    const double im = n(rng);
    return {re, im};
}

double uniform_phase(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    return u(rng);
}

double antenna_gain_linear(bool is_bs, const SimParams& params) {
    return is_bs ? params.bs_gain_linear() : params.device_gain_linear();
}

}  // namespace

void ChannelRealization::zero_reflections() {
    std::fill(g_refl.begin(), g_refl.end(), Complex{0, 0});
    std::fill(h_refl.begin(), h_refl.end(), Complex{0, 0});
}

Complex sample_direct_cellular(const Vec3& tx, const Vec3& rx, bool tx_is_bs, bool rx_is_bs,
                               const SimParams& params, std::mt19937_64& rng) {
    const double l = distance(tx, rx);
    if (l <= 0.0) throw std::invalid_argument("degenerate geometry: zero-length link");
    const double gt = antenna_gain_linear(tx_is_bs, params);
    const double gr = antenna_gain_linear(rx_is_bs, params);
    const double loss = std::pow(l, -params.cellular_pathloss_exp);
    return circular_gaussian(rng) * std::sqrt(gt * gr * loss);
}

Complex sample_direct_mmwave(const Vec3& tx, const Vec3& rx, const SimParams& params,
                             std::mt19937_64& rng) {
    const double d = distance(tx, rx);
    if (d <= 0.0) throw std::invalid_argument("degenerate geometry: zero-length link");
    // Nakagami-m amplitude: |h|^2 ~ Gamma(m, omega/m).
    std::gamma_distribution<double> gamma(params.nakagami_m,
                                          params.nakagami_omega / params.nakagami_m);
    const double amplitude = std::sqrt(gamma(rng));
    const double theta = uniform_phase(rng);
    const double scale = std::sqrt(params.ref_gain_linear() * std::pow(d, -params.mmwave_los_exp));
    return std::polar(amplitude * scale, theta);
}

std::vector<Complex> sample_reflected_mmwave(const Vec3& tx, const Vec3& rx,
                                             const RisPanel& panel, const SimParams& params,
                                             std::mt19937_64& rng) {
    const auto paths = reflect_path_lengths(tx, rx, panel);
    const double beta = params.rice_beta;
    const bool pure_los = std::isinf(beta);
    const double los_w = pure_los ? 1.0 : std::sqrt(beta / (1.0 + beta));
    const double nlos_w = pure_los ? 0.0 : std::sqrt(1.0 / (1.0 + beta));
    const double beta0 = params.ref_gain_linear();

    std::vector<Complex> grid(paths.size());
    for (std::size_t k = 0; k < paths.size(); ++k) {
        const double prod = paths[k].tx_to_element * paths[k].element_to_rx;
        if (prod <= 0.0) throw std::invalid_argument("zero reflect path length");
        const Complex los = std::polar(std::sqrt(beta0 * std::pow(prod, -params.mmwave_los_exp)),
                                       -uniform_phase(rng));
        const Complex nlos = circular_gaussian(rng) *
                             std::sqrt(beta0 * std::pow(prod, -params.mmwave_nlos_exp));
        grid[k] = los_w * los + nlos_w * nlos;
    }
    return grid;
}

std::vector<Complex> sample_reflected_cellular(const Vec3& tx, const Vec3& rx, bool tx_is_bs,
                                               bool rx_is_bs, const RisPanel& panel,
                                               const SimParams& params, std::mt19937_64& rng) {
    const auto paths = reflect_path_lengths(tx, rx, panel);
    const double gt = antenna_gain_linear(tx_is_bs, params);
    const double gr = antenna_gain_linear(rx_is_bs, params);
    // One channel-wide small-scale factor shared by all elements of the panel.
    const Complex h0 = circular_gaussian(rng);

    std::vector<Complex> grid(paths.size());
    for (std::size_t k = 0; k < paths.size(); ++k) {
        const double total = paths[k].tx_to_element + paths[k].element_to_rx;
        if (total <= 0.0) throw std::invalid_argument("zero reflect path length");
        grid[k] = h0 * std::sqrt(params.refl_coeff_cellular * gt * gr *
                                 std::pow(total, -params.cellular_pathloss_exp));
    }
    return grid;
}

double outage_probability(double distance_m, double beta1) {
    if (distance_m < 0.0) throw std::invalid_argument("negative distance");
    return 1.0 - std::exp(-beta1 * distance_m);
}

ChannelRealization draw_channels(const Scenario& scenario, std::uint64_t seed) {
    const int L = scenario.num_links();
    const int M = static_cast<int>(scenario.panels.size());
    const int N = scenario.params.elements_per_side;
    const std::size_t n2 = static_cast<std::size_t>(N) * N;

    ChannelRealization ch;
    ch.num_links = L;
    ch.num_panels = M;
    ch.elements_per_side = N;
    ch.g_direct.resize(static_cast<std::size_t>(L) * L);
    ch.h_direct.resize(static_cast<std::size_t>(L) * L);
    ch.g_refl.resize(static_cast<std::size_t>(L) * L * M * n2);
    ch.h_refl.resize(static_cast<std::size_t>(L) * L * M * n2);
    ch.sigma2_cellular = scenario.params.sigma2_cellular_w();
    ch.sigma2_mmwave = scenario.params.sigma2_mmwave_w();

    auto rng = make_rng(seed, RngStream::kChannel);
    for (int i = 0; i < L; ++i) {
        const Vec3& rx = scenario.rx_position(i);
        const bool rx_bs = scenario.rx_is_bs(i);
        for (int j = 0; j < L; ++j) {
            const Vec3& tx = scenario.tx_position(j);
            const std::size_t di = ch.direct_index(i, j);
            ch.g_direct[di] = sample_direct_cellular(tx, rx, false, rx_bs, scenario.params, rng);
            ch.h_direct[di] = sample_direct_mmwave(tx, rx, scenario.params, rng);
            for (int m = 0; m < M; ++m) {
                const auto g = sample_reflected_cellular(tx, rx, false, rx_bs,
                                                         scenario.panels[m], scenario.params, rng);
                const auto h = sample_reflected_mmwave(tx, rx, scenario.panels[m],
                                                       scenario.params, rng);
                std::copy(g.begin(), g.end(), ch.g_refl.begin() + ch.refl_base(i, j, m));
                std::copy(h.begin(), h.end(), ch.h_refl.begin() + ch.refl_base(i, j, m));
            }
        }
    }

    ch.p_out.resize(static_cast<std::size_t>(L), 0.0);
    for (const Link& link : scenario.links) {
        if (link.kind == LinkKind::kD2d) {
            ch.p_out[static_cast<std::size_t>(link.id)] =
                outage_probability(scenario.link_distance(link.id),
                                   scenario.params.obstacle_density);
        }
    }
    return ch;
}

}  // namespace hcn
