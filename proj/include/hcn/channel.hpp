#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "hcn/scenario.hpp"

namespace hcn {

using Complex = std::complex<double>;

// One Monte-Carlo draw of every direct and per-element reflected channel
// coefficient, both bands, for every ordered (receiver-of-link-i,
// transmitter-of-link-j) pair. L = D + C links; M panels; N x N elements.
struct ChannelRealization {
    int num_links = 0;
    int num_panels = 0;
    int elements_per_side = 0;

    // Direct coefficients, indexed [rx_link * L + tx_link].
    std::vector<Complex> g_direct;  // cellular band
    std::vector<Complex> h_direct;  // mm-wave band

    // Reflected coefficients, indexed
    // [((rx_link * L + tx_link) * M + panel) * N*N + (lz * N + ly)].
    std::vector<Complex> g_refl;
    std::vector<Complex> h_refl;

    double sigma2_cellular = 0;  // W
    double sigma2_mmwave = 0;    // W
    std::vector<double> p_out;   // per link; 0 for cellular uplinks

    std::size_t direct_index(int rx_link, int tx_link) const {
        return static_cast<std::size_t>(rx_link) * num_links + tx_link;
    }
    std::size_t refl_base(int rx_link, int tx_link, int panel) const {
        const std::size_t n2 = static_cast<std::size_t>(elements_per_side) * elements_per_side;
        return (direct_index(rx_link, tx_link) * num_panels + panel) * n2;
    }

    const Complex* g_refl_grid(int rx_link, int tx_link, int panel) const {
        return g_refl.data() + refl_base(rx_link, tx_link, panel);
    }
    const Complex* h_refl_grid(int rx_link, int tx_link, int panel) const {
        return h_refl.data() + refl_base(rx_link, tx_link, panel);
    }

    // Overwrites all reflected coefficients with zero (NonRIS operation).
    void zero_reflections();
};

ChannelRealization draw_channels(const Scenario& scenario, std::uint64_t seed);

// Individual samplers, exposed for statistical tests.

// Rayleigh direct channel: h0 * sqrt(Gt*Gr*l^-n).
Complex sample_direct_cellular(const Vec3& tx, const Vec3& rx, bool tx_is_bs, bool rx_is_bs,
                               const SimParams& params, std::mt19937_64& rng);

// Nakagami-amplitude direct mm-wave channel with uniform random phase:
// h_i * sqrt(beta0 * d^-alpha).
Complex sample_direct_mmwave(const Vec3& tx, const Vec3& rx, const SimParams& params,
                             std::mt19937_64& rng);

// Rician per-element reflected mm-wave grid over (lz, ly), far-field product
// path loss (D1*D2)^-alpha for LoS and (D1*D2)^-alpha' for NLoS.
std::vector<Complex> sample_reflected_mmwave(const Vec3& tx, const Vec3& rx,
                                             const RisPanel& panel, const SimParams& params,
                                             std::mt19937_64& rng);

// Rayleigh per-element reflected cellular grid; one shared small-scale factor
// h0 per (tx, rx, panel), sum-of-distances path loss (D1+D2)^-n, reflection
// coefficient applied here (not again in the gain composition).
std::vector<Complex> sample_reflected_cellular(const Vec3& tx, const Vec3& rx, bool tx_is_bs,
                                               bool rx_is_bs, const RisPanel& panel,
                                               const SimParams& params, std::mt19937_64& rng);

// P_out = 1 - exp(-beta1 * distance).
double outage_probability(double distance_m, double beta1);

}  // namespace hcn
