#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hcn/channel.hpp"
#include "hcn/scenario.hpp"

namespace hcn {

// Ascending codeword angles in radians; 2^e entries.
std::vector<double> phase_codebook(int quant_bits, Codebook codebook = Codebook::kPaper);

// e^{j*theta_k} for every codeword.
std::vector<Complex> codebook_phasors(int quant_bits, Codebook codebook = Codebook::kPaper);

// Discrete phase configuration: integer codeword indices per (panel, lz, ly)
// plus the link -> panel assist map. Indices make equality and serialization
// exact; radians are derived.
struct PhaseConfig {
    int quant_bits = 1;
    Codebook codebook = Codebook::kPaper;
    int num_panels = 0;
    int elements_per_side = 0;
    std::vector<int> index;   // [panel * N*N + lz * N + ly]
    std::vector<int> assist;  // per link id -> panel id

    static PhaseConfig zeros(int quant_bits, Codebook codebook, int num_panels,
                             int elements_per_side, std::vector<int> assist);

    std::size_t element_slot(int panel, int lz, int ly) const {
        const std::size_t n2 = static_cast<std::size_t>(elements_per_side) * elements_per_side;
        return static_cast<std::size_t>(panel) * n2 + static_cast<std::size_t>(lz) * elements_per_side + ly;
    }
    const int* panel_indices(int panel) const {
        return index.data() + element_slot(panel, 0, 0);
    }

    std::string to_json_text() const;
};

// Geometry-driven assist map: each link is served by the panel whose anchor is
// nearest to the midpoint of its tx-rx segment.
std::vector<int> assign_panels(const Scenario& scenario);

// direct + alpha * sum over elements of reflected * e^{j*theta}.
Complex effective_gain(Complex direct, std::span<const Complex> reflected,
                       std::span<const int> phase_indices,
                       std::span<const Complex> phasors, double alpha);

// Composed per-pair effective gains for both bands, using the panel assigned
// to each transmitter's link. The cellular reflection coefficient is already
// inside the sampled coefficients; it is applied a second time here only when
// params.double_alpha_cellular is set.
struct EffectiveGains {
    int num_links = 0;
    std::vector<Complex> cellular;  // [rx * L + tx]
    std::vector<Complex> mmwave;

    std::size_t at(int rx_link, int tx_link) const {
        return static_cast<std::size_t>(rx_link) * num_links + tx_link;
    }
};

EffectiveGains compose_gains(const SimParams& params, const ChannelRealization& channels,
                             const PhaseConfig& phases);

}  // namespace hcn
