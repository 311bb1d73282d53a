#include "hcn/ris.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace hcn {

std::vector<double> phase_codebook(int quant_bits, Codebook codebook) {
    if (quant_bits < 1) throw std::invalid_argument("quant_bits must be >= 1");
    const int count = 1 << quant_bits;
    const double denom = codebook == Codebook::kPaper ? static_cast<double>(count - 1)
                                                      : static_cast<double>(count);
    std::vector<double> angles(static_cast<std::size_t>(count));
    for (int m = 0; m < count; ++m) angles[static_cast<std::size_t>(m)] = 2.0 * M_PI * m / denom;
    return angles;
}

std::vector<Complex> codebook_phasors(int quant_bits, Codebook codebook) {
    const auto angles = phase_codebook(quant_bits, codebook);
    std::vector<Complex> phasors(angles.size());
    for (std::size_t k = 0; k < angles.size(); ++k) phasors[k] = std::polar(1.0, angles[k]);
    return phasors;
}

PhaseConfig PhaseConfig::zeros(int quant_bits, Codebook codebook, int num_panels,
                               int elements_per_side, std::vector<int> assist) {
    PhaseConfig cfg;
    cfg.quant_bits = quant_bits;
    cfg.codebook = codebook;
    cfg.num_panels = num_panels;
    cfg.elements_per_side = elements_per_side;
    cfg.index.assign(static_cast<std::size_t>(num_panels) * elements_per_side * elements_per_side,
                     0);
    cfg.assist = std::move(assist);
    return cfg;
}

std::string PhaseConfig::to_json_text() const {
    nlohmann::json j;
    j["e"] = quant_bits;
    j["codebook"] = to_string(codebook);
    j["num_panels"] = num_panels;
    j["elements_per_side"] = elements_per_side;
    j["assist"] = assist;
    j["index"] = index;
    return j.dump(2);
}

std::vector<int> assign_panels(const Scenario& scenario) {
    std::vector<int> assist(static_cast<std::size_t>(scenario.num_links()), 0);
    for (const Link& link : scenario.links) {
        const Vec3& tx = scenario.tx_position(link.id);
        const Vec3& rx = scenario.rx_position(link.id);
        const Vec3 mid{(tx[0] + rx[0]) / 2, (tx[1] + rx[1]) / 2, (tx[2] + rx[2]) / 2};
        int best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (const RisPanel& panel : scenario.panels) {
            const double d = distance(mid, panel.anchor);
            if (d < best_d) {
                best_d = d;
                best = panel.id;
            }
        }
        assist[static_cast<std::size_t>(link.id)] = best;
    }
    return assist;
}

Complex effective_gain(Complex direct, std::span<const Complex> reflected,
                       std::span<const int> phase_indices,
                       std::span<const Complex> phasors, double alpha) {
    if (reflected.size() != phase_indices.size())
        throw std::invalid_argument("reflected grid and phase grid differ in size");
    Complex sum{0, 0};
    for (std::size_t k = 0; k < reflected.size(); ++k) {
        sum += reflected[k] * phasors[static_cast<std::size_t>(phase_indices[k])];
    }
    return direct + alpha * sum;
}

EffectiveGains compose_gains(const SimParams& params, const ChannelRealization& channels,
                             const PhaseConfig& phases) {
    const int L = channels.num_links;
    const std::size_t n2 =
        static_cast<std::size_t>(channels.elements_per_side) * channels.elements_per_side;
    const auto phasors = codebook_phasors(phases.quant_bits, phases.codebook);

    // The cellular sampler already carries alpha_refl_c inside the coefficient
    // (sum-of-distances model); applying it here as well reproduces the
    // literal double application and is opt-in.
    const double alpha_c = params.double_alpha_cellular ? params.refl_coeff_cellular : 1.0;
    const double alpha_m = params.refl_coeff_mmwave;

    EffectiveGains gains;
    gains.num_links = L;
    gains.cellular.resize(static_cast<std::size_t>(L) * L);
    gains.mmwave.resize(static_cast<std::size_t>(L) * L);
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
            const int panel = phases.assist[static_cast<std::size_t>(j)];
            const std::span<const int> idx{phases.panel_indices(panel), n2};
            const std::size_t di = channels.direct_index(i, j);
            gains.cellular[di] = effective_gain(channels.g_direct[di],
                                                {channels.g_refl_grid(i, j, panel), n2}, idx,
                                                phasors, alpha_c);
            gains.mmwave[di] = effective_gain(channels.h_direct[di],
                                              {channels.h_refl_grid(i, j, panel), n2}, idx,
                                              phasors, alpha_m);
        }
    }
    return gains;
}

}  // namespace hcn
