#include "hcn/phase_search.hpp"

#include <cmath>
#include <limits>

namespace hcn {

namespace {

// Candidate-evaluation context for one panel: the set of tx columns routed
// through the panel and the links whose SINR depends on any of them.
struct PanelScope {
    std::vector<int> columns;
    std::vector<int> affected_links;
    std::vector<char> is_affected;
    std::vector<char> is_column;
};

}  // namespace

PhaseConfig optimize_phases(const Scenario& scenario, const ChannelRealization& channels,
                            const Partition& partition, const PowerVector& power,
                            PhaseConfig incumbent) {
    const int L = scenario.num_links();
    const int N = incumbent.elements_per_side;
    const std::size_t n2 = static_cast<std::size_t>(N) * N;
    const int num_codewords = 1 << incumbent.quant_bits;
    const auto phasors = codebook_phasors(incumbent.quant_bits, incumbent.codebook);
    const double gamma = scenario.params.sinr_min_linear();
    const double alpha_c = scenario.params.double_alpha_cellular
                               ? scenario.params.refl_coeff_cellular
                               : 1.0;
    const double alpha_m = scenario.params.refl_coeff_mmwave;

    // Reflected partial sums per (rx, tx) pair through the tx link's panel.
    auto recompute_pair = [&](int i, int j, Complex& sum_c, Complex& sum_m) {
        const int panel = incumbent.assist[static_cast<std::size_t>(j)];
        const Complex* gc = channels.g_refl_grid(i, j, panel);
        const Complex* gm = channels.h_refl_grid(i, j, panel);
        const int* idx = incumbent.panel_indices(panel);
        sum_c = Complex{0, 0};
        sum_m = Complex{0, 0};
        for (std::size_t k = 0; k < n2; ++k) {
            const Complex q = phasors[static_cast<std::size_t>(idx[k])];
            sum_c += gc[k] * q;
            sum_m += gm[k] * q;
        }
    };

    std::vector<Complex> sum_c(static_cast<std::size_t>(L) * L), sum_m(sum_c.size());
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
            recompute_pair(i, j, sum_c[static_cast<std::size_t>(i) * L + j],
                           sum_m[static_cast<std::size_t>(i) * L + j]);
        }
    }

    // Per-link static structure.
    std::vector<Band> band(static_cast<std::size_t>(L));
    std::vector<std::vector<int>> intf(static_cast<std::size_t>(L));
    std::vector<double> weight(static_cast<std::size_t>(L), 1.0);
    for (const Link& link : scenario.links) {
        band[static_cast<std::size_t>(link.id)] = link_band(scenario, partition, link.id);
        intf[static_cast<std::size_t>(link.id)] = interference_set(scenario, partition, link.id);
        if (link.kind == LinkKind::kD2d && partition.is_mmwave(link.index)) {
            weight[static_cast<std::size_t>(link.id)] =
                1.0 - channels.p_out[static_cast<std::size_t>(link.id)];
        }
    }

    // gain2(i, j): squared effective gain in link i's band, with an override
    // hook for candidate columns.
    auto pair_gain2 = [&](int i, int j, const Complex* cand_c, const Complex* cand_m,
                          const std::vector<char>& is_cand_col) -> double {
        const std::size_t at = static_cast<std::size_t>(i) * L + j;
        if (band[static_cast<std::size_t>(i)] == Band::kCellular) {
            const Complex s = is_cand_col[static_cast<std::size_t>(j)] ? cand_c[at] : sum_c[at];
            return std::norm(channels.g_direct[at] + alpha_c * s);
        }
        const Complex s = is_cand_col[static_cast<std::size_t>(j)] ? cand_m[at] : sum_m[at];
        return std::norm(channels.h_direct[at] + alpha_m * s);
    };

    const std::vector<char> no_candidate(static_cast<std::size_t>(L), 0);
    auto link_sinr = [&](int i, const Complex* cand_c, const Complex* cand_m,
                         const std::vector<char>& is_cand_col) -> double {
        const double own = pair_gain2(i, i, cand_c, cand_m, is_cand_col);
        double denom = band[static_cast<std::size_t>(i)] == Band::kCellular
                           ? channels.sigma2_cellular
                           : channels.sigma2_mmwave;
        for (int j : intf[static_cast<std::size_t>(i)]) {
            denom += pair_gain2(i, j, cand_c, cand_m, is_cand_col) *
                     power.p[static_cast<std::size_t>(j)];
        }
        return own * power.p[static_cast<std::size_t>(i)] / denom;
    };
    auto link_contribution = [&](int i, double sinr) {
        return weight[static_cast<std::size_t>(i)] *
               band_width_hz(scenario.params, band[static_cast<std::size_t>(i)]) *
               std::log2(1.0 + sinr);
    };

    // Incumbent per-link state, refreshed after every committed change.
    std::vector<double> cur_sinr(static_cast<std::size_t>(L));
    std::vector<double> cur_rate(static_cast<std::size_t>(L));
    auto refresh_link = [&](int i) {
        cur_sinr[static_cast<std::size_t>(i)] = link_sinr(i, nullptr, nullptr, no_candidate);
        cur_rate[static_cast<std::size_t>(i)] =
            link_contribution(i, cur_sinr[static_cast<std::size_t>(i)]);
    };
    for (int i = 0; i < L; ++i) refresh_link(i);

    // Panel scopes under the current partition.
    std::vector<PanelScope> scopes(incumbent.num_panels);
    for (int u = 0; u < incumbent.num_panels; ++u) {
        PanelScope& sc = scopes[static_cast<std::size_t>(u)];
        sc.is_column.assign(static_cast<std::size_t>(L), 0);
        sc.is_affected.assign(static_cast<std::size_t>(L), 0);
        for (int j = 0; j < L; ++j) {
            if (incumbent.assist[static_cast<std::size_t>(j)] == u) {
                sc.columns.push_back(j);
                sc.is_column[static_cast<std::size_t>(j)] = 1;
            }
        }
        for (int i = 0; i < L; ++i) {
            bool affected = sc.is_column[static_cast<std::size_t>(i)] != 0;
            for (int j : intf[static_cast<std::size_t>(i)]) {
                if (sc.is_column[static_cast<std::size_t>(j)]) affected = true;
            }
            if (affected) {
                sc.affected_links.push_back(i);
                sc.is_affected[static_cast<std::size_t>(i)] = 1;
            }
        }
    }

    std::vector<Complex> cand_c(sum_c.size()), cand_m(sum_m.size());

    // Coordinate-descent sweeps repeat until a full pass changes nothing, so
    // the returned configuration is exactly 1-opt. Each element update is
    // non-worsening, so the pass count is finite; the cap is a safety net.
    constexpr int kMaxSweeps = 64;
    bool changed = true;
    for (int pass = 0; pass < kMaxSweeps && changed; ++pass) {
        changed = false;
        for (int u = 0; u < incumbent.num_panels; ++u) {
            const PanelScope& sc = scopes[static_cast<std::size_t>(u)];
            if (sc.columns.empty()) continue;

            double unaffected_rate = 0.0;
            for (int i = 0; i < L; ++i) {
                if (!sc.is_affected[static_cast<std::size_t>(i)]) {
                    unaffected_rate += cur_rate[static_cast<std::size_t>(i)];
                }
            }

            for (int lz = 0; lz < N; ++lz) {
                for (int ly = 0; ly < N; ++ly) {
                    const std::size_t slot = incumbent.element_slot(u, lz, ly);
                    const std::size_t elem = static_cast<std::size_t>(lz) * N + ly;
                    const int cur_idx = incumbent.index[slot];

                    // A candidate codeword is admissible when it does not add SINR
                    // violations among the affected links; the incumbent count is
                    // the baseline, so an already-infeasible state stays workable.
                    int cur_violations = 0;
                    for (int i : sc.affected_links) {
                        if (cur_sinr[static_cast<std::size_t>(i)] < gamma) ++cur_violations;
                    }

                    int best_idx = cur_idx;
                    double best_obj = -std::numeric_limits<double>::infinity();
                    bool have_admissible = false;
                    // Evaluate the incumbent codeword first so ties resolve to it.
                    for (int step = 0; step < num_codewords; ++step) {
                        int k = step == 0 ? cur_idx : (step <= cur_idx ? step - 1 : step);
                        const Complex delta = phasors[static_cast<std::size_t>(k)] -
                                              phasors[static_cast<std::size_t>(cur_idx)];
                        for (int j : sc.columns) {
                            for (int i = 0; i < L; ++i) {
                                const std::size_t at = static_cast<std::size_t>(i) * L + j;
                                cand_c[at] = sum_c[at] + channels.g_refl_grid(i, j, u)[elem] * delta;
                                cand_m[at] = sum_m[at] + channels.h_refl_grid(i, j, u)[elem] * delta;
                            }
                        }
                        int violations = 0;
                        double obj = unaffected_rate;
                        for (int i : sc.affected_links) {
                            const double sinr =
                                link_sinr(i, cand_c.data(), cand_m.data(), sc.is_column);
                            if (sinr < gamma) ++violations;
                            obj += link_contribution(i, sinr);
                        }
                        if (violations <= cur_violations && (!have_admissible || obj > best_obj)) {
                            have_admissible = true;
                            best_obj = obj;
                            best_idx = k;
                        }
                    }

                    if (best_idx != cur_idx) {
                        incumbent.index[slot] = best_idx;
                        changed = true;
                        for (int j : sc.columns) {
                            for (int i = 0; i < L; ++i) {
                                const std::size_t at = static_cast<std::size_t>(i) * L + j;
                                recompute_pair(i, j, sum_c[at], sum_m[at]);
                            }
                        }
                        for (int i : sc.affected_links) refresh_link(i);
                    }
                }
            }
        }
    }
    return incumbent;
}

}  // namespace hcn
