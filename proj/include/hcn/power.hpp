#pragma once

#include <vector>

#include "hcn/rate.hpp"

namespace hcn {

// Per-coalition power subproblem in a self-contained form. Within one
// coalition every participant interferes with every other (members of a
// cellular coalition plus the owning uplink; mm-wave coalition members), so
// the squared-gain matrix is dense.
struct CoalitionPowerProblem {
    std::vector<int> link_ids;           // coalition members (+ owner last)
    std::vector<double> gain2;           // [i * K + j] = |G_{r_i, t_j}|^2
    double sigma2 = 0;                   // W
    double pmax = 0;                     // band cap, W
    double gamma_min = 0;                // linear
    double bandwidth_hz = 0;             // shared band

    int size() const { return static_cast<int>(link_ids.size()); }
    double a(int i, int j) const { return gain2[static_cast<std::size_t>(i) * size() + j]; }

    double sinr(const std::vector<double>& p, int i) const;
    // Sum of W*log2(1+sinr) over participants.
    double sum_rate(const std::vector<double>& p) const;
    // g_i = lg(interference + sigma2), phi_i = lg(signal + interference + sigma2).
    double g(const std::vector<double>& p, int i) const;
    double phi(const std::vector<double>& p, int i) const;
    double dc_objective(const std::vector<double>& p) const;  // sum g_i - phi_i
    bool feasible(const std::vector<double>& p, double lg_slack = 1e-9) const;
};

CoalitionPowerProblem build_power_problem(const Scenario& scenario, const Partition& partition,
                                          const EffectiveGains& gains,
                                          const ChannelRealization& channels, int coalition);

// First-order expansion of every g_i at an anchor; upper-bounds the DC
// objective on the box. Exposed for finite-difference checks.
struct LinearizedLagrangian {
    const CoalitionPowerProblem* problem = nullptr;
    std::vector<double> anchor;
    std::vector<double> g_at_anchor;
    std::vector<double> g_grad;  // [i * K + j] = dg_i/dp_j at the anchor

    static LinearizedLagrangian at(const CoalitionPowerProblem& problem,
                                   const std::vector<double>& anchor);

    // f_i^(n)(p) = g_i(anchor) + grad g_i . (p - anchor) - phi_i(p)
    double f_lin(const std::vector<double>& p, int i) const;
    double objective(const std::vector<double>& p) const;  // sum f_i^(n)

    double lagrangian(const std::vector<double>& p, const std::vector<double>& lambda) const;
    std::vector<double> grad_p(const std::vector<double>& p,
                               const std::vector<double>& lambda) const;
    std::vector<double> grad_lambda(const std::vector<double>& p) const;
};

struct PowerSolveResult {
    std::vector<double> p;              // per problem index
    bool feasible = false;
    int iterations = 0;
    std::vector<double> rate_trace;     // coalition sum rate per iterate
};

// Projected Lagrangian gradient descent on the successively linearized DC
// objective. Returns the best feasible iterate visited (by coalition sum
// rate), or the best iterate overall with feasible = false when no visited
// iterate meets gamma_min.
PowerSolveResult allocate_power(const CoalitionPowerProblem& problem,
                                const std::vector<double>& initial_p, const SimParams& params);

}  // namespace hcn
