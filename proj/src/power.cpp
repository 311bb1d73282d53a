#include "hcn/power.hpp"

#include <algorithm>
#include <cmath>

namespace hcn {

namespace {

constexpr double kLn10 = 2.302585092994046;

double lg(double x) { return std::log10(x); }

double clamp(double x, double lo, double hi) { return std::max(lo, std::min(hi, x)); }

}  // namespace

double CoalitionPowerProblem::sinr(const std::vector<double>& p, int i) const {
    const int K = size();
    double denom = sigma2;
    for (int j = 0; j < K; ++j) {
        if (j != i) denom += a(i, j) * p[static_cast<std::size_t>(j)];
    }
    return a(i, i) * p[static_cast<std::size_t>(i)] / denom;
}

double CoalitionPowerProblem::sum_rate(const std::vector<double>& p) const {
    double total = 0.0;
    for (int i = 0; i < size(); ++i) total += bandwidth_hz * std::log2(1.0 + sinr(p, i));
    return total;
}

double CoalitionPowerProblem::g(const std::vector<double>& p, int i) const {
    double interference = sigma2;
    for (int j = 0; j < size(); ++j) {
        if (j != i) interference += a(i, j) * p[static_cast<std::size_t>(j)];
    }
    return lg(interference);
}

double CoalitionPowerProblem::phi(const std::vector<double>& p, int i) const {
    double total = sigma2 + a(i, i) * p[static_cast<std::size_t>(i)];
    for (int j = 0; j < size(); ++j) {
        if (j != i) total += a(i, j) * p[static_cast<std::size_t>(j)];
    }
    return lg(total);
}

double CoalitionPowerProblem::dc_objective(const std::vector<double>& p) const {
    double total = 0.0;
    for (int i = 0; i < size(); ++i) total += g(p, i) - phi(p, i);
    return total;
}

bool CoalitionPowerProblem::feasible(const std::vector<double>& p, double lg_slack) const {
    // g_i - phi_i <= -lg(1 + gamma_min), i.e. sinr >= gamma_min, in lg domain.
    const double bound = -lg(1.0 + gamma_min);
    for (int i = 0; i < size(); ++i) {
        if (g(p, i) - phi(p, i) > bound + lg_slack) return false;
    }
    return true;
}

CoalitionPowerProblem build_power_problem(const Scenario& scenario, const Partition& partition,
                                          const EffectiveGains& gains,
                                          const ChannelRealization& channels, int coalition) {
    CoalitionPowerProblem prob;
    prob.link_ids = partition.members(coalition);
    const bool mmwave = coalition == partition.mmwave_coalition();
    if (!mmwave) prob.link_ids.push_back(scenario.num_d2d() + coalition);

    const Band band = mmwave ? Band::kMmwave : Band::kCellular;
    prob.sigma2 = mmwave ? channels.sigma2_mmwave : channels.sigma2_cellular;
    prob.pmax = band_cap_w(scenario.params, band);
    prob.gamma_min = scenario.params.sinr_min_linear();
    prob.bandwidth_hz = band_width_hz(scenario.params, band);

    const auto& g = mmwave ? gains.mmwave : gains.cellular;
    const int K = prob.size();
    prob.gain2.resize(static_cast<std::size_t>(K) * K);
    for (int i = 0; i < K; ++i) {
        for (int j = 0; j < K; ++j) {
            prob.gain2[static_cast<std::size_t>(i) * K + j] =
                std::norm(g[gains.at(prob.link_ids[static_cast<std::size_t>(i)],
                                     prob.link_ids[static_cast<std::size_t>(j)])]);
        }
    }
    return prob;
}

LinearizedLagrangian LinearizedLagrangian::at(const CoalitionPowerProblem& problem,
                                              const std::vector<double>& anchor) {
    LinearizedLagrangian lin;
    lin.problem = &problem;
    lin.anchor = anchor;
    const int K = problem.size();
    lin.g_at_anchor.resize(static_cast<std::size_t>(K));
    lin.g_grad.assign(static_cast<std::size_t>(K) * K, 0.0);
    for (int i = 0; i < K; ++i) {
        double interference = problem.sigma2;
        for (int j = 0; j < K; ++j) {
            if (j != i) interference += problem.a(i, j) * anchor[static_cast<std::size_t>(j)];
        }
        lin.g_at_anchor[static_cast<std::size_t>(i)] = lg(interference);
        for (int j = 0; j < K; ++j) {
            if (j != i) {
                lin.g_grad[static_cast<std::size_t>(i) * K + j] =
                    problem.a(i, j) / (kLn10 * interference);
            }
        }
    }
    return lin;
}

double LinearizedLagrangian::f_lin(const std::vector<double>& p, int i) const {
    const int K = problem->size();
    double value = g_at_anchor[static_cast<std::size_t>(i)];
    for (int j = 0; j < K; ++j) {
        value += g_grad[static_cast<std::size_t>(i) * K + j] *
                 (p[static_cast<std::size_t>(j)] - anchor[static_cast<std::size_t>(j)]);
    }
    return value - problem->phi(p, i);
}

double LinearizedLagrangian::objective(const std::vector<double>& p) const {
    double total = 0.0;
    for (int i = 0; i < problem->size(); ++i) total += f_lin(p, i);
    return total;
}

double LinearizedLagrangian::lagrangian(const std::vector<double>& p,
                                        const std::vector<double>& lambda) const {
    const double bound = lg(problem->gamma_min + 1.0);
    double total = 0.0;
    for (int i = 0; i < problem->size(); ++i) {
        const double f = f_lin(p, i);
        total += f + lambda[static_cast<std::size_t>(i)] * (f + bound);
    }
    return total;
}

std::vector<double> LinearizedLagrangian::grad_p(const std::vector<double>& p,
                                                 const std::vector<double>& lambda) const {
    const int K = problem->size();
    std::vector<double> grad(static_cast<std::size_t>(K), 0.0);
    for (int i = 0; i < K; ++i) {
        // d phi_i / dp_j evaluated at p.
        double total = problem->sigma2;
        for (int j = 0; j < K; ++j) total += problem->a(i, j) * p[static_cast<std::size_t>(j)];
        const double weight = 1.0 + lambda[static_cast<std::size_t>(i)];
        for (int j = 0; j < K; ++j) {
            const double dphi = problem->a(i, j) / (kLn10 * total);
            grad[static_cast<std::size_t>(j)] +=
                weight * (g_grad[static_cast<std::size_t>(i) * K + j] - dphi);
        }
    }
    return grad;
}

std::vector<double> LinearizedLagrangian::grad_lambda(const std::vector<double>& p) const {
    const double bound = lg(problem->gamma_min + 1.0);
    std::vector<double> grad(static_cast<std::size_t>(problem->size()));
    for (int i = 0; i < problem->size(); ++i) {
        grad[static_cast<std::size_t>(i)] = f_lin(p, i) + bound;
    }
    return grad;
}

PowerSolveResult allocate_power(const CoalitionPowerProblem& problem,
                                const std::vector<double>& initial_p, const SimParams& params) {
    const int K = problem.size();
    PowerSolveResult result;
    if (K == 0) return result;

    std::vector<double> p = initial_p;
    for (double& v : p) v = clamp(v, 0.0, problem.pmax);
    std::vector<double> lambda(static_cast<std::size_t>(K), 100.0);
    double delta = 50.0;
    double mu = 100.0;

    double best_rate = problem.sum_rate(p);
    bool best_feasible = problem.feasible(p);
    std::vector<double> best_p = p;
    result.rate_trace.push_back(best_rate);

    double prev_rate = best_rate;
    int n = 0;
    for (; n < params.max_power_iterations; ++n) {
        const auto lin = LinearizedLagrangian::at(problem, p);
        const auto gp = lin.grad_p(p, lambda);
        for (int j = 0; j < K; ++j) {
            p[static_cast<std::size_t>(j)] =
                clamp(p[static_cast<std::size_t>(j)] - delta * gp[static_cast<std::size_t>(j)],
                      0.0, problem.pmax);
        }
        if (delta > 1.0) delta /= 2.0;

        const auto gl = lin.grad_lambda(p);
        for (int i = 0; i < K; ++i) {
            auto& l = lambda[static_cast<std::size_t>(i)];
            const double v = gl[static_cast<std::size_t>(i)];
            if (params.dual_update == DualUpdate::kPaper) {
                l = std::max(0.0, l - mu * std::max(0.0, v));
            } else {
                l = std::max(0.0, l + mu * v);
            }
        }
        if (mu > 1.0) mu /= 2.0;

        const double rate = problem.sum_rate(p);
        result.rate_trace.push_back(rate);
        const bool feas = problem.feasible(p);
        if ((feas && !best_feasible) || (feas == best_feasible && rate > best_rate)) {
            best_rate = rate;
            best_feasible = feas;
            best_p = p;
        }
        if (std::abs(rate - prev_rate) < params.eps_inner) {
            ++n;
            break;
        }
        prev_rate = rate;
    }

    result.p = best_p;
    result.feasible = best_feasible;
    result.iterations = n;
    return result;
}

}  // namespace hcn
