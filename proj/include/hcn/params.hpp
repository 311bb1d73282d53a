#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "hcn/units.hpp"

namespace hcn {

enum class Codebook : std::uint8_t {
    kPaper,    // theta = 2*pi*m / (2^e - 1); endpoints 0 and 2*pi coincide
    kUniform,  // theta = 2*pi*m / 2^e
};

enum class DualUpdate : std::uint8_t {
    kPaper,   // lambda <- (lambda - mu * (dL/dlambda)^+)^+
    kAscent,  // lambda <- (lambda + mu * violation)^+
};

// Global simulation parameters. Defaults reproduce the reference operating
// point: a 22 MHz cellular uplink band plus a 2160 MHz mm-wave band shared
// by D2D pairs, assisted by 8 RIS panels of N x N discrete-phase elements.
struct SimParams {
    double bw_mmwave_hz = 2160e6;           // W_m
    double bw_cellular_hz = 22e6;           // W_c
    double noise_mmwave_dbm_mhz = -134.0;   // N0m
    double noise_cellular_dbm_mhz = -174.0; // N0c
    double pmax_mmwave_dbm = 23.0;          // P_m
    double pmax_cellular_dbm = 20.0;        // P_c
    double cellular_pathloss_exp = 2.0;     // n
    double mmwave_los_exp = 2.5;            // alpha
    double mmwave_nlos_exp = 3.6;           // alpha'
    double ref_gain_db = -61.3849;          // beta0, gain at 1 m
    double device_gain_dbi = 0.5;           // G0
    double bs_gain_dbi = 14.0;              // Gb
    double sinr_min_db = 5.0;               // gamma_min
    double d2d_max_dist_m = 14.142135623730951;  // r = 10*sqrt(2)
    double obstacle_density = 0.01;         // beta1, 1/m
    double rice_beta = 4.0;                 // Rician factor (may be inf: pure LoS)
    double nakagami_m = 3.0;
    double nakagami_omega = 1.0 / 3.0;
    double refl_coeff_cellular = 1.0;       // alpha_refl_c
    double refl_coeff_mmwave = 0.8;         // alpha_refl_m
    int elements_per_side = 4;              // N
    int quant_bits = 3;                     // e
    int panel_count = 8;                    // M
    double eps_outer = 1e3;                 // bit/s
    double eps_inner = 1e3;                 // bit/s

    Codebook codebook = Codebook::kPaper;
    DualUpdate dual_update = DualUpdate::kPaper;
    // Restores the literal double application of the cellular reflection
    // coefficient (once inside the sampled coefficient, once in the gain
    // composition). Off by default: the coefficient is applied once.
    bool double_alpha_cellular = false;
    int max_outer_iterations = 50;
    int max_power_iterations = 500;

    double sigma2_cellular_w() const {
        return dbm_to_watt(noise_cellular_dbm_mhz) * (bw_cellular_hz / 1e6);
    }
    double sigma2_mmwave_w() const {
        return dbm_to_watt(noise_mmwave_dbm_mhz) * (bw_mmwave_hz / 1e6);
    }
    double pmax_cellular_w() const { return dbm_to_watt(pmax_cellular_dbm); }
    double pmax_mmwave_w() const { return dbm_to_watt(pmax_mmwave_dbm); }
    double sinr_min_linear() const { return db_to_linear(sinr_min_db); }
    double device_gain_linear() const { return db_to_linear(device_gain_dbi); }
    double bs_gain_linear() const { return db_to_linear(bs_gain_dbi); }
    double ref_gain_linear() const { return db_to_linear(ref_gain_db); }

    void validate() const {
        if (bw_mmwave_hz <= 0 || bw_cellular_hz <= 0)
            throw std::invalid_argument("bandwidths must be positive");
        if (cellular_pathloss_exp <= 0 || mmwave_los_exp <= 0 || mmwave_nlos_exp <= 0)
            throw std::invalid_argument("path-loss exponents must be positive");
        if (refl_coeff_cellular < 0 || refl_coeff_cellular > 1 ||
            refl_coeff_mmwave < 0 || refl_coeff_mmwave > 1)
            throw std::invalid_argument("reflection coefficients must lie in [0,1]");
        if (quant_bits < 1) throw std::invalid_argument("quant_bits must be >= 1");
        if (elements_per_side < 1) throw std::invalid_argument("elements_per_side must be >= 1");
        if (panel_count < 1) throw std::invalid_argument("panel_count must be >= 1");
    }
};

// JSON config I/O: any subset of the known keys (W_m, N0c, gamma_min, ...)
// overrides the corresponding default. Implemented in params.cpp.
SimParams params_from_json_text(const std::string& text);
SimParams params_from_json_file(const std::string& path);
std::string params_to_json_text(const SimParams& p);

std::string to_string(Codebook cb);
std::string to_string(DualUpdate du);

}  // namespace hcn
