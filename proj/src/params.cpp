#include "hcn/params.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hcn {

namespace {

using nlohmann::json;

void apply(const json& j, const char* key, double& field) {
    if (j.contains(key)) field = j.at(key).get<double>();
}
void apply(const json& j, const char* key, int& field) {
    if (j.contains(key)) field = j.at(key).get<int>();
}
void apply(const json& j, const char* key, bool& field) {
    if (j.contains(key)) field = j.at(key).get<bool>();
}

}  // namespace

std::string to_string(Codebook cb) { return cb == Codebook::kPaper ? "paper" : "uniform"; }
std::string to_string(DualUpdate du) { return du == DualUpdate::kPaper ? "paper" : "ascent"; }

SimParams params_from_json_text(const std::string& text) {
    const json j = json::parse(text);
    SimParams p;
    apply(j, "W_m", p.bw_mmwave_hz);
    apply(j, "W_c", p.bw_cellular_hz);
    apply(j, "N0m", p.noise_mmwave_dbm_mhz);
    apply(j, "N0c", p.noise_cellular_dbm_mhz);
    apply(j, "P_m", p.pmax_mmwave_dbm);
    apply(j, "P_c", p.pmax_cellular_dbm);
    apply(j, "n", p.cellular_pathloss_exp);
    apply(j, "alpha_los", p.mmwave_los_exp);
    apply(j, "alpha_nlos", p.mmwave_nlos_exp);
    apply(j, "beta0", p.ref_gain_db);
    apply(j, "G0", p.device_gain_dbi);
    apply(j, "Gb", p.bs_gain_dbi);
    apply(j, "gamma_min", p.sinr_min_db);
    apply(j, "r_max", p.d2d_max_dist_m);
    apply(j, "beta1", p.obstacle_density);
    apply(j, "rice_beta", p.rice_beta);
    apply(j, "nakagami_m", p.nakagami_m);
    apply(j, "nakagami_omega", p.nakagami_omega);
    apply(j, "alpha_refl_c", p.refl_coeff_cellular);
    apply(j, "alpha_refl_m", p.refl_coeff_mmwave);
    apply(j, "N", p.elements_per_side);
    apply(j, "e", p.quant_bits);
    apply(j, "M", p.panel_count);
    apply(j, "epsilon_outer", p.eps_outer);
    apply(j, "epsilon_inner", p.eps_inner);
    apply(j, "max_outer", p.max_outer_iterations);
    apply(j, "max_power_iters", p.max_power_iterations);
    apply(j, "double_alpha_cellular", p.double_alpha_cellular);
    if (j.contains("codebook")) {
        const auto s = j.at("codebook").get<std::string>();
        if (s == "paper") p.codebook = Codebook::kPaper;
        else if (s == "uniform") p.codebook = Codebook::kUniform;
        else throw std::invalid_argument("codebook must be 'paper' or 'uniform'");
    }
    if (j.contains("dual_update")) {
        const auto s = j.at("dual_update").get<std::string>();
        if (s == "paper") p.dual_update = DualUpdate::kPaper;
        else if (s == "ascent") p.dual_update = DualUpdate::kAscent;
        else throw std::invalid_argument("dual_update must be 'paper' or 'ascent'");
    }
    p.validate();
    return p;
}

SimParams params_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open params file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return params_from_json_text(ss.str());
}

std::string params_to_json_text(const SimParams& p) {
    json j;
    j["W_m"] = p.bw_mmwave_hz;
    j["W_c"] = p.bw_cellular_hz;
    j["N0m"] = p.noise_mmwave_dbm_mhz;
    j["N0c"] = p.noise_cellular_dbm_mhz;
    j["P_m"] = p.pmax_mmwave_dbm;
    j["P_c"] = p.pmax_cellular_dbm;
    j["n"] = p.cellular_pathloss_exp;
    j["alpha_los"] = p.mmwave_los_exp;
    j["alpha_nlos"] = p.mmwave_nlos_exp;
    j["beta0"] = p.ref_gain_db;
    j["G0"] = p.device_gain_dbi;
    j["Gb"] = p.bs_gain_dbi;
    j["gamma_min"] = p.sinr_min_db;
    j["r_max"] = p.d2d_max_dist_m;
    j["beta1"] = p.obstacle_density;
    j["rice_beta"] = p.rice_beta;
    j["nakagami_m"] = p.nakagami_m;
    j["nakagami_omega"] = p.nakagami_omega;
    j["alpha_refl_c"] = p.refl_coeff_cellular;
    j["alpha_refl_m"] = p.refl_coeff_mmwave;
    j["N"] = p.elements_per_side;
    j["e"] = p.quant_bits;
    j["M"] = p.panel_count;
    j["epsilon_outer"] = p.eps_outer;
    j["epsilon_inner"] = p.eps_inner;
    j["max_outer"] = p.max_outer_iterations;
    j["max_power_iters"] = p.max_power_iterations;
    j["double_alpha_cellular"] = p.double_alpha_cellular;
    j["codebook"] = to_string(p.codebook);
    j["dual_update"] = to_string(p.dual_update);
    return j.dump(2);
}

}  // namespace hcn
