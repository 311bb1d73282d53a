// Command-line front end: single-instance solves and Monte-Carlo sweeps.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hcn/harness.hpp"

namespace {

hcn::SimParams load_params(const std::string& path) {
    if (path.empty()) return hcn::SimParams{};
    return hcn::params_from_json_file(path);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "RIS-assisted heterogeneous-cell D2D sum-rate optimizer.\n"
        "Defaults: 22 MHz cellular band at -174 dBm/MHz noise and 20 dBm cap;\n"
        "2160 MHz mm-wave band at -134 dBm/MHz noise and 23 dBm cap; path-loss\n"
        "exponents n=2, LoS 2.5, NLoS 3.6; reference gain -61.3849 dB; antenna\n"
        "gains 0.5/14 dBi; SINR floor 5 dB; D2D range 10*sqrt(2) m; blockage\n"
        "density 0.01/m; Rician factor 4; Nakagami m=3, omega=1/3; reflection\n"
        "coefficients 1.0 (cellular) and 0.8 (mm-wave); 8 panels of 4x4\n"
        "elements with 3-bit phases."};
    app.require_subcommand(1);

    int cu = 5, d2d = 10, n = 4, e = 3, seeds = 20;
    std::string scheme_name = "PA";
    std::uint64_t seed = 1, master_seed = 1;
    std::string params_path, out_path, trace_dir, axis_name = "cellular_users", summary_path;
    std::vector<int> values;
    std::vector<std::string> scheme_names;
    bool parallel = false;

    CLI::App* solve = app.add_subcommand("solve", "Solve one random instance");
    solve->add_option("--cu", cu, "Number of cellular users")->capture_default_str();
    solve->add_option("--d2d", d2d, "Number of D2D pairs")->capture_default_str();
    solve->add_option("--n", n, "RIS elements per panel side")->capture_default_str();
    solve->add_option("--e", e, "Phase quantization bits")->capture_default_str();
    solve->add_option("--scheme", scheme_name, "Scheme: PA, MP, RP, NonRIS, NonCG, Fmm")
        ->capture_default_str();
    solve->add_option("--seed", seed, "Instance + solver seed")->capture_default_str();
    solve->add_option("--params", params_path, "JSON parameter overrides");
    solve->add_option("--out", out_path, "Result JSON path ('-' = stdout)");

    CLI::App* sweep = app.add_subcommand("sweep", "Monte-Carlo sweep over one axis");
    sweep->add_option("--axis", axis_name,
                      "Axis: cellular_users, d2d_pairs, ris_side_N, quant_bits_e")
        ->capture_default_str();
    sweep->add_option("--values", values, "Axis values")->required();
    sweep->add_option("--schemes", scheme_names, "Schemes (default: all)");
    sweep->add_option("--seeds", seeds, "Monte-Carlo repetitions per cell")->capture_default_str();
    sweep->add_option("--master-seed", master_seed, "Master seed")->capture_default_str();
    sweep->add_option("--params", params_path, "JSON parameter overrides");
    sweep->add_option("--out", out_path, "Records CSV path ('-' = stdout)");
    sweep->add_option("--summary", summary_path, "Summary CSV path (means, PA improvements)");
    sweep->add_option("--trace-dir", trace_dir, "Directory for per-run solve JSON traces");
    sweep->add_flag("--parallel", parallel, "Run sweep cells in parallel (OpenMP)");
    sweep->add_option("--cu", cu, "Fixed cellular users on non-CU axes")->capture_default_str();
    sweep->add_option("--d2d", d2d, "Fixed D2D pairs on non-D2D axes")->capture_default_str();
    sweep->add_option("--n", n, "Fixed elements per side on non-N axes")->capture_default_str();
    sweep->add_option("--e", e, "Fixed quantization bits on non-e axes")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed()) {
            hcn::SchemeId scheme;
            if (!hcn::parse_scheme(scheme_name, scheme)) {
                std::cerr << "unknown scheme: " << scheme_name << "\n";
                return 1;
            }
            hcn::SimParams params = load_params(params_path);
            params.elements_per_side = n;
            params.quant_bits = e;
            params.validate();
            const hcn::Scenario scenario = hcn::generate_scenario(params, cu, d2d, seed);
            const hcn::ChannelRealization channels = hcn::draw_channels(scenario, seed);
            const hcn::SolveResult result =
                hcn::maximize_sum_rate(scenario, channels, scheme, seed);
            write_text(out_path, result.to_json_text());
            return result.feasible ? 0 : 2;
        }

        hcn::ExperimentSpec spec;
        if (!hcn::parse_axis(axis_name, spec.axis)) {
            std::cerr << "unknown axis: " << axis_name << "\n";
            return 1;
        }
        spec.axis_values = values;
        spec.fixed_cellular = cu;
        spec.fixed_d2d = d2d;
        spec.fixed_n = n;
        spec.fixed_e = e;
        spec.seeds = seeds;
        spec.master_seed = master_seed;
        spec.base_params = load_params(params_path);
        spec.base_params.validate();
        if (!scheme_names.empty()) {
            spec.schemes.clear();
            for (const std::string& name : scheme_names) {
                hcn::SchemeId s;
                if (!hcn::parse_scheme(name, s)) {
                    std::cerr << "unknown scheme: " << name << "\n";
                    return 1;
                }
                spec.schemes.push_back(s);
            }
        }
        if (!trace_dir.empty()) std::filesystem::create_directories(trace_dir);

        const std::vector<hcn::ResultRecord> records = hcn::run_sweep(
            spec, parallel ? hcn::RunMode::kParallel : hcn::RunMode::kSerial, trace_dir);

        if (out_path.empty() || out_path == "-") {
            hcn::write_records_csv(std::cout, records);
        } else {
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot open output file: " + out_path);
            hcn::write_records_csv(out, records);
        }
        if (!summary_path.empty()) {
            std::ofstream out(summary_path);
            if (!out) throw std::runtime_error("cannot open output file: " + summary_path);
            hcn::write_summary_csv(out, hcn::summarize(records));
        }
        for (const hcn::ResultRecord& r : records) {
            if (!r.feasible) return 2;
        }
        return 0;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
