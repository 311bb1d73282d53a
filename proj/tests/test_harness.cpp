#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hcn/harness.hpp"

using namespace hcn;

namespace {

ExperimentSpec tiny_spec() {
    ExperimentSpec spec;
    spec.axis = SweepAxis::kQuantBitsE;
    spec.axis_values = {2, 3};
    spec.fixed_cellular = 2;
    spec.fixed_d2d = 3;
    spec.fixed_n = 2;
    spec.fixed_e = 2;
    spec.schemes = {SchemeId::kPa, SchemeId::kMp};
    spec.seeds = 2;
    spec.master_seed = 9;
    return spec;
}

bool same_except_walltime(const ResultRecord& a, const ResultRecord& b) {
    return a.axis_value == b.axis_value && a.scheme == b.scheme && a.seed_index == b.seed_index &&
           a.sum_rate_bps == b.sum_rate_bps && a.iterations == b.iterations &&
           a.feasible == b.feasible;
}

}  // namespace

TEST_CASE("axis names round trip") {
    for (SweepAxis a : {SweepAxis::kCellularUsers, SweepAxis::kD2dPairs, SweepAxis::kRisSideN,
                        SweepAxis::kQuantBitsE}) {
        SweepAxis parsed{};
        CHECK(parse_axis(to_string(a), parsed));
        CHECK(parsed == a);
    }
    SweepAxis out{};
    CHECK_FALSE(parse_axis("bogus", out));
}

TEST_CASE("sweep cardinality and canonical ordering") {
    const ExperimentSpec spec = tiny_spec();
    const auto records = run_sweep(spec);
    REQUIRE(records.size() == 2u * 2u * 2u);  // axis x scheme x seed
    std::size_t k = 0;
    for (int axis : spec.axis_values) {
        for (SchemeId scheme : spec.schemes) {
            for (int seed = 0; seed < spec.seeds; ++seed) {
                CHECK(records[k].axis_value == axis);
                CHECK(records[k].scheme == scheme);
                CHECK(records[k].seed_index == seed);
                CHECK(records[k].sum_rate_bps > 0.0);
                ++k;
            }
        }
    }
}

TEST_CASE("serial and parallel sweeps agree, and reruns are identical") {
    const ExperimentSpec spec = tiny_spec();
    const auto serial = run_sweep(spec, RunMode::kSerial);
    const auto parallel = run_sweep(spec, RunMode::kParallel);
    const auto again = run_sweep(spec, RunMode::kSerial);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
        CHECK(same_except_walltime(serial[k], parallel[k]));
        CHECK(same_except_walltime(serial[k], again[k]));
    }
}

TEST_CASE("schemes share instances through the run seed") {
    // The same (master seed, repetition) pair must map every scheme onto the
    // same scenario and channels: check via run_one against a direct solve.
    ExperimentSpec spec = tiny_spec();
    const auto a = run_one(spec, 0, SchemeId::kPa, 1);
    const auto b = run_one(spec, 0, SchemeId::kPa, 1);
    CHECK(same_except_walltime(a, b));
}

TEST_CASE("records CSV round trip") {
    const ExperimentSpec spec = tiny_spec();
    const auto records = run_sweep(spec);
    std::ostringstream out;
    write_records_csv(out, records);
    const std::string text = out.str();
    CHECK(text.rfind("axis,scheme,seed,sum_rate_bps,iterations,feasible,wall_time_s\n", 0) == 0);
    std::istringstream in(text);
    const auto parsed = read_records_csv(in);
    REQUIRE(parsed.size() == records.size());
    for (std::size_t k = 0; k < records.size(); ++k) {
        CHECK(parsed[k].axis_value == records[k].axis_value);
        CHECK(parsed[k].scheme == records[k].scheme);
        CHECK(parsed[k].seed_index == records[k].seed_index);
        CHECK(parsed[k].sum_rate_bps == records[k].sum_rate_bps);  // 17-digit round trip
        CHECK(parsed[k].iterations == records[k].iterations);
        CHECK(parsed[k].feasible == records[k].feasible);
        CHECK(parsed[k].wall_time_s == records[k].wall_time_s);
    }
    std::istringstream empty("");
    CHECK_THROWS_AS((void)read_records_csv(empty), std::invalid_argument);
    std::istringstream bad("header\n1,bogus,0,1.0,1,1,0.0\n");
    CHECK_THROWS_AS((void)read_records_csv(bad), std::invalid_argument);
}

TEST_CASE("summarize: hand-built arithmetic") {
    std::vector<ResultRecord> records;
    for (int seed = 0; seed < 2; ++seed) {
        records.push_back({10, SchemeId::kPa, seed, 2e9, 1, true, 0.0});
        records.push_back({10, SchemeId::kMp, seed, 1e9, 1, true, 0.0});
        records.push_back({10, SchemeId::kRp, seed, 2e9, 1, true, 0.0});
    }
    records[0].sum_rate_bps = 2.2e9;  // PA: {2.2e9, 2e9}
    const Summary s = summarize(records);
    REQUIRE(s.rows.size() == 3);
    CHECK(s.rows[0].scheme == SchemeId::kPa);
    CHECK(s.rows[0].mean_sum_rate == doctest::Approx(2.1e9));
    // Standard error of {2.2e9, 2e9}: sd = 0.1414e9, /sqrt(2) = 0.1e9.
    CHECK(s.rows[0].stderr_sum_rate == doctest::Approx(1e8).epsilon(1e-9));
    CHECK(s.rows[1].mean_sum_rate == doctest::Approx(1e9));
    CHECK(s.rows[1].stderr_sum_rate == doctest::Approx(0.0));

    REQUIRE(s.improvements.size() == 2);
    CHECK(s.improvements[0].baseline == SchemeId::kMp);
    CHECK(s.improvements[0].improvement_pct == doctest::Approx(110.0));
    CHECK(s.improvements[1].baseline == SchemeId::kRp);
    CHECK(s.improvements[1].improvement_pct == doctest::Approx(5.0));

    CHECK_THROWS_AS((void)summarize({}), std::invalid_argument);
}

TEST_CASE("summary CSV layout") {
    std::vector<ResultRecord> records{{10, SchemeId::kPa, 0, 2e9, 1, true, 0.0},
                                      {10, SchemeId::kMp, 0, 1e9, 1, true, 0.0}};
    std::ostringstream out;
    write_summary_csv(out, summarize(records));
    const std::string text = out.str();
    CHECK(text.rfind("axis,scheme,mean_sum_rate_bps,stderr_sum_rate_bps\n", 0) == 0);
    CHECK(text.find("axis,baseline,pa_improvement_pct\n") != std::string::npos);
    CHECK(text.find("10,MP,100") != std::string::npos);
}

TEST_CASE("invalid specs are rejected") {
    ExperimentSpec spec = tiny_spec();
    spec.axis_values.clear();
    CHECK_THROWS_AS((void)run_sweep(spec), std::invalid_argument);
    spec = tiny_spec();
    spec.seeds = 0;
    CHECK_THROWS_AS((void)run_sweep(spec), std::invalid_argument);
}
