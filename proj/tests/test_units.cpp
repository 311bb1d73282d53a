#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hcn/params.hpp"
#include "hcn/units.hpp"

using namespace hcn;

TEST_CASE("dB to linear basics") {
    CHECK(db_to_linear(0.0) == doctest::Approx(1.0));
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0));
    CHECK(db_to_linear(-10.0) == doctest::Approx(0.1));
    CHECK(db_to_linear(3.0) == doctest::Approx(1.9952623149688795));
}

TEST_CASE("dB round trips") {
    for (double db : {-174.0, -61.3849, -10.0, 0.0, 0.5, 5.0, 14.0, 23.0}) {
        CHECK(linear_to_db(db_to_linear(db)) == doctest::Approx(db).epsilon(1e-12));
    }
    for (double lin : {1e-20, 1e-3, 0.5, 1.0, 3.1622776601683795, 100.0}) {
        CHECK(db_to_linear(linear_to_db(lin)) == doctest::Approx(lin).epsilon(1e-12));
    }
}

TEST_CASE("dBm to watt") {
    CHECK(dbm_to_watt(0.0) == doctest::Approx(1e-3));
    CHECK(dbm_to_watt(30.0) == doctest::Approx(1.0));
    CHECK(dbm_to_watt(20.0) == doctest::Approx(0.1));
    CHECK(dbm_to_watt(23.0) == doctest::Approx(0.19952623149688797));
    for (double dbm : {-174.0, -134.0, 0.0, 20.0, 23.0}) {
        CHECK(watt_to_dbm(dbm_to_watt(dbm)) == doctest::Approx(dbm).epsilon(1e-12));
    }
}

TEST_CASE("noise power arithmetic from defaults") {
    const SimParams p;
    // density (dBm per MHz) -> watt, times bandwidth in MHz.
    CHECK(p.sigma2_cellular_w() == doctest::Approx(dbm_to_watt(-174.0) * 22.0).epsilon(1e-12));
    CHECK(p.sigma2_mmwave_w() == doctest::Approx(dbm_to_watt(-134.0) * 2160.0).epsilon(1e-12));
    CHECK(p.sigma2_cellular_w() == doctest::Approx(8.759e-20).epsilon(1e-3));
    CHECK(p.sigma2_mmwave_w() == doctest::Approx(8.598e-14).epsilon(1e-3));
}

TEST_CASE("derived linear parameters from defaults") {
    const SimParams p;
    CHECK(p.pmax_cellular_w() == doctest::Approx(0.1));
    CHECK(p.pmax_mmwave_w() == doctest::Approx(0.19952623149688797));
    CHECK(p.sinr_min_linear() == doctest::Approx(3.1622776601683795));
    CHECK(p.bs_gain_linear() == doctest::Approx(db_to_linear(14.0)));
    CHECK(p.device_gain_linear() == doctest::Approx(db_to_linear(0.5)));
}
