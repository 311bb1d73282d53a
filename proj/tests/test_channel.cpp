#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "hcn/channel.hpp"
#include "hcn/rng.hpp"
#include "hcn/units.hpp"

using namespace hcn;

namespace {

constexpr int kDraws = 100000;

}  // namespace

TEST_CASE("direct cellular second moment") {
    SimParams p;
    const Vec3 tx{0, 0, 0};
    const Vec3 rx{0, 10, 0};  // l = 10
    auto rng = make_rng(123, RngStream::kChannel);
    double acc = 0.0;
    for (int k = 0; k < kDraws; ++k) {
        acc += std::norm(sample_direct_cellular(tx, rx, false, false, p, rng));
    }
    const double g0 = p.device_gain_linear();
    const double target = g0 * g0 * std::pow(10.0, -2.0);
    CHECK(acc / kDraws == doctest::Approx(target).epsilon(0.02));
}

TEST_CASE("direct cellular unit identity and BS gain") {
    SimParams p;
    p.device_gain_dbi = 0.0;  // Gt = Gr = 1
    auto rng = make_rng(5, RngStream::kChannel);
    double acc = 0.0;
    for (int k = 0; k < kDraws; ++k) {
        acc += std::norm(sample_direct_cellular({0, 0, 0}, {1, 0, 0}, false, false, p, rng));
    }
    CHECK(acc / kDraws == doctest::Approx(1.0).epsilon(0.02));

    // BS endpoint switches that side's gain to Gb.
    auto rng2 = make_rng(6, RngStream::kChannel);
    double acc2 = 0.0;
    for (int k = 0; k < kDraws; ++k) {
        acc2 += std::norm(sample_direct_cellular({0, 0, 0}, {1, 0, 0}, false, true, p, rng2));
    }
    CHECK(acc2 / kDraws == doctest::Approx(p.bs_gain_linear()).epsilon(0.02));
}

TEST_CASE("direct mm-wave second moment equals the fading power") {
    SimParams p;
    const Vec3 tx{0, 0, 0};
    const Vec3 rx{0, 5, 0};
    const double scale = p.ref_gain_linear() * std::pow(5.0, -p.mmwave_los_exp);
    auto rng = make_rng(77, RngStream::kChannel);
    double acc = 0.0;
    for (int k = 0; k < kDraws; ++k) {
        acc += std::norm(sample_direct_mmwave(tx, rx, p, rng));
    }
    CHECK(acc / kDraws / scale == doctest::Approx(p.nakagami_omega).epsilon(0.02));
}

TEST_CASE("direct mm-wave distance-doubling ratio") {
    SimParams p;
    auto rng = make_rng(78, RngStream::kChannel);
    double near = 0.0, far = 0.0;
    for (int k = 0; k < kDraws; ++k) {
        near += std::norm(sample_direct_mmwave({0, 0, 0}, {0, 4, 0}, p, rng));
        far += std::norm(sample_direct_mmwave({0, 0, 0}, {0, 8, 0}, p, rng));
    }
    CHECK(far / near == doctest::Approx(std::pow(2.0, -2.5)).epsilon(0.03));
}

TEST_CASE("reflected mm-wave mixture second moment") {
    SimParams p;
    p.elements_per_side = 1;
    const RisPanel panel{0, {0.0, 25.0, 0.0}, 1};
    const Vec3 tx{0, 20, 0};
    const Vec3 rx{3, 29, 0};
    const auto paths = reflect_path_lengths(tx, rx, panel);
    const double prod = paths[0].tx_to_element * paths[0].element_to_rx;
    const double beta = p.rice_beta;
    const double b0 = p.ref_gain_linear();
    const double target = beta / (1.0 + beta) * b0 * std::pow(prod, -p.mmwave_los_exp) +
                          1.0 / (1.0 + beta) * b0 * std::pow(prod, -p.mmwave_nlos_exp);
    auto rng = make_rng(31, RngStream::kChannel);
    double acc = 0.0;
    for (int k = 0; k < kDraws; ++k) {
        acc += std::norm(sample_reflected_mmwave(tx, rx, panel, p, rng)[0]);
    }
    CHECK(acc / kDraws == doctest::Approx(target).epsilon(0.02));
}

TEST_CASE("reflected mm-wave pure-LoS limit has deterministic magnitude") {
    SimParams p;
    p.rice_beta = std::numeric_limits<double>::infinity();
    const RisPanel panel{0, {0.0, 25.0, 0.0}, 2};
    const Vec3 tx{0, 20, 0};
    const Vec3 rx{3, 29, 0};
    const auto paths = reflect_path_lengths(tx, rx, panel);
    auto rng = make_rng(31, RngStream::kChannel);
    const auto grid = sample_reflected_mmwave(tx, rx, panel, p, rng);
    REQUIRE(grid.size() == 4);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double prod = paths[k].tx_to_element * paths[k].element_to_rx;
        const double mag = std::sqrt(p.ref_gain_linear() * std::pow(prod, -p.mmwave_los_exp));
        CHECK(std::abs(grid[k]) == doctest::Approx(mag).epsilon(1e-12));
    }
}

TEST_CASE("reflected mm-wave grid shape") {
    SimParams p;
    const RisPanel panel{0, {0.0, 25.0, 0.0}, 4};
    auto rng = make_rng(1, RngStream::kChannel);
    CHECK(sample_reflected_mmwave({0, 0, 0}, {10, 10, 0}, panel, p, rng).size() == 16);
}

TEST_CASE("reflected cellular second moment and zero-coefficient case") {
    SimParams p;
    const RisPanel panel{0, {0.0, 25.0, 0.0}, 1};
    const Vec3 tx{0, 20, 0};
    const Vec3 rx{3, 29, 0};
    const auto paths = reflect_path_lengths(tx, rx, panel);
    const double total = paths[0].tx_to_element + paths[0].element_to_rx;
    const double g0 = p.device_gain_linear();
    const double target = p.refl_coeff_cellular * g0 * g0 * std::pow(total, -2.0);
    auto rng = make_rng(99, RngStream::kChannel);
    double acc = 0.0;
    for (int k = 0; k < kDraws; ++k) {
        acc += std::norm(sample_reflected_cellular(tx, rx, false, false, panel, p, rng)[0]);
    }
    CHECK(acc / kDraws == doctest::Approx(target).epsilon(0.02));

    p.refl_coeff_cellular = 0.0;
    auto rng2 = make_rng(99, RngStream::kChannel);
    for (const Complex& c : sample_reflected_cellular(tx, rx, false, false, panel, p, rng2)) {
        CHECK(std::abs(c) == 0.0);
    }
}

TEST_CASE("reflected cellular shares one fading factor across the panel") {
    SimParams p;
    const RisPanel panel{0, {0.0, 25.0, 0.0}, 3};
    const Vec3 tx{0, 20, 0};
    const Vec3 rx{3, 29, 0};
    const auto paths = reflect_path_lengths(tx, rx, panel);
    auto rng = make_rng(4, RngStream::kChannel);
    const auto grid = sample_reflected_cellular(tx, rx, false, false, panel, p, rng);
    const double g0 = p.device_gain_linear();
    // Dividing out the deterministic per-element coefficient leaves the same
    // complex factor everywhere.
    const Complex h0 = grid[0] / std::sqrt(p.refl_coeff_cellular * g0 * g0 *
                                           std::pow(paths[0].tx_to_element +
                                                        paths[0].element_to_rx,
                                                    -2.0));
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double coef = std::sqrt(p.refl_coeff_cellular * g0 * g0 *
                                      std::pow(paths[k].tx_to_element + paths[k].element_to_rx,
                                               -2.0));
        CHECK(std::abs(grid[k] / coef - h0) < 1e-12);
    }
}

TEST_CASE("sampler determinism and degenerate geometry errors") {
    SimParams p;
    auto a = make_rng(8, RngStream::kChannel);
    auto b = make_rng(8, RngStream::kChannel);
    CHECK(sample_direct_cellular({0, 0, 0}, {1, 1, 0}, false, false, p, a) ==
          sample_direct_cellular({0, 0, 0}, {1, 1, 0}, false, false, p, b));
    CHECK(sample_direct_mmwave({0, 0, 0}, {1, 1, 0}, p, a) ==
          sample_direct_mmwave({0, 0, 0}, {1, 1, 0}, p, b));

    CHECK_THROWS_AS((void)sample_direct_cellular({1, 1, 0}, {1, 1, 0}, false, false, p, a),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)sample_direct_mmwave({1, 1, 0}, {1, 1, 0}, p, a),
                    std::invalid_argument);
}

TEST_CASE("outage probability") {
    CHECK(outage_probability(0.0, 0.01) == 0.0);
    CHECK(outage_probability(100.0, 0.01) == doctest::Approx(0.63212).epsilon(1e-4));
    double prev = 0.0;
    for (double d : {1.0, 10.0, 100.0, 1000.0}) {
        const double p = outage_probability(d, 0.01);
        CHECK(p > prev);
        CHECK(p < 1.0);
        prev = p;
    }
    CHECK(outage_probability(1e7, 0.01) == doctest::Approx(1.0));
    CHECK_THROWS_AS((void)outage_probability(-1.0, 0.01), std::invalid_argument);
}

TEST_CASE("draw_channels: tensor audit, noise, outage, determinism") {
    SimParams p;
    p.elements_per_side = 2;
    const Scenario s = generate_scenario(p, 2, 3, 21);
    const ChannelRealization ch = draw_channels(s, 21);
    const int L = s.num_links();
    const std::size_t l2 = static_cast<std::size_t>(L) * L;
    CHECK(ch.num_links == L);
    CHECK(ch.num_panels == 8);
    CHECK(ch.elements_per_side == 2);
    CHECK(ch.g_direct.size() == l2);
    CHECK(ch.h_direct.size() == l2);
    CHECK(ch.g_refl.size() == l2 * 8 * 4);
    CHECK(ch.h_refl.size() == l2 * 8 * 4);
    CHECK(ch.sigma2_cellular == doctest::Approx(p.sigma2_cellular_w()));
    CHECK(ch.sigma2_mmwave == doctest::Approx(p.sigma2_mmwave_w()));
    for (const Complex& c : ch.g_direct) CHECK(std::isfinite(std::abs(c)));
    for (const Complex& c : ch.h_direct) CHECK(std::isfinite(std::abs(c)));

    // Outage: positive for D2D links, zero for uplinks.
    for (const Link& link : s.links) {
        if (link.kind == LinkKind::kD2d) {
            const double d = s.link_distance(link.id);
            CHECK(ch.p_out[static_cast<std::size_t>(link.id)] ==
                  doctest::Approx(1.0 - std::exp(-0.01 * d)));
        } else {
            CHECK(ch.p_out[static_cast<std::size_t>(link.id)] == 0.0);
        }
    }

    const ChannelRealization ch2 = draw_channels(s, 21);
    CHECK(ch.g_direct == ch2.g_direct);
    CHECK(ch.h_direct == ch2.h_direct);
    CHECK(ch.g_refl == ch2.g_refl);
    CHECK(ch.h_refl == ch2.h_refl);

    const ChannelRealization ch3 = draw_channels(s, 22);
    CHECK(ch.g_direct != ch3.g_direct);
}

TEST_CASE("zero_reflections clears both reflected tensors") {
    SimParams p;
    p.elements_per_side = 2;
    const Scenario s = generate_scenario(p, 1, 1, 9);
    ChannelRealization ch = draw_channels(s, 9);
    ch.zero_reflections();
    for (const Complex& c : ch.g_refl) CHECK(std::abs(c) == 0.0);
    for (const Complex& c : ch.h_refl) CHECK(std::abs(c) == 0.0);
    // Direct coefficients are untouched.
    bool any_nonzero = false;
    for (const Complex& c : ch.g_direct) any_nonzero = any_nonzero || std::abs(c) > 0.0;
    CHECK(any_nonzero);
}
