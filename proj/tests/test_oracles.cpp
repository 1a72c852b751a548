#include <doctest.h>

#include <cmath>
#include <random>

#include "gmc/metrics.hpp"
#include "gmc/oracles.hpp"

using gmc::ChannelParams;
using gmc::ChannelTriad;
using gmc::coherent_state;
using gmc::fock_fidelity_oracle;
using gmc::GaussianState;
using gmc::make_entangled_scene;
using gmc::make_scene;
using gmc::propagate_full_scene;
using gmc::recommended_fock_cutoff;
using gmc::tmsv_state;

TEST_CASE("identity scene returns the input signal exactly") {
    const ChannelParams params(2, 1.0, 0.6, 3.0, true);
    const GaussianState in = coherent_state(1.3, -0.4);
    const GaussianState out = propagate_full_scene(params, make_scene(params, in));
    CHECK((out.mean - in.mean).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((out.cov - in.cov).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("scene propagation reproduces the effective triad at the anchor point") {
    const ChannelParams params(2, 0.6, 0.3, 3.0, true);
    const GaussianState out =
        propagate_full_scene(params, make_scene(params, coherent_state(0.0, 0.0)));
    CHECK(out.cov(0, 0) == doctest::Approx(1.059218182281980).epsilon(1e-12));
    CHECK(out.cov(1, 1) == doctest::Approx(out.cov(0, 0)).epsilon(1e-13));
    CHECK(std::abs(out.cov(0, 1)) < 1e-13);
}

TEST_CASE("scene propagation matches apply_triad on random draws") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int draw = 0; draw < 40; ++draw) {
        const int n = unit(rng) < 0.5 ? 2 : 4;
        const ChannelParams params(n, unit(rng), unit(rng), 3.0 * unit(rng),
                                   unit(rng) < 0.5);
        const GaussianState in = coherent_state(2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0);
        const GaussianState fast = gmc::apply_triad(in, gmc::effective_triad(params));
        const GaussianState slow = propagate_full_scene(params, make_scene(params, in));
        CHECK((fast.mean - slow.mean).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((fast.cov - slow.cov).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("entangled scene keeps the idler and scales the cross block") {
    const ChannelParams params(2, 0.6, 0.3, 1.0, true);
    const GaussianState pair = tmsv_state(0.6);
    const GaussianState out =
        propagate_full_scene(params, make_entangled_scene(params, pair));
    const double zeta = gmc::reduce(params).zeta_in;
    CHECK(out.modes() == 2);
    CHECK((out.cov.bottomRightCorner<2, 2>() - pair.cov.bottomRightCorner<2, 2>())
              .cwiseAbs()
              .maxCoeff() < 1e-13);
    CHECK((out.cov.topRightCorner<2, 2>() - zeta * pair.cov.topRightCorner<2, 2>())
              .cwiseAbs()
              .maxCoeff() < 1e-13);
}

TEST_CASE("scene mode registry bookkeeping") {
    const ChannelParams params(4, 0.5, 0.5, 1.0, true);
    const gmc::MultimodeGaussianScene scene = make_scene(params, coherent_state(1.0, 0.0));
    CHECK(scene.modes() == 9);
    CHECK(scene.signal_mode() == 0);
    CHECK(scene.aux_mode(0) == 1);
    CHECK(scene.env_mode(0) == 4);
    CHECK(scene.memory_mode() == 8);
    CHECK(scene.cov.rows() == 18);
    // environments are thermal, memory is vacuum
    CHECK(scene.cov(8, 8) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(scene.cov(16, 16) == doctest::Approx(0.5).epsilon(1e-15));

    const gmc::MultimodeGaussianScene with_idler =
        make_entangled_scene(params, tmsv_state(0.5));
    CHECK(with_idler.modes() == 10);
    CHECK(with_idler.idler_mode() == 9);

    CHECK_THROWS_AS(propagate_full_scene(ChannelParams(2, 0.5, 0.5, 1.0, true), scene),
                    std::invalid_argument);
}

TEST_CASE("fock oracle on closed-form cases") {
    SUBCASE("identity channel") {
        const double f = fock_fidelity_oracle({1.0, 0.0}, ChannelTriad::identity(), 40);
        CHECK(f == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("pure loss at |alpha|^2 = 8") {
        const ChannelTriad triad = ChannelTriad::isotropic(std::sqrt(0.6), 0.2);
        const std::complex<double> alpha(std::sqrt(8.0), 0.0);
        const double gaussian =
            gmc::gaussian_fidelity(coherent_state(alpha.real(), 0.0), triad).value;
        const double fock =
            fock_fidelity_oracle(alpha, triad, recommended_fock_cutoff(alpha, triad));
        CHECK(std::abs(gaussian - fock) < 1e-6);
    }
    SUBCASE("vacuum input against thermal noise matches the determinant form") {
        const ChannelTriad triad = ChannelTriad::isotropic(std::sqrt(0.6), 1.4);
        const double fock =
            fock_fidelity_oracle({0.0, 0.0}, triad, recommended_fock_cutoff(0.0, triad));
        const double det_only = 1.0 / (0.5 + 0.6 * 0.5 + 1.4);
        CHECK(std::abs(fock - det_only) < 1e-6);
    }
    SUBCASE("negative gain is a lossy parity flip") {
        const ChannelTriad triad = ChannelTriad::isotropic(-0.6, 0.5);
        const std::complex<double> alpha(1.2, -0.7);
        const double gaussian =
            gmc::gaussian_fidelity(coherent_state(1.2, -0.7), triad).value;
        const double fock =
            fock_fidelity_oracle(alpha, triad, recommended_fock_cutoff(alpha, triad));
        CHECK(std::abs(gaussian - fock) < 1e-6);
    }
}

TEST_CASE("assembled scenes are physical joint states") {
    const ChannelParams params(4, 0.5, 0.5, 2.0, true);
    const gmc::MultimodeGaussianScene plain = make_scene(params, coherent_state(1.0, -2.0));
    CHECK(GaussianState(plain.mean, plain.cov).is_physical(1e-10));
    const gmc::MultimodeGaussianScene entangled =
        make_entangled_scene(params, tmsv_state(0.8));
    CHECK(GaussianState(entangled.mean, entangled.cov).is_physical(1e-10));
}

TEST_CASE("fock oracle input guards") {
    const ChannelTriad triad = ChannelTriad::isotropic(0.8, 0.3);
    SUBCASE("tail mass check trips on a tiny cutoff") {
        CHECK_THROWS_AS(fock_fidelity_oracle({std::sqrt(8.0), 0.0}, triad, 8),
                        std::invalid_argument);
    }
    SUBCASE("amplifying triads rejected") {
        CHECK_THROWS_AS(fock_fidelity_oracle({1.0, 0.0}, ChannelTriad::isotropic(1.2, 1.0), 40),
                        std::invalid_argument);
    }
    SUBCASE("non-isotropic noise rejected") {
        ChannelTriad skew = triad;
        skew.y(0, 0) = 0.31;
        CHECK_THROWS_AS(fock_fidelity_oracle({1.0, 0.0}, skew, 40), std::invalid_argument);
    }
}
