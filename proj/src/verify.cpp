#include "gmc/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "gmc/gaussian.hpp"
#include "gmc/memory_channel.hpp"
#include "gmc/metrics.hpp"
#include "gmc/oracles.hpp"

namespace gmc::verify {

namespace {

constexpr double kGridStep = 0.1;
const int kGridN[] = {2, 4, 6};

CoefficientSet default_reduce(const ChannelParams& params) {
    return reduce(params);
}

ModeLinearMap default_dilation(const ChannelParams& params) {
    return compose_full_dilation(params);
}

CheckResult pass(std::string name, std::string detail = {}) {
    return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

std::string describe(const ChannelParams& p) {
    std::ostringstream os;
    os << "N=" << p.uses << " eta=" << p.eta << " eps=" << p.eps << " T=" << p.thermal
       << " flips=" << (p.flips ? "on" : "off");
    return os.str();
}

ChannelParams random_params(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick_n(0, 2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> temp(0.0, 3.0);
    return ChannelParams(kGridN[pick_n(rng)], unit(rng), unit(rng), temp(rng),
                         unit(rng) < 0.5);
}

// random two-mode covariance S diag(nu1, nu1, nu2, nu2) S^T with S = exp(J H)
Eigen::MatrixXd random_physical_cov(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> entry(-0.6, 0.6);
    std::uniform_real_distribution<double> occupation(0.0, 2.0);
    Eigen::Matrix4d h;
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            h(i, j) = entry(rng);
            h(j, i) = h(i, j);
        }
    }
    const Eigen::Matrix4d generator = symplectic_form(2) * h;
    const Eigen::Matrix4d s = generator.exp();
    Eigen::Vector4d nu;
    const double nu1 = 0.5 + occupation(rng);
    const double nu2 = 0.5 + occupation(rng);
    nu << nu1, nu1, nu2, nu2;
    Eigen::Matrix4d cov = s * nu.asDiagonal() * s.transpose();
    return 0.5 * (cov + cov.transpose());
}

}  // namespace

CheckResult check_normalization(const ReduceFn& reduce_fn) {
    const ReduceFn& fn = reduce_fn ? reduce_fn : default_reduce;
    double worst = 0.0;
    std::string worst_case = "(no deviation)";
    for (int n : kGridN) {
        for (int ie = 0; ie <= 10; ++ie) {
            for (int im = 0; im <= 10; ++im) {
                for (bool flips : {true, false}) {
                    ChannelParams params(n, ie * kGridStep, im * kGridStep, 0.0, flips);
                    const double defect = std::abs(fn(params).norm_sq() - 1.0);
                    if (defect > worst) {
                        worst = defect;
                        worst_case = describe(params);
                    }
                }
            }
        }
    }
    std::ostringstream os;
    os << "max |sum zeta^2 - 1| = " << worst << " at " << worst_case;
    return worst < 1e-12 ? pass("normalization", os.str())
                         : fail("normalization", os.str());
}

CheckResult check_dilation_orthonormality(const DilationFn& dilation_fn) {
    const DilationFn& fn = dilation_fn ? dilation_fn : default_dilation;
    double worst = 0.0;
    std::string worst_case = "(no deviation)";
    for (int n : kGridN) {
        for (int ie = 0; ie <= 10; ++ie) {
            for (int im = 0; im <= 10; ++im) {
                const MemoryChannelSpec channel_spec(n, ie * kGridStep, im * kGridStep);
                const double channel_defect =
                    build_channel_coefficients(channel_spec).row_orthonormality_defect();
                double composed_defect = 0.0;
                for (bool flips : {true, false}) {
                    ChannelParams params(n, ie * kGridStep, im * kGridStep, 0.0, flips);
                    composed_defect =
                        std::max(composed_defect, fn(params).row_orthonormality_defect());
                }
                const double defect = std::max(channel_defect, composed_defect);
                if (defect > worst) {
                    worst = defect;
                    std::ostringstream os;
                    os << "N=" << n << " eta=" << ie * kGridStep << " eps=" << im * kGridStep;
                    worst_case = os.str();
                }
            }
        }
    }
    std::ostringstream os;
    os << "max |M M^T - I| = " << worst << " at " << worst_case;
    return worst < 1e-12 ? pass("dilation orthonormality", os.str())
                         : fail("dilation orthonormality", os.str());
}

CheckResult check_triad_oracle(unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    double worst = 0.0;
    std::string worst_case = "(no deviation)";
    for (int draw = 0; draw < 200; ++draw) {
        const ChannelParams params = random_params(rng);
        // displaced thermal input exercises both the mean and covariance paths
        const double occupation = unit(rng);
        const double mag = 3.0 * unit(rng);
        const double phase = angle(rng);
        GaussianState input = thermal_state(occupation, 1);
        input.mean(0) = mag * std::cos(phase);
        input.mean(1) = mag * std::sin(phase);

        const GaussianState fast = apply_triad(input, effective_triad(params));
        const GaussianState slow = propagate_full_scene(params, make_scene(params, input));
        const double defect =
            std::max((fast.mean - slow.mean).cwiseAbs().maxCoeff(),
                     (fast.cov - slow.cov).cwiseAbs().maxCoeff());
        if (defect > worst) {
            worst = defect;
            worst_case = describe(params);
        }
    }
    std::ostringstream os;
    os << "max moment deviation = " << worst << " at " << worst_case;
    return worst < 1e-12 ? pass("effective triad vs full-scene oracle", os.str())
                         : fail("effective triad vs full-scene oracle", os.str());
}

CheckResult check_fock_fidelity(unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    double worst = 0.0;
    std::string worst_case = "(no deviation)";
    for (int draw = 0; draw < 10; ++draw) {
        const ChannelParams params = random_params(rng);
        const double mag = std::sqrt(8.0 * unit(rng));
        const double phase = angle(rng);
        const std::complex<double> alpha(mag * std::cos(phase), mag * std::sin(phase));

        const ChannelTriad triad = effective_triad(params);
        const double gaussian =
            gaussian_fidelity(coherent_state(alpha.real(), alpha.imag()), triad).value;
        const double fock =
            fock_fidelity_oracle(alpha, triad, recommended_fock_cutoff(alpha, triad));
        const double defect = std::abs(gaussian - fock);
        if (defect > worst) {
            worst = defect;
            std::ostringstream os;
            os << describe(params) << " |alpha|^2=" << std::norm(alpha);
            worst_case = os.str();
        }
    }
    std::ostringstream os;
    os << "max |F_gaussian - F_fock| = " << worst << " at " << worst_case;
    return worst < 1e-6 ? pass("fidelity vs Fock-basis oracle", os.str())
                        : fail("fidelity vs Fock-basis oracle", os.str());
}

CheckResult check_entangled_cross_block(unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> squeeze(0.0, 0.9);
    double worst = 0.0;
    std::string worst_case = "(no deviation)";
    for (int draw = 0; draw < 100; ++draw) {
        const ChannelParams params = random_params(rng);
        const double mu = squeeze(rng);
        const GaussianState pair = tmsv_state(mu);
        const GaussianState out =
            propagate_full_scene(params, make_entangled_scene(params, pair));
        const double zeta = reduce(params).zeta_in;
        const Eigen::Matrix2d expected_cross = zeta * pair.cov.topRightCorner<2, 2>();
        const double cross_defect =
            (out.cov.topRightCorner<2, 2>() - expected_cross).cwiseAbs().maxCoeff();
        const double idler_defect =
            (out.cov.bottomRightCorner<2, 2>() - pair.cov.bottomRightCorner<2, 2>())
                .cwiseAbs()
                .maxCoeff();
        const double defect = std::max(cross_defect, idler_defect);
        if (defect > worst) {
            worst = defect;
            worst_case = describe(params);
        }
    }
    std::ostringstream os;
    os << "max |C' - zeta_in C| = " << worst << " at " << worst_case;
    return worst < 1e-12 ? pass("transmitted-half cross block", os.str())
                         : fail("transmitted-half cross block", os.str());
}

CheckResult check_ppt_dual_route(unsigned seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int draw = 0; draw < 1000; ++draw) {
        const GaussianState state(Eigen::VectorXd::Zero(4), random_physical_cov(rng));
        // recompute the spectral route here so the comparison does not rely
        // on the function's internal cross-assertion alone
        Eigen::Vector4d reflect(1.0, 1.0, 1.0, -1.0);
        const Eigen::MatrixXd v_tilde =
            reflect.asDiagonal() * state.cov * reflect.asDiagonal();
        Eigen::EigenSolver<Eigen::MatrixXd> solver(symplectic_form(2) * v_tilde, false);
        double spectral = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < 4; ++i) {
            spectral = std::min(spectral, std::abs(solver.eigenvalues()(i)));
        }
        double closed;
        try {
            closed = ppt_least_eigenvalue(state).d_minus;
        } catch (const std::exception& e) {
            return fail("PPT closed form vs spectrum", e.what());
        }
        worst = std::max(worst, std::abs(closed - spectral));
    }
    std::ostringstream os;
    os << "max route disagreement = " << worst << " over 1000 states";
    return worst < 1e-10 ? pass("PPT closed form vs spectrum", os.str())
                         : fail("PPT closed form vs spectrum", os.str());
}

CheckResult check_limit_cases() {
    std::ostringstream os;
    for (int n : kGridN) {
        for (bool flips : {true, false}) {
            // eta = 1: the scheme is the identity on the signal
            CoefficientSet ident = reduce(ChannelParams(n, 1.0, 0.7, 0.0, flips));
            if (std::abs(ident.zeta_in - 1.0) > 1e-12 ||
                ident.zeta_b.cwiseAbs().maxCoeff() > 1e-12 ||
                ident.zeta_e.cwiseAbs().maxCoeff() > 1e-12 ||
                std::abs(ident.zeta_m) > 1e-12) {
                os << "eta=1 reduction is not the identity at N=" << n;
                return fail("limit cases", os.str());
            }
            // eps = 0: memoryless collapse, flips immaterial
            CoefficientSet memoryless = reduce(ChannelParams(n, 0.37, 0.0, 0.0, flips));
            if (std::abs(memoryless.zeta_in - std::sqrt(0.37)) > 1e-12 ||
                memoryless.zeta_b.cwiseAbs().maxCoeff() > 1e-12 ||
                std::abs(memoryless.zeta_m) > 1e-12) {
                os << "eps=0 did not collapse to the memoryless channel at N=" << n;
                return fail("limit cases", os.str());
            }
        }
        // the dephasing map is the eta = 0 channel, entrywise
        for (double eps : {0.0, 0.3, 1.0}) {
            const Eigen::MatrixXd direct =
                build_channel_coefficients(MemoryChannelSpec(n, 0.0, eps)).coefficients();
            const Eigen::MatrixXd limit = dephasing_limit_coefficients(eps, n).coefficients();
            if ((direct - limit).cwiseAbs().maxCoeff() > 0.0) {
                os << "dephasing limit differs from the eta=0 channel at N=" << n
                   << " eps=" << eps;
                return fail("limit cases", os.str());
            }
        }
        // decoder inverts the encoder through an identity channel
        for (bool flips : {true, false}) {
            const SplitterSpec spec(n, flips);
            const ModeLinearMap round_trip = build_decoder(spec).compose(build_encoder(spec));
            Eigen::RowVectorXd signal_row = Eigen::RowVectorXd::Zero(n);
            signal_row(0) = 1.0;
            if ((round_trip.coefficients().row(0) - signal_row).cwiseAbs().maxCoeff() >
                1e-12) {
                os << "decoder(encoder) does not return the signal at N=" << n;
                return fail("limit cases", os.str());
            }
        }
    }
    return pass("limit cases", "eta=1, eps=0, eta=0 dephasing, round trip all exact");
}

CheckResult check_flip_advantage(const ReduceFn& reduce_fn) {
    const ReduceFn& fn = reduce_fn ? reduce_fn : default_reduce;
    for (int n : {2, 4}) {
        for (int ie = 1; ie <= 9; ++ie) {
            for (int im = 1; im <= 10; ++im) {
                const double eta = ie * kGridStep;
                const double eps = im * kGridStep;
                const CoefficientSet with = fn(ChannelParams(n, eta, eps, 0.0, true));
                const CoefficientSet without = fn(ChannelParams(n, eta, eps, 0.0, false));
                const double gain_on = with.zeta_in * with.zeta_in;
                const double gain_off = without.zeta_in * without.zeta_in;
                std::ostringstream os;
                os << "N=" << n << " eta=" << eta << " eps=" << eps;
                if (!(gain_on > gain_off)) {
                    return fail("flip advantage",
                                "zeta_in^2 did not improve with flips at " + os.str());
                }
                if (!(gain_on > eta)) {
                    return fail("flip advantage",
                                "zeta_in^2 did not beat the bare single use at " + os.str());
                }
                if (!(with.zeta_m * with.zeta_m < without.zeta_m * without.zeta_m)) {
                    return fail("flip advantage",
                                "zeta_m^2 was not suppressed at " + os.str());
                }
            }
        }
    }
    return pass("flip advantage",
                "signal gain up, memory leakage down across the grid interior");
}

std::vector<CheckResult> run_all() {
    return {
        check_normalization(),    check_dilation_orthonormality(),
        check_triad_oracle(),     check_fock_fidelity(),
        check_entangled_cross_block(), check_ppt_dual_route(),
        check_limit_cases(),      check_flip_advantage(),
    };
}

}  // namespace gmc::verify
