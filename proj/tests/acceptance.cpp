// Acceptance suite: one check per release criterion, each printed as a
// single pass/fail line. Run with --criterion K to execute one of them
// (that is how ctest registers the suite); no arguments runs everything.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gmc/memory_channel.hpp"
#include "gmc/metrics.hpp"
#include "gmc/oracles.hpp"
#include "gmc/reduction.hpp"
#include "gmc/verify.hpp"

namespace {

using gmc::ChannelParams;
using gmc::CoefficientSet;

struct Outcome {
    bool passed = false;
    std::string detail;
};

double timed_seconds(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

Outcome from_check(const gmc::verify::CheckResult& check, double seconds,
                   double budget_seconds) {
    Outcome outcome;
    std::ostringstream os;
    os << check.detail << " [" << seconds << " s]";
    outcome.detail = os.str();
    outcome.passed = check.passed && seconds < budget_seconds;
    if (seconds >= budget_seconds) {
        outcome.detail += " exceeded the runtime budget";
    }
    return outcome;
}

Outcome criterion_normalization() {
    gmc::verify::CheckResult check;
    const double seconds = timed_seconds([&] { check = gmc::verify::check_normalization(); });
    return from_check(check, seconds, 1.0);
}

Outcome criterion_orthonormality() {
    gmc::verify::CheckResult check;
    const double seconds =
        timed_seconds([&] { check = gmc::verify::check_dilation_orthonormality(); });
    return from_check(check, seconds, 1.0);
}

Outcome criterion_oracle_equivalence() {
    gmc::verify::CheckResult triad_check;
    gmc::verify::CheckResult fock_check;
    const double seconds = timed_seconds([&] {
        triad_check = gmc::verify::check_triad_oracle();
        fock_check = gmc::verify::check_fock_fidelity();
    });
    Outcome outcome;
    outcome.passed = triad_check.passed && fock_check.passed && seconds < 120.0;
    std::ostringstream os;
    os << triad_check.detail << "; " << fock_check.detail << " [" << seconds << " s]";
    outcome.detail = os.str();
    return outcome;
}

Outcome criterion_coefficient_anchors() {
    const CoefficientSet on = gmc::reduce(ChannelParams(2, 0.6, 0.3, 0.0, true));
    const CoefficientSet off = gmc::reduce(ChannelParams(2, 0.6, 0.3, 0.0, false));
    const double gain_on = on.zeta_in * on.zeta_in;
    const double gain_off = off.zeta_in * off.zeta_in;
    const double mem_on = on.zeta_m * on.zeta_m;
    const double mem_off = off.zeta_m * off.zeta_m;

    const CoefficientSet on4 = gmc::reduce(ChannelParams(4, 0.6, 0.3, 0.0, true));
    const CoefficientSet off4 = gmc::reduce(ChannelParams(4, 0.6, 0.3, 0.0, false));
    const double gain_on4 = on4.zeta_in * on4.zeta_in;
    const double gain_off4 = off4.zeta_in * off4.zeta_in;

    Outcome outcome;
    outcome.passed = std::abs(gain_on - 0.7817) < 1e-4 && gain_on > 0.6 &&
                     std::abs(gain_off - 0.4423) < 1e-4 &&
                     std::abs(mem_off - 0.1217) < 1e-4 && std::abs(mem_on - 0.0199) < 1e-4 &&
                     gain_on4 > 0.6 && gain_on4 > gain_off4 &&
                     // regression constants, confirmed against the closed-form and
                     // full-scene oracles before freezing
                     std::abs(gain_on4 - 0.814139230838739) < 1e-9 &&
                     std::abs(gain_off4 - 0.306855169161261) < 1e-9 &&
                     std::abs(on4.zeta_m * on4.zeta_m - 0.013846242643531) < 1e-9 &&
                     std::abs(off4.zeta_m * off4.zeta_m - 0.084735677356469) < 1e-9;
    std::ostringstream os;
    os << "N=2 zeta_in^2 on/off = " << gain_on << "/" << gain_off
       << ", zeta_m^2 on/off = " << mem_on << "/" << mem_off
       << "; N=4 zeta_in^2 on/off = " << gain_on4 << "/" << gain_off4;
    outcome.detail = os.str();
    return outcome;
}

Outcome criterion_fidelity_anchors() {
    const std::complex<double> alpha(std::sqrt(8.0), 0.0);
    const double f_on =
        gmc::transmission_fidelity(ChannelParams(2, 0.6, 0.3, 3.0, true), alpha).value;
    const double f_off =
        gmc::transmission_fidelity(ChannelParams(2, 0.6, 0.3, 3.0, false), alpha).value;
    const double f_memoryless =
        gmc::transmission_fidelity(ChannelParams(2, 0.6, 0.0, 3.0, true), alpha).value;
    const double f_single =
        gmc::gaussian_fidelity(gmc::coherent_state(std::sqrt(8.0), 0.0),
                               gmc::single_use_triad(0.6, 0.3, 3.0))
            .value;
    Outcome outcome;
    outcome.passed = std::abs(f_on - 0.5987) < 5e-4 && std::abs(f_off - 0.2965) < 5e-4 &&
                     std::abs(f_memoryless - 0.3779) < 5e-4 &&
                     std::abs(f_single - 0.4358) < 5e-4 && f_on > f_single &&
                     f_single > f_memoryless && f_memoryless > f_off;
    std::ostringstream os;
    os << "F(on)=" << f_on << " > F(single)=" << f_single << " > F(eps=0)=" << f_memoryless
       << " > F(off)=" << f_off;
    outcome.detail = os.str();
    return outcome;
}

Outcome criterion_flip_memory_claims() {
    const std::complex<double> alpha(std::sqrt(8.0), 0.0);
    std::ostringstream os;
    bool passed = true;

    // with flips, strong memory beats no memory at every transmissivity
    for (int n : {2, 4}) {
        for (int ie = 1; ie <= 9 && passed; ++ie) {
            const double eta = 0.1 * ie;
            const double strong =
                gmc::transmission_fidelity(ChannelParams(n, eta, 0.9, 3.0, true), alpha).value;
            const double none =
                gmc::transmission_fidelity(ChannelParams(n, eta, 0.0, 3.0, true), alpha).value;
            if (!(strong > none)) {
                passed = false;
                os << "F(" << eta << ", 0.9) <= F(" << eta << ", 0) at N=" << n << "; ";
            }
        }
    }

    // without flips the memory hurts monotonically at eta = 0.6
    double previous = 2.0;
    for (int im = 0; im <= 9; ++im) {
        const double f =
            gmc::transmission_fidelity(ChannelParams(2, 0.6, 0.1 * im, 3.0, false), alpha)
                .value;
        if (!(f < previous)) {
            passed = false;
            os << "no-flip fidelity not strictly decreasing at eps=" << 0.1 * im << "; ";
        }
        previous = f;
    }

    // dephasing-limit clause, as stated: without flips at eta = 0.05 the
    // near-perfect memory should beat the memoryless channel
    const double f_dephasing =
        gmc::transmission_fidelity(ChannelParams(2, 0.05, 0.95, 3.0, false), alpha).value;
    const double f_memoryless =
        gmc::transmission_fidelity(ChannelParams(2, 0.05, 0.0, 3.0, false), alpha).value;
    if (!(f_dephasing > f_memoryless)) {
        passed = false;
        os << "dephasing clause fails: F(eps=0.95)=" << f_dephasing
           << " <= F(eps=0)=" << f_memoryless
           << " (known: at eta -> 0 the no-flip signal gain tends to -(N-1)/N, so a "
              "displaced input is anti-phased and the displacement mismatch dominates; "
              "the claim holds only for zero-mean inputs)";
    }

    Outcome outcome;
    outcome.passed = passed;
    outcome.detail = passed ? "strong-memory gain with flips, monotone loss without" : os.str();
    return outcome;
}

Outcome criterion_entanglement_anchors() {
    const gmc::EntanglementResult identity =
        gmc::entanglement_survival(ChannelParams(2, 1.0, 0.5, 1.0, true), 0.6);
    const gmc::EntanglementResult anchor =
        gmc::entanglement_survival(ChannelParams(2, 0.6, 0.3, 1.0, true), 0.6);
    const gmc::EntanglementResult replaced =
        gmc::entanglement_survival(ChannelParams(2, 0.0, 0.0, 1.0, true), 0.6);

    // flips-on N=4 entangled region must contain the N=2 region on the 51x51 grid
    int containment_violations = 0;
    for (int i = 0; i <= 50; ++i) {
        for (int j = 0; j <= 50; ++j) {
            const double eta = i / 50.0;
            const double eps = j / 50.0;
            const double d2 =
                gmc::entanglement_survival(ChannelParams(2, eta, eps, 1.0, true), 0.6).d_minus;
            const double d4 =
                gmc::entanglement_survival(ChannelParams(4, eta, eps, 1.0, true), 0.6).d_minus;
            if (d2 < 0.5 && !(d4 < 0.5)) {
                ++containment_violations;
            }
        }
    }

    Outcome outcome;
    outcome.passed = std::abs(identity.d_minus - 0.125) < 1e-6 &&
                     std::abs(anchor.d_minus - 0.2648) < 5e-4 && !anchor.separable &&
                     replaced.separable && containment_violations == 0;
    std::ostringstream os;
    os << "identity d=" << identity.d_minus << ", anchor d=" << anchor.d_minus
       << (anchor.separable ? " (separable!)" : " (entangled)")
       << ", eta=eps=0 " << (replaced.separable ? "separable" : "entangled!")
       << ", containment violations=" << containment_violations;
    outcome.detail = os.str();
    return outcome;
}

Outcome criterion_cross_block() {
    gmc::verify::CheckResult check;
    const double seconds =
        timed_seconds([&] { check = gmc::verify::check_entangled_cross_block(); });
    return from_check(check, seconds, 60.0);
}

Outcome criterion_ppt_routes() {
    gmc::verify::CheckResult check;
    const double seconds = timed_seconds([&] { check = gmc::verify::check_ppt_dual_route(); });
    return from_check(check, seconds, 5.0);
}

Outcome criterion_verify_command() {
    const std::string command = std::string(GMC_CLI_PATH) + " verify > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    Outcome outcome;
    outcome.passed = status == 0;
    outcome.detail = outcome.passed ? "verify exited 0" : "verify exited nonzero";
    return outcome;
}

struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "normalization of the decomposition", criterion_normalization},
        {2, "dilation orthonormality", criterion_orthonormality},
        {3, "oracle equivalence (triad and Fock)", criterion_oracle_equivalence},
        {4, "coefficient magnitudes at eta=0.6, eps=0.3", criterion_coefficient_anchors},
        {5, "fidelity anchors at T=3, |alpha|^2=8", criterion_fidelity_anchors},
        {6, "flip and memory qualitative claims", criterion_flip_memory_claims},
        {7, "entanglement anchors and region containment", criterion_entanglement_anchors},
        {8, "transmitted-half cross block", criterion_cross_block},
        {9, "PPT closed form vs spectrum", criterion_ppt_routes},
        {10, "verify command", criterion_verify_command},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--criterion") {
            only = std::atoi(argv[i + 1]);
        }
    }

    bool all_passed = true;
    bool ran_any = false;
    for (const Criterion& criterion : criteria()) {
        if (only != 0 && criterion.id != only) {
            continue;
        }
        ran_any = true;
        const Outcome outcome = criterion.run();
        std::cout << (outcome.passed ? "[PASS] " : "[FAIL] ") << "criterion " << criterion.id
                  << ": " << criterion.title;
        if (!outcome.detail.empty()) {
            std::cout << " -- " << outcome.detail;
        }
        std::cout << "\n";
        all_passed = all_passed && outcome.passed;
    }
    if (!ran_any) {
        std::cerr << "unknown criterion " << only << "\n";
        return 1;
    }
    return all_passed ? 0 : 1;
}
