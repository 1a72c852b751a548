#include "gmc/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include <json.hpp>

#include "gmc/memory_channel.hpp"
#include "gmc/metrics.hpp"

namespace gmc {

namespace {

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// evaluates fn(0..total-1) across threads; results land in index order
void parallel_for_index(int total, const std::function<void(int)>& fn) {
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(total));
    if (workers <= 1) {
        for (int i = 0; i < total; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = static_cast<int>(w); i < total; i += static_cast<int>(workers)) {
                fn(i);
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
}

}  // namespace

double SweepAxis::value_at(int i) const {
    return start + (stop - start) * i / (steps - 1);
}

void SweepSpec::validate() const {
    static const std::set<std::string> known{"eta", "eps", "T", "mu", "alpha2", "N"};
    for (const SweepAxis* axis : {&eta_axis, &eps_axis}) {
        if (known.count(axis->name) == 0) {
            throw std::invalid_argument("SweepSpec: unknown axis '" + axis->name + "'");
        }
        if (axis->steps < 2) {
            throw std::invalid_argument("SweepSpec: axes need at least 2 steps");
        }
    }
    if (eta_axis.name != "eta" || eps_axis.name != "eps") {
        throw std::invalid_argument("SweepSpec: sweeps run over the (eta, eps) plane");
    }
    ChannelParams probe(uses, 0.0, 0.0, thermal, flips);
    if (alpha2 < 0.0) {
        throw std::invalid_argument("SweepSpec: alpha2 must be >= 0");
    }
    if (!(mu >= 0.0 && mu < 1.0)) {
        throw std::invalid_argument("SweepSpec: mu must lie in [0, 1)");
    }
}

std::string render_coefficients(const ChannelParams& params, OutputFormat format) {
    const CoefficientSet coeffs = reduce(params);
    const double signal = coeffs.zeta_in * coeffs.zeta_in;
    const double memory = coeffs.zeta_m * coeffs.zeta_m;

    if (format == OutputFormat::csv) {
        std::string out = "component,magnitude\n";
        out += "signal," + format_value(signal) + "\n";
        for (Eigen::Index i = 0; i < coeffs.zeta_b.size(); ++i) {
            out += "aux_" + std::to_string(i + 1) + "," +
                   format_value(coeffs.zeta_b(i) * coeffs.zeta_b(i)) + "\n";
        }
        for (Eigen::Index i = 0; i < coeffs.zeta_e.size(); ++i) {
            out += "env_" + std::to_string(i + 1) + "," +
                   format_value(coeffs.zeta_e(i) * coeffs.zeta_e(i)) + "\n";
        }
        out += "memory," + format_value(memory) + "\n";
        out += "single_use_baseline," + format_value(params.eta) + "\n";
        return out;
    }

    nlohmann::ordered_json doc;
    doc["n"] = params.uses;
    doc["eta"] = params.eta;
    doc["eps"] = params.eps;
    doc["flips"] = params.flips;
    doc["signal"] = signal;
    auto& aux = doc["aux"] = nlohmann::json::array();
    for (Eigen::Index i = 0; i < coeffs.zeta_b.size(); ++i) {
        aux.push_back(coeffs.zeta_b(i) * coeffs.zeta_b(i));
    }
    auto& env = doc["env"] = nlohmann::json::array();
    for (Eigen::Index i = 0; i < coeffs.zeta_e.size(); ++i) {
        env.push_back(coeffs.zeta_e(i) * coeffs.zeta_e(i));
    }
    doc["memory"] = memory;
    doc["single_use_baseline"] = params.eta;
    return doc.dump(2) + "\n";
}

namespace {

struct GridPoint {
    double eta;
    double eps;
};

template <typename Row>
std::string render_grid(const SweepSpec& spec, const std::string& csv_header,
                        bool fidelity_metadata,
                        const std::function<Row(const GridPoint&)>& evaluate,
                        const std::function<std::string(const GridPoint&, const Row&)>& csv_row,
                        const std::function<nlohmann::ordered_json(const GridPoint&, const Row&)>&
                            json_row) {
    spec.validate();
    const int total = spec.eta_axis.steps * spec.eps_axis.steps;
    std::vector<GridPoint> points(total);
    for (int i = 0; i < spec.eta_axis.steps; ++i) {
        for (int j = 0; j < spec.eps_axis.steps; ++j) {
            points[i * spec.eps_axis.steps + j] = {spec.eta_axis.value_at(i),
                                                   spec.eps_axis.value_at(j)};
        }
    }
    std::vector<Row> rows(total);
    parallel_for_index(total, [&](int i) { rows[i] = evaluate(points[i]); });

    if (spec.format == OutputFormat::csv) {
        std::string out = csv_header + "\n";
        for (int i = 0; i < total; ++i) {
            out += csv_row(points[i], rows[i]);
        }
        return out;
    }
    nlohmann::ordered_json doc;
    doc["n"] = spec.uses;
    doc["flips"] = spec.flips;
    doc["T"] = spec.thermal;
    if (fidelity_metadata) {
        doc["alpha2"] = spec.alpha2;
    } else {
        doc["mu"] = spec.mu;
    }
    auto& arr = doc["rows"] = nlohmann::json::array();
    for (int i = 0; i < total; ++i) {
        arr.push_back(json_row(points[i], rows[i]));
    }
    return doc.dump(2) + "\n";
}

}  // namespace

std::string render_fidelity_sweep(const SweepSpec& spec) {
    const double alpha = std::sqrt(spec.alpha2);
    return render_grid<double>(
        spec, "eta,eps,value", /*fidelity_metadata=*/true,
        [&](const GridPoint& p) {
            ChannelParams params(spec.uses, p.eta, p.eps, spec.thermal, spec.flips);
            return transmission_fidelity(params, alpha).value;
        },
        [](const GridPoint& p, const double& f) {
            return format_value(p.eta) + "," + format_value(p.eps) + "," + format_value(f) +
                   "\n";
        },
        [](const GridPoint& p, const double& f) {
            nlohmann::ordered_json row;
            row["eta"] = p.eta;
            row["eps"] = p.eps;
            row["value"] = f;
            return row;
        });
}

std::string render_entanglement_sweep(const SweepSpec& spec) {
    return render_grid<EntanglementResult>(
        spec, "eta,eps,d_minus,separable", /*fidelity_metadata=*/false,
        [&](const GridPoint& p) {
            ChannelParams params(spec.uses, p.eta, p.eps, spec.thermal, spec.flips);
            return entanglement_survival(params, spec.mu);
        },
        [](const GridPoint& p, const EntanglementResult& r) {
            return format_value(p.eta) + "," + format_value(p.eps) + "," +
                   format_value(r.d_minus) + "," + (r.separable ? "true" : "false") + "\n";
        },
        [](const GridPoint& p, const EntanglementResult& r) {
            nlohmann::ordered_json row;
            row["eta"] = p.eta;
            row["eps"] = p.eps;
            row["d_minus"] = r.d_minus;
            row["separable"] = r.separable;
            return row;
        });
}

}  // namespace gmc
