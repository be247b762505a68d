#include "varbasis/flow.hpp"

#include <algorithm>
#include <cmath>

namespace varbasis {

double GlobalParams::growth(Label id) const {
    auto it = growth_.find(id);
    if (it == growth_.end()) {
        throw ConfigError("no growth rate configured for label " + std::to_string(id));
    }
    return it->second;
}

double GlobalParams::susceptibility(Label id) const {
    auto it = susceptibility_.find(id);
    if (it == susceptibility_.end()) {
        throw ConfigError("no antibiotic susceptibility configured for label " +
                          std::to_string(id));
    }
    return it->second;
}

double GlobalParams::interaction(Label on, Label by) const {
    auto row = interaction_.find(on);
    if (row != interaction_.end()) {
        auto cell = row->second.find(by);
        if (cell != row->second.end()) return cell->second;
    }
    throw ConfigError("no interaction entry configured for (" + std::to_string(on) + "," +
                      std::to_string(by) + ")");
}

RestrictedParams restrict_params(const GlobalParams& params, const BasisSet& basis) {
    RestrictedParams rp;
    rp.basis = basis;
    const std::size_t n = basis.size();
    rp.rho.reserve(n);
    rp.eps.reserve(n);
    rp.w.reserve(n * n);
    for (Label on : basis) {
        rp.rho.push_back(params.growth(on));
        rp.eps.push_back(params.susceptibility(on));
    }
    for (Label on : basis) {
        for (Label by : basis) {
            rp.w.push_back(params.interaction(on, by));
        }
    }
    return rp;
}

AntibioticSignal::AntibioticSignal(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    std::sort(pieces_.begin(), pieces_.end(),
              [](const Piece& a, const Piece& b) { return a.t_begin < b.t_begin; });
    for (const Piece& p : pieces_) {
        if (!(p.t_begin <= p.t_end)) {
            throw ConfigError("antibiotic piece has t_begin > t_end");
        }
    }
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        if (pieces_[i].t_begin < pieces_[i - 1].t_end) {
            throw ConfigError("antibiotic pieces overlap");
        }
    }
}

double AntibioticSignal::at(double t) const noexcept {
    for (const Piece& p : pieces_) {
        if (t < p.t_begin) break;
        if (t < p.t_end) return p.level;
    }
    return 0.0;
}

std::string scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::ExplicitEuler: return "euler";
        case Scheme::ExplicitRk4: return "rk4";
        case Scheme::CrankNicolsonSemiImplicit: return "cn";
    }
    return "unknown";
}

Scheme parse_scheme(const std::string& name) {
    if (name == "euler") return Scheme::ExplicitEuler;
    if (name == "rk4") return Scheme::ExplicitRk4;
    if (name == "cn") return Scheme::CrankNicolsonSemiImplicit;
    throw ConfigError("unknown integrator scheme '" + name + "' (expected euler, rk4 or cn)");
}

namespace {

void require_same_basis(const VBVector& x, const RestrictedParams& rp) {
    if (x.basis() != rp.basis) {
        throw ContractViolation("state basis " + to_string(x.basis()) +
                                " does not match restricted parameter basis " +
                                to_string(rp.basis));
    }
}

std::vector<double> bracket_of(const std::vector<double>& coords, const RestrictedParams& rp,
                               double u) {
    const std::size_t n = coords.size();
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = rp.rho[i];
        for (std::size_t j = 0; j < n; ++j) {
            acc += rp.w[i * n + j] * coords[j];
        }
        acc += u * rp.eps[i];
        r[i] = acc;
    }
    return r;
}

std::vector<double> rhs_of(const std::vector<double>& coords, const RestrictedParams& rp,
                           double u) {
    std::vector<double> r = bracket_of(coords, rp, u);
    for (std::size_t i = 0; i < coords.size(); ++i) r[i] *= coords[i];
    return r;
}

void require_finite(const std::vector<double>& coords, double t) {
    for (double c : coords) {
        if (!std::isfinite(c)) {
            throw DivergenceError(t, 0,
                                  "integration produced a non-finite coordinate near t=" +
                                      std::to_string(t));
        }
    }
}

}  // namespace

std::vector<double> flow_bracket(const VBVector& x, const RestrictedParams& rp, double u) {
    require_same_basis(x, rp);
    return bracket_of(x.coords(), rp, u);
}

VBVector flow_rhs(const VBVector& x, const RestrictedParams& rp, double u) {
    require_same_basis(x, rp);
    return VBVector::from_parts(x.basis(), rhs_of(x.coords(), rp, u));
}

VBVector step_explicit(const VBVector& x, const RestrictedParams& rp,
                       const AntibioticSignal& u_signal, double t, double dt, Scheme scheme) {
    require_same_basis(x, rp);
    const std::size_t n = x.dimension();
    const std::vector<double>& x0 = x.coords();
    std::vector<double> out(n);

    if (scheme == Scheme::ExplicitEuler) {
        std::vector<double> f = rhs_of(x0, rp, u_signal.at(t));
        for (std::size_t i = 0; i < n; ++i) out[i] = x0[i] + dt * f[i];
    } else if (scheme == Scheme::ExplicitRk4) {
        const double u0 = u_signal.at(t);
        const double uh = u_signal.at(t + dt / 2.0);
        const double u1 = u_signal.at(t + dt);

        std::vector<double> k1 = rhs_of(x0, rp, u0);
        std::vector<double> stage(n);
        for (std::size_t i = 0; i < n; ++i) stage[i] = x0[i] + dt / 2.0 * k1[i];
        std::vector<double> k2 = rhs_of(stage, rp, uh);
        for (std::size_t i = 0; i < n; ++i) stage[i] = x0[i] + dt / 2.0 * k2[i];
        std::vector<double> k3 = rhs_of(stage, rp, uh);
        for (std::size_t i = 0; i < n; ++i) stage[i] = x0[i] + dt * k3[i];
        std::vector<double> k4 = rhs_of(stage, rp, u1);
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = x0[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    } else {
        throw ContractViolation("step_explicit called with a non-explicit scheme");
    }

    require_finite(out, t);
    return VBVector::from_parts(x.basis(), std::move(out));
}

VBVector step_crank_nicolson(const VBVector& x, const RestrictedParams& rp,
                             const AntibioticSignal& u_signal, double t, double dt) {
    require_same_basis(x, rp);
    const std::vector<double>& x0 = x.coords();
    std::vector<double> r = bracket_of(x0, rp, u_signal.at(t));
    std::vector<double> out(x0.size());
    for (std::size_t i = 0; i < x0.size(); ++i) {
        const double denom = 1.0 - dt * r[i] / 2.0;
        if (std::abs(denom) < 1e-12) {
            throw StepSizeError("semi-implicit denominator vanishes for label " +
                                std::to_string(rp.basis.labels()[i]) + " at t=" +
                                std::to_string(t) + "; reduce dt");
        }
        out[i] = x0[i] * (1.0 + dt * r[i] / 2.0) / denom;
    }
    require_finite(out, t);
    return VBVector::from_parts(x.basis(), std::move(out));
}

VBVector advance(const VBVector& x, const RestrictedParams& rp, const AntibioticSignal& u_signal,
                 double t, const IntegratorSettings& settings) {
    if (settings.scheme == Scheme::CrankNicolsonSemiImplicit) {
        return step_crank_nicolson(x, rp, u_signal, t, settings.dt);
    }
    return step_explicit(x, rp, u_signal, t, settings.dt, settings.scheme);
}

}  // namespace varbasis
