#pragma once

#include <map>
#include <string>
#include <vector>

#include "varbasis/algebra.hpp"

namespace varbasis {

/// Universe-indexed gLV coefficients: growth rates rho_i (1/day), the
/// interaction matrix W (entry (p,q) is the effect of species q on species
/// p, per abundance*day) and antibiotic susceptibilities eps_i (1/day).
///
/// Entries must be total over the catalogued labels; labels in the unknown
/// reserve may be absent, which makes any basis containing them un-flowable.
class GlobalParams {
public:
    GlobalParams() = default;
    explicit GlobalParams(Universe universe) : universe_(std::move(universe)) {}

    const Universe& universe() const noexcept { return universe_; }
    Universe& universe() noexcept { return universe_; }

    void set_growth(Label id, double value) { growth_[id] = value; }
    void set_susceptibility(Label id, double value) { susceptibility_[id] = value; }
    void set_interaction(Label on, Label by, double value) { interaction_[on][by] = value; }

    bool has_growth(Label id) const { return growth_.count(id) != 0; }

    /// Each accessor throws ConfigError naming the label if no entry exists.
    double growth(Label id) const;
    double susceptibility(Label id) const;
    double interaction(Label on, Label by) const;

private:
    Universe universe_;
    std::map<Label, double> growth_;
    std::map<Label, double> susceptibility_;
    std::map<Label, std::map<Label, double>> interaction_;
};

/// Dense extraction of GlobalParams onto one basis, in canonical (ascending
/// label) order. w is row-major, dimension() x dimension().
struct RestrictedParams {
    BasisSet basis;
    std::vector<double> rho;
    std::vector<double> eps;
    std::vector<double> w;

    std::size_t dimension() const noexcept { return basis.size(); }
    double w_at(std::size_t on, std::size_t by) const { return w[on * basis.size() + by]; }
};

RestrictedParams restrict_params(const GlobalParams& params, const BasisSet& basis);

/// Piecewise-constant input signal. u(t) = level on [t_begin, t_end), 0
/// outside all pieces. Pieces must not overlap.
class AntibioticSignal {
public:
    struct Piece {
        double t_begin = 0.0;
        double t_end = 0.0;
        double level = 0.0;
        bool operator==(const Piece&) const = default;
    };

    AntibioticSignal() = default;
    explicit AntibioticSignal(std::vector<Piece> pieces);

    double at(double t) const noexcept;
    const std::vector<Piece>& pieces() const noexcept { return pieces_; }

    bool operator==(const AntibioticSignal&) const = default;

private:
    std::vector<Piece> pieces_;
};

enum class Scheme {
    ExplicitEuler,
    ExplicitRk4,
    CrankNicolsonSemiImplicit,
};

/// "euler", "rk4", "cn".
std::string scheme_name(Scheme scheme);
Scheme parse_scheme(const std::string& name);

struct IntegratorSettings {
    Scheme scheme = Scheme::ExplicitRk4;
    double dt = 0.01;

    bool operator==(const IntegratorSettings&) const = default;
};

/// The bracket rho + W x + u*eps, evaluated coordinate-wise on x's basis.
std::vector<double> flow_bracket(const VBVector& x, const RestrictedParams& rp, double u);

/// gLV right-hand side x (.) (rho + W x + u*eps) on x's basis.
/// Throws ContractViolation if x.basis != rp.basis.
VBVector flow_rhs(const VBVector& x, const RestrictedParams& rp, double u);

/// One explicit step (Euler or classical RK4, with u sampled at the stage
/// times). Throws DivergenceError on a non-finite result.
VBVector step_explicit(const VBVector& x, const RestrictedParams& rp,
                       const AntibioticSignal& u_signal, double t, double dt, Scheme scheme);

/// One semi-implicit step: per coordinate, with r = (rho + W x_n + u*eps),
///   x_{n+1} = x_n * (1 + dt*r/2) / (1 - dt*r/2).
/// The bracket is frozen at x_n, so the update is a diagonal solve. Throws
/// StepSizeError if a denominator is within 1e-12 of zero.
VBVector step_crank_nicolson(const VBVector& x, const RestrictedParams& rp,
                             const AntibioticSignal& u_signal, double t, double dt);

/// Dispatch on settings.scheme.
VBVector advance(const VBVector& x, const RestrictedParams& rp, const AntibioticSignal& u_signal,
                 double t, const IntegratorSettings& settings);

}  // namespace varbasis
