#include "ammet/transistor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ammet/errors.hpp"

namespace ammet {
namespace {

bool positive(double x) { return std::isfinite(x) && x > 0.0; }
bool non_negative(double x) { return std::isfinite(x) && x >= 0.0; }

double forward_alpha(const TransistorParams& p) {
    const double transport = 1.0 / std::cosh(p.base_width_W / p.diffusion_length_LB);
    return p.injection_efficiency_gamma * transport;
}

}  // namespace

void TransistorParams::validate() const {
    if (!positive(saturation_current_IS)) throw DomainError("saturation current must be positive");
    if (!positive(thermal_voltage_VT)) throw DomainError("thermal voltage must be positive");
    if (!positive(base_width_W)) throw DomainError("base width must be positive");
    if (!positive(diffusion_length_LB)) throw DomainError("diffusion length must be positive");
    if (!(injection_efficiency_gamma > 0.0 && injection_efficiency_gamma <= 1.0)) {
        throw DomainError("injection efficiency must lie in (0, 1]");
    }
    if (!non_negative(leakage_ICBO)) throw DomainError("I_CBO must be non-negative");
    if (!non_negative(vce_saturation)) throw DomainError("V_CE(sat) must be non-negative");
    if (!(forward_alpha(*this) < 1.0)) {
        throw DomainError("gamma * sech(W/L_B) must be < 1, otherwise the gain is unbounded");
    }
}

void BiasCircuit::validate() const {
    if (!non_negative(supply_VCC)) throw DomainError("V_CC must be non-negative");
    if (!positive(base_resistor_RB)) throw DomainError("R_B must be positive");
    if (!positive(collector_resistor_RC)) throw DomainError("R_C must be positive");
}

double current_gain(double i_c, double i_b) {
    if (!positive(i_b)) throw DomainError("base current must be positive");
    if (!non_negative(i_c)) throw DomainError("collector current must be non-negative");
    return i_c / i_b;
}

double base_current(double i_r, double i_cbo) {
    if (!non_negative(i_r)) throw DomainError("recombination current must be non-negative");
    if (!non_negative(i_cbo)) throw DomainError("I_CBO must be non-negative");
    return i_r + i_cbo;
}

double gain_from_base_width(const TransistorParams& params) {
    params.validate();
    const double a_f = forward_alpha(params);
    return a_f / (1.0 - a_f);
}

double effective_gain_with_leakage(double i_c, double beta_ideal, double i_cbo) {
    if (!positive(i_c)) throw DomainError("collector current must be positive");
    if (!positive(beta_ideal)) throw DomainError("ideal gain must be positive");
    if (!non_negative(i_cbo)) throw DomainError("I_CBO must be non-negative");
    // i_c / (i_c / beta) can land one ulp away from beta; without leakage the
    // ideal gain is returned as is.
    if (i_cbo == 0.0) return beta_ideal;
    return current_gain(i_c, base_current(i_c / beta_ideal, i_cbo));
}

OperatingPoint solve_bias_point(const BiasCircuit& circuit, const TransistorParams& params,
                                const NewtonOptions& options) {
    circuit.validate();
    params.validate();

    const double vcc = circuit.supply_VCC;
    if (vcc == 0.0) return {};

    const double rb = circuit.base_resistor_RB;
    const double is = params.saturation_current_IS;
    const double vt = params.thermal_voltage_VT;

    // Residual of the base loop; increasing in v, negative at 0 and >= 0 at V_CC.
    auto residual = [&](double v) { return is * std::expm1(v / vt) - (vcc - v) / rb; };
    auto slope = [&](double v) { return is / vt * std::exp(v / vt) + 1.0 / rb; };

    double lo = 0.0;
    double hi = vcc;
    double v = std::clamp(vt * std::log1p(vcc / (rb * is)), lo, hi);

    OperatingPoint op;
    bool converged = false;
    for (int k = 1; k <= options.max_iterations; ++k) {
        op.iterations = k;
        const double f = residual(v);
        if (f == 0.0) {
            converged = true;
            break;
        }
        (f > 0.0 ? hi : lo) = v;

        const double step = f / slope(v);
        if (std::abs(step) < options.tolerance) {
            v -= step;
            converged = true;
            break;
        }
        double next = v - step;
        // Fall back to bisection if Newton leaves the bracket.
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - v) < options.tolerance) {
            v = next;
            converged = true;
            break;
        }
        v = next;
    }
    if (!converged) {
        throw NumericError("bias-point Newton iteration did not converge in " +
                           std::to_string(options.max_iterations) + " iterations");
    }

    op.v_BE = v;
    op.i_B = (vcc - v) / rb;

    const double beta = gain_from_base_width(params);
    const double linear = beta * op.i_B;
    const double limit = std::max(0.0, (vcc - params.vce_saturation) / circuit.collector_resistor_RC);
    if (linear > limit) {
        op.i_C = limit;
        op.saturated = true;
        op.v_CE = limit > 0.0 ? params.vce_saturation : vcc;
    } else {
        op.i_C = linear;
        op.v_CE = vcc - op.i_C * circuit.collector_resistor_RC;
    }
    return op;
}

}  // namespace ammet
