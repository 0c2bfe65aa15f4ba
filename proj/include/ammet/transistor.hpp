#pragma once

// Bipolar-transistor side of the economic-amplifier analogy: common-emitter
// current gain, the base-current decomposition I_B = I_r + I_CBO, gain as a
// function of base width, and the DC bias point of a single-stage
// common-emitter amplifier.
//
// Quantities are in SI units and npn (positive-current) sign convention.

namespace ammet {

/// Device parameters. Gain follows the short-base transport model
/// alpha_T = sech(W / L_B), alpha_F = gamma * alpha_T, beta = alpha_F / (1 - alpha_F).
struct TransistorParams {
    double saturation_current_IS = 1e-14;  // A
    double thermal_voltage_VT = 0.02585;   // V
    double base_width_W = 1e-6;            // m
    double diffusion_length_LB = 1e-5;     // m
    double injection_efficiency_gamma = 0.995;
    double leakage_ICBO = 0.0;             // A
    double vce_saturation = 0.2;           // V

    /// Throws DomainError if a field is out of range or gamma * sech(W/L_B) >= 1.
    void validate() const;
};

/// Fixed-bias common-emitter stage: V_CC feeds the base through R_B and the
/// collector through R_C; the emitter is grounded.
struct BiasCircuit {
    double supply_VCC = 0.0;
    double base_resistor_RB = 1e6;
    double collector_resistor_RC = 1e3;

    void validate() const;
};

struct OperatingPoint {
    double v_BE = 0.0;
    double i_B = 0.0;
    double i_C = 0.0;
    double v_CE = 0.0;
    bool saturated = false;
    int iterations = 0;
};

struct NewtonOptions {
    double tolerance = 1e-14;  // |dv| in volts
    int max_iterations = 100;
};

/// beta = I_C / I_B.
double current_gain(double i_c, double i_b);

/// I_B = I_r + I_CBO.
double base_current(double i_r, double i_cbo);

double gain_from_base_width(const TransistorParams& params);

/// I_C / (I_C / beta_ideal + I_CBO): the gain once constant leakage is added
/// to the recombination share of the base current.
double effective_gain_with_leakage(double i_c, double beta_ideal, double i_cbo);

/// Solves (V_CC - v) / R_B = I_S (exp(v / V_T) - 1) for v = V_BE with a
/// bracketed Newton iteration, then sets I_C = min(beta I_B, (V_CC - V_CE,sat) / R_C).
///
/// Throws NumericError if the iteration does not converge within the cap.
OperatingPoint solve_bias_point(const BiasCircuit& circuit, const TransistorParams& params,
                                const NewtonOptions& options = {});

}  // namespace ammet
