#pragma once

// Mixed-economy equilibrium Y = C + I + G and the economic-amplifier algebra
// relating the government spending share alpha = G / Y to the gain beta = 1 / alpha.

namespace ammet {

/// Macro aggregates in one currency unit. Accounts built by this module satisfy
/// income_Y == consumption_C + investment_I + government_G bit for bit.
struct EconomicAccount {
    double income_Y = 0.0;
    double consumption_C = 0.0;
    double investment_I = 0.0;
    double government_G = 0.0;

    bool operator==(const EconomicAccount&) const = default;
};

/// A spending share and its amplification factor; alpha * beta == 1.
struct AmplificationPoint {
    double alpha = 1.0;
    double beta = 1.0;

    bool operator==(const AmplificationPoint&) const = default;
};

struct ThresholdConstant {
    double optimal_alpha;
    double optimal_beta;
};

/// Optimal intervention threshold: G = 0.1 GDP, i.e. a gain of 10.
inline constexpr ThresholdConstant kOptimalThreshold{0.1, 10.0};
static_assert(kOptimalThreshold.optimal_alpha * kOptimalThreshold.optimal_beta == 1.0);

/// Y = C + I + G. Throws DomainError on negative or non-finite terms.
double equilibrium_income(double consumption, double investment, double government);

/// beta = 1 / alpha for alpha in (0, 1].
double beta_from_alpha(double alpha);

/// alpha = 1 / beta for beta >= 1.
double alpha_from_beta(double beta);

/// G = alpha * GDP. Unlike beta_from_alpha, alpha = 0 is allowed here.
double government_spending(double alpha, double gdp);

/// Investment reading of the gain, Y / I. Kept separate from beta_from_alpha,
/// which is the government-share reading Y / G.
double investment_amplification(double income, double investment);

AmplificationPoint amplification_point(double alpha);

/// Splits gdp into G = alpha * gdp and a private remainder shared between
/// consumption (consumption_share) and investment (the rest).
///
/// Investment is taken as remainder - C and Y as C + I + G, so the identity
/// holds exactly in floating point; Y equals gdp up to rounding of the split.
EconomicAccount whatif_account(double gdp, double alpha, double consumption_share);

}  // namespace ammet
