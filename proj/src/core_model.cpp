#include "ammet/core_model.hpp"

#include <cmath>
#include <string>

#include "ammet/errors.hpp"

namespace ammet {
namespace {

void require_non_negative(double value, const char* name) {
    if (!std::isfinite(value) || value < 0.0) {
        throw DomainError(std::string(name) + " must be finite and non-negative, got " +
                          std::to_string(value));
    }
}

void require_fraction(double value, const char* name) {
    if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
        throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
    }
}

}  // namespace

double equilibrium_income(double consumption, double investment, double government) {
    require_non_negative(consumption, "consumption");
    require_non_negative(investment, "investment");
    require_non_negative(government, "government spending");
    return consumption + investment + government;
}

double beta_from_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha must lie in (0, 1], got " + std::to_string(alpha));
    }
    return 1.0 / alpha;
}

double alpha_from_beta(double beta) {
    if (!(beta >= 1.0) || std::isinf(beta)) {
        throw DomainError("beta must be finite and >= 1, got " + std::to_string(beta));
    }
    return 1.0 / beta;
}

double government_spending(double alpha, double gdp) {
    require_fraction(alpha, "alpha");
    require_non_negative(gdp, "gdp");
    return alpha * gdp;
}

double investment_amplification(double income, double investment) {
    if (!std::isfinite(income) || !std::isfinite(investment)) {
        throw DomainError("income and investment must be finite");
    }
    if (investment <= 0.0) {
        throw DomainError("investment must be positive, got " + std::to_string(investment));
    }
    if (investment > income) {
        throw DomainError("investment cannot exceed income");
    }
    return income / investment;
}

AmplificationPoint amplification_point(double alpha) {
    return {alpha, beta_from_alpha(alpha)};
}

EconomicAccount whatif_account(double gdp, double alpha, double consumption_share) {
    require_non_negative(gdp, "gdp");
    require_fraction(alpha, "alpha");
    require_fraction(consumption_share, "consumption share");

    EconomicAccount account;
    account.government_G = alpha * gdp;
    // alpha <= 1 keeps the remainder non-negative.
    const double remainder = gdp - account.government_G;
    account.consumption_C = consumption_share * remainder;
    account.investment_I = remainder - account.consumption_C;
    account.income_Y = equilibrium_income(account.consumption_C, account.investment_I,
                                          account.government_G);
    return account;
}

}  // namespace ammet
