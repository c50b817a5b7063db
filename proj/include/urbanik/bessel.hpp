#pragma once

namespace urbanik {

/// Modified Bessel function K_0(x), x > 0.  Self-contained (no Gamma-function
/// machinery), so it serves as an independent reference for e_2.
double bessel_k0(double x);

/// e^x K_0(x), finite for all x > 0 where K_0 itself underflows.
double bessel_k0_scaled(double x);

}  // namespace urbanik
