#pragma once

// Complex Gamma-family functions on the cut plane C \ (-inf, 0].

#include <complex>

namespace urbanik {

using Cx = std::complex<double>;

/// Holomorphic branch of log Gamma on C \ (-inf, 0], normalized by
/// log_gamma(1) = 0.  The imaginary part is continuous on the cut plane, so it
/// is generally not the principal argument of Gamma(z).
///
/// Throws DomainError on the cut, within 1e-12 of a pole, or for non-finite z.
Cx log_gamma(Cx z);

/// Gamma(z)^c := exp(c * log_gamma(z)) for c > 0.
Cx gamma_pow(Cx z, double c);

/// Psi(z) = Gamma'(z) / Gamma(z).
Cx digamma(Cx z);

/// Binet's remainder
///   mu(z) = log Gamma(z) - (z - 1/2) Log z + z - log(2 pi) / 2,  Re z > 0.
/// For Re z >= 10 the leading terms cancel symbolically and only the Stirling
/// tail is summed, so |mu| is accurate even when log Gamma is huge.
Cx binet_mu(Cx z);

/// Decay envelope for |Gamma(u + iv)|^c, valid for u in [0.5, 2] and |v| >= 2:
///   |Gamma(u + iv)|^c <= prefactor * exp(-c pi |v| / 2) * |v|^(c (u - 1/2)).
struct GammaEnvelope {
  double c = 1.0;
  double prefactor = 1.0;

  /// log of the right-hand side of the envelope inequality.
  double log_bound(double u, double v) const;
};

/// Sampled envelope: 1.1 x the largest observed ratio over u in
/// {0.5, 1, 1.5, 2} and |v| in [2, 200].
GammaEnvelope gamma_abs_envelope(double c);

namespace detail {
/// B_{2k} / (2k (2k - 1)) for k = 1..n, exact rationals rounded to double.
const double* stirling_coefficients(int n);
}  // namespace detail

}  // namespace urbanik
