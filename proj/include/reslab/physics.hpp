#ifndef RESLAB_PHYSICS_HPP
#define RESLAB_PHYSICS_HPP

#include <functional>
#include <string>

namespace reslab::physics {

// Pinned constants (CODATA exact values) for bit-stable output across builds.
inline constexpr double kHbar = 1.054571817e-34;       // J s
inline constexpr double kBoltzmann = 1.380649e-23;     // J/K
inline constexpr double kMu0 = 1.25663706212e-6;       // H/m

// Power-dependent TLS loss: delta(n) = F d0 / sqrt(1 + (n/n_sat)^beta2) + d_other.
struct TlsPowerParams {
    double f_delta0 = 0.0;     // product F * delta_TLS,0 (dimensionless)
    double n_sat = 1.0;        // saturation photon number
    double beta2 = 0.5;        // field-nonuniformity exponent, in (0, 2]
    double delta_other = 0.0;  // constant residual loss
};

// Temperature-dependent TLS loss with a dephasing floor:
//   delta(T) = F d0 tanh(x) / sqrt(1 + (A + C T^beta1)^-1 tanh(x)),
//   x = hbar omega / (2 kB T).
struct TlsTempParams {
    double f_delta0 = 0.0;
    double a_floor = 0.0;      // A, from the residual dephasing rate
    double c_coeff = 0.0;      // C (K^-beta1)
    double beta1 = 1.0;
    double delta_other = 0.0;
};

struct MaterialParams {
    double t_c = 1.0;          // superconducting transition temperature (K)
    double rho_n = 1e-7;       // normal-state resistivity just above T_c (Ohm m)
    double thickness_d = 1e-7; // film thickness (m)
    double alpha_k = 0.0;      // kinetic-inductance fraction, in [0, 1]
};

struct LossBudget {
    double tls = 0.0;
    double qp = 0.0;
    double other = 0.0;
    double total = 0.0;
    double q_int = 0.0;        // 1 / total
};

// Handler for soft model-validity warnings (defaults to stderr).
using WarnHandler = std::function<void(const std::string&)>;
void set_warning_handler(WarnHandler handler);

double tls_power_loss(double n_ph, const TlsPowerParams& p);

// BCS weak-coupling gap, Delta0 = 1.76 kB Tc (J).
double bcs_gap(double t_c);

// Thermal-quasiparticle conductivity ratios, valid for hbar omega, kB T << Delta0
// (a warning is emitted when either ratio exceeds 0.3):
//   sigma1/sigmaN = (4 Delta0 / hbar omega) exp(-Delta0/kB T) sinh(x) K0(x)
//   sigma2/sigmaN = pi Delta0 / (hbar omega),   x = hbar omega / (2 kB T)
double mb_sigma1_ratio(double omega, double t, double delta0);
double mb_sigma2_ratio(double omega, double delta0);

// lambda = sqrt(1/(mu0 omega sigma2)); omega cancels against sigma2 ~ 1/omega,
// leaving sqrt(hbar rho_n / (mu0 pi Delta0)). The omega argument is validated
// but does not affect the value.
double penetration_depth(double omega, const MaterialParams& mat);

// beta = 1 + (2d/lambda)/sinh(2d/lambda); 2 in the thin-film limit, 1 in bulk.
double thickness_factor(double d, double lambda);

// delta_QP = (2 alpha_k beta / pi) exp(-Delta0/kB T) sinh(x) K0(x).
double qp_loss(double omega, double t, const MaterialParams& mat);

double tls_temp_loss(double t, double omega, const TlsTempParams& p);

// Loss composition for a power-swept operating point (TLS saturation model).
LossBudget total_loss(double t, double n_ph, double omega,
                      const TlsPowerParams& p, const MaterialParams& mat);

// Loss composition for a temperature-swept operating point.
LossBudget total_loss(double t, double omega, const TlsTempParams& p,
                      const MaterialParams& mat);

} // namespace reslab::physics

#endif // RESLAB_PHYSICS_HPP
