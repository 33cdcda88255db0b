#ifndef IGFV_CORE_GAS_HPP
#define IGFV_CORE_GAS_HPP

#include <array>
#include <cmath>

namespace igfv {

enum class FlowModel { single_species, two_fluid };

// Equation-of-state parameters. Single-species carries (gamma, mu, pr);
// the two-fluid mixture carries per-fluid gammas and a shared viscosity.
struct GasModel {
    FlowModel model = FlowModel::single_species;
    double gamma = 1.4;
    double mu = 0.0;
    double pr = 0.73;
    double gamma1 = 1.4;
    double gamma2 = 1.6;

    bool multi() const { return model == FlowModel::two_fluid; }
    int nvar() const { return multi() ? 6 : 5; }

    // First velocity slot in the primitive/conservative layouts below.
    int vel0() const { return multi() ? 2 : 1; }
    int nvel() const { return multi() ? 2 : 3; }
};

// Variable layouts (fixed slot order, shared by Field and the sweep kernels).
//   single primitive:    rho, u, v, w, p
//   single conservative: rho, rho u, rho v, rho w, E
//   multi primitive:     a1r1, a2r2, u, v, p, alpha1
//   multi conservative:  a1r1, a2r2, rho u, rho v, E, alpha1
namespace sv {
inline constexpr int rho = 0, u = 1, v = 2, w = 3, p = 4;
inline constexpr int mx = 1, my = 2, mz = 3, en = 4;
} // namespace sv
namespace mv {
inline constexpr int a1r1 = 0, a2r2 = 1, u = 2, v = 3, p = 4, alpha = 5;
inline constexpr int mx = 2, my = 3, en = 4;
} // namespace mv

inline constexpr int max_nvar = 6;
using StateVec = std::array<double, max_nvar>;

// Harmonic blend of the two-fluid ratios of specific heats.
inline double mixture_gamma(double alpha1, const GasModel& gas) {
    const double g = alpha1 / (gas.gamma1 - 1.0) + (1.0 - alpha1) / (gas.gamma2 - 1.0);
    return 1.0 + 1.0 / g;
}

// 1/(gamma-1) as a function of alpha1; linear in alpha1, which is what makes
// the isobaric closure preserve pressure equilibrium across interfaces.
inline double mixture_energy_factor(double alpha1, const GasModel& gas) {
    return alpha1 / (gas.gamma1 - 1.0) + (1.0 - alpha1) / (gas.gamma2 - 1.0);
}

inline double mixture_density(const double* up) { return up[mv::a1r1] + up[mv::a2r2]; }

// Conservative -> primitive. Returns false on nonpositive density; the caller
// decides whether that is fatal. Pressure is produced as-is (may be <= 0 for
// invalid inputs; positivity is the caller's check).
bool cons_to_prim(const double* q, double* u, const GasModel& gas);

// Exact algebraic inverse of cons_to_prim.
void prim_to_cons(const double* u, double* q, const GasModel& gas);

double sound_speed(const double* u, const GasModel& gas);

// Physical convective flux along axis d evaluated from a primitive state.
void physical_flux(const double* u, int axis, double* f, const GasModel& gas);

// Positivity / boundedness test for a reconstructed primitive state.
bool state_admissible(const double* u, const GasModel& gas);

} // namespace igfv

#endif
