#ifndef IGFV_VISCOUS_VISCOUS_HPP
#define IGFV_VISCOUS_VISCOUS_HPP

#include "core/field.hpp"
#include "gradients/compact.hpp"

namespace igfv {

// Newtonian deviatoric stress with Stokes' hypothesis (2D velocity field).
inline void stress_tensor(double ux, double uy, double vx, double vy, double mu, double& txx,
                          double& txy, double& tyy) {
    txx = (2.0 / 3.0) * mu * (2.0 * ux - vy);
    txy = mu * (uy + vx);
    tyy = (2.0 / 3.0) * mu * (2.0 * vy - ux);
}

// Fourier heat flux with the temperature gradient rebuilt from the pressure
// and density gradients: dT = dp/rho - p drho/rho^2.
inline void heat_flux(double dpdx, double dpdy, double drdx, double drdy, double rho, double p,
                      const GasModel& gas, double& qx, double& qy) {
    const double k = gas.gamma * gas.mu / (gas.pr * (gas.gamma - 1.0));
    const double ir = 1.0 / rho;
    qx = -k * (dpdx * ir - p * drdx * ir * ir);
    qy = -k * (dpdy * ir - p * drdy * ir * ir);
}

// Cell-centered viscous flux vectors in the x and y directions (mass and
// volume-fraction rows are identically zero; the two-fluid model carries no
// heat-flux contribution).
struct ViscousFluxField {
    Grid grid;
    int nvar = 0;
    std::array<std::vector<double>, 2> f; // padded layout per direction

    double* dir(int axis, int v) { return f[axis].data() + (size_t)v * grid.total_padded(); }
    const double* dir(int axis, int v) const {
        return f[axis].data() + (size_t)v * grid.total_padded();
    }
};

// Assemble the viscous fluxes at every physical cell plus a one-cell rim
// along non-corner ghost positions (the rim feeds the near-boundary
// interpolation rules). Gradients must already carry rim values.
void cell_viscous_fluxes(const Field& prim, const GradientField& grad, const GasModel& gas,
                         ViscousFluxField& out);

// Interpolate a line of cell-centered flux values to its n+1 faces:
// six-point rule in the interior, four-point within two cells of a
// non-periodic boundary, two-point average at the outermost faces.
// v is padded with gv ghost entries per side (gv >= 3 when periodic,
// gv >= 1 otherwise).
void interpolate_flux_to_faces(const double* v, int n, int gv, bool periodic, double* face);

// Fourth-order explicit central first derivative (comparison gradient mode).
// Writes cells [lo, hi] of the padded output; the stencil reads two ghosts.
void explicit_gradient_4e_line(const double* u, int g, double h, int lo, int hi, double* out);

// Mirror/copy the first-derivative fields into the one-cell ghost rim so the
// boundary interpolation rules see boundary-consistent values.
void extend_gradient_rim(GradientField& gf, const GasModel& gas);

// First derivatives of all variables by the explicit fourth-order formula
// (used by the explicit-gradient viscous mode), physical cells plus rim.
void explicit_gradients_all(const Field& prim, GradientField& out);

} // namespace igfv

#endif
