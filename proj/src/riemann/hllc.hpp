#ifndef IGFV_RIEMANN_HLLC_HPP
#define IGFV_RIEMANN_HLLC_HPP

#include "core/gas.hpp"
#include "recon/sweep.hpp"

namespace igfv {

// Outer signal speeds and the contact speed at a face.
struct WaveSpeeds {
    double sl = 0.0, sr = 0.0, sstar = 0.0;
};

// Einfeldt-style estimates: the outer speeds bound the one-sided
// characteristic speeds and the averaged ones (Roe averages for the
// single-species model, arithmetic for the two-fluid model); the contact
// speed follows the closed-form expression of Batten et al.
WaveSpeeds wave_speeds(const double* uL, const double* uR, int axis, const GasModel& gas);

// Three-wave HLLC flux from left/right primitive states in the face-normal
// frame of the given axis (tangential momentum is passively transported).
// When ustar is non-null it also receives the HLLC-consistent interface
// velocity used by the non-conservative volume-fraction source.
void hllc_flux(const double* uL, const double* uR, int axis, const GasModel& gas, double* flux,
               double* ustar = nullptr);

// Interface normal velocity alone (two-fluid source term).
double interface_velocity(const double* uL, const double* uR, int axis, const GasModel& gas);

// HLLC fluxes at every face of a reconstructed line. flux is nvar x (n+1);
// ustar (may be null for single-species) receives n+1 interface velocities.
void compute_line_fluxes(const LineInput& in, const LinePair& pair, const GasModel& gas,
                         double* flux, double* ustar);

} // namespace igfv

#endif
