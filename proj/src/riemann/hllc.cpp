#include "riemann/hllc.hpp"

#include <cmath>

namespace igfv {

namespace {

constexpr double degenerate_tol = 1e-12;

// Averaged normal velocity and sound speed for the outer wave estimates.
void averaged_signal(const double* uL, const double* uR, int axis, const GasModel& gas,
                     double& ut, double& ct) {
    if (!gas.multi()) {
        const double wl = std::sqrt(uL[sv::rho]), wr = std::sqrt(uR[sv::rho]);
        const double inv = 1.0 / (wl + wr);
        double v2 = 0.0, vel[3];
        for (int a = 0; a < 3; ++a) {
            vel[a] = (wl * uL[sv::u + a] + wr * uR[sv::u + a]) * inv;
            v2 += vel[a] * vel[a];
        }
        auto enthalpy = [&](const double* u) {
            const double ke =
                0.5 * (u[sv::u] * u[sv::u] + u[sv::v] * u[sv::v] + u[sv::w] * u[sv::w]);
            return gas.gamma / (gas.gamma - 1.0) * u[sv::p] / u[sv::rho] + ke;
        };
        const double H = (wl * enthalpy(uL) + wr * enthalpy(uR)) * inv;
        const double c2 = (gas.gamma - 1.0) * (H - 0.5 * v2);
        if (!(c2 > 0.0)) throw NumericalError("wave speeds: nonpositive averaged sound speed");
        ut = vel[axis];
        ct = std::sqrt(c2);
        return;
    }
    ut = 0.5 * (uL[mv::u + axis] + uR[mv::u + axis]);
    ct = 0.5 * (sound_speed(uL, gas) + sound_speed(uR, gas));
}

} // namespace

WaveSpeeds wave_speeds(const double* uL, const double* uR, int axis, const GasModel& gas) {
    const bool multi = gas.multi();
    const double rl = multi ? mixture_density(uL) : uL[sv::rho];
    const double rr = multi ? mixture_density(uR) : uR[sv::rho];
    if (!(rl > 0.0 && rr > 0.0)) throw NumericalError("wave speeds: nonpositive density");
    const int v0 = gas.vel0();
    const double unl = uL[v0 + axis], unr = uR[v0 + axis];
    const double pl = multi ? uL[mv::p] : uL[sv::p];
    const double pr = multi ? uR[mv::p] : uR[sv::p];
    const double cl = sound_speed(uL, gas), cr = sound_speed(uR, gas);

    double ut, ct;
    averaged_signal(uL, uR, axis, gas, ut, ct);

    WaveSpeeds ws;
    ws.sl = std::min(unl - cl, ut - ct);
    ws.sr = std::max(unr + cr, ut + ct);
    ws.sstar = (pr - pl + rl * unl * (ws.sl - unl) - rr * unr * (ws.sr - unr)) /
               (rl * (ws.sl - unl) - rr * (ws.sr - unr));
    return ws;
}

void hllc_flux(const double* uL, const double* uR, int axis, const GasModel& gas, double* flux,
               double* ustar_out) {
    const WaveSpeeds ws = wave_speeds(uL, uR, axis, gas);
    const bool multi = gas.multi();
    const int nv = gas.nvar();
    const int v0 = gas.vel0();

    if (ustar_out) {
        const double unl = uL[v0 + axis], unr = uR[v0 + axis];
        const double sm = std::min(0.0, ws.sl), sp = std::max(0.0, ws.sr);
        double bl = unl, br = unr;
        if (sm != 0.0 && std::abs(ws.sl - ws.sstar) > degenerate_tol)
            bl += sm * ((ws.sl - unl) / (ws.sl - ws.sstar) - 1.0);
        if (sp != 0.0 && std::abs(ws.sr - ws.sstar) > degenerate_tol)
            br += sp * ((ws.sr - unr) / (ws.sr - ws.sstar) - 1.0);
        const double sg = sgn(ws.sstar);
        *ustar_out = 0.5 * (1.0 + sg) * bl + 0.5 * (1.0 - sg) * br;
    }

    if (ws.sl >= 0.0) {
        physical_flux(uL, axis, flux, gas);
        return;
    }
    if (ws.sr <= 0.0) {
        physical_flux(uR, axis, flux, gas);
        return;
    }

    const bool left_star = (ws.sstar >= 0.0);
    const double* u = left_star ? uL : uR;
    const double sk = left_star ? ws.sl : ws.sr;
    physical_flux(u, axis, flux, gas);
    if (std::abs(sk - ws.sstar) <= degenerate_tol) return; // star region collapsed

    const double un = u[v0 + axis];
    const double chi = (sk - un) / (sk - ws.sstar);
    double q[max_nvar], qstar[max_nvar];
    prim_to_cons(u, q, gas);

    if (!multi) {
        const double rho = u[sv::rho];
        qstar[sv::rho] = chi * rho;
        for (int a = 0; a < 3; ++a) qstar[sv::mx + a] = chi * rho * u[sv::u + a];
        qstar[sv::mx + axis] = chi * rho * ws.sstar;
        qstar[sv::en] =
            chi * (q[sv::en] + (ws.sstar - un) * (rho * ws.sstar + u[sv::p] / (sk - un)));
    } else {
        const double rho = mixture_density(u);
        qstar[mv::a1r1] = chi * u[mv::a1r1];
        qstar[mv::a2r2] = chi * u[mv::a2r2];
        qstar[mv::mx] = chi * rho * u[mv::u];
        qstar[mv::my] = chi * rho * u[mv::v];
        qstar[mv::mx + axis] = chi * rho * ws.sstar;
        qstar[mv::en] =
            chi * (q[mv::en] + (ws.sstar - un) * (rho * ws.sstar + u[mv::p] / (sk - un)));
        qstar[mv::alpha] = chi * u[mv::alpha];
    }
    for (int v = 0; v < nv; ++v) flux[v] += sk * (qstar[v] - q[v]);
}

double interface_velocity(const double* uL, const double* uR, int axis, const GasModel& gas) {
    const WaveSpeeds ws = wave_speeds(uL, uR, axis, gas);
    const int v0 = gas.vel0();
    const double unl = uL[v0 + axis], unr = uR[v0 + axis];
    const double sm = std::min(0.0, ws.sl), sp = std::max(0.0, ws.sr);
    double bl = unl, br = unr;
    if (sm != 0.0 && std::abs(ws.sl - ws.sstar) > degenerate_tol)
        bl += sm * ((ws.sl - unl) / (ws.sl - ws.sstar) - 1.0);
    if (sp != 0.0 && std::abs(ws.sr - ws.sstar) > degenerate_tol)
        br += sp * ((ws.sr - unr) / (ws.sr - ws.sstar) - 1.0);
    const double sg = sgn(ws.sstar);
    return 0.5 * (1.0 + sg) * bl + 0.5 * (1.0 - sg) * br;
}

void compute_line_fluxes(const LineInput& in, const LinePair& pair, const GasModel& gas,
                         double* flux, double* ustar) {
    const int n = in.n;
    const int nf = n + 1;
    const int nv = in.nvar;
    const int klast = in.periodic ? n - 1 : n;
    double ul[max_nvar], ur[max_nvar];
    for (int k = 0; k <= klast; ++k) {
        for (int v = 0; v < nv; ++v) {
            ul[v] = pair.l(v, k);
            ur[v] = pair.r(v, k);
        }
        double fbuf[max_nvar];
        double us = 0.0;
        hllc_flux(ul, ur, in.axis, gas, fbuf, ustar ? &us : nullptr);
        for (int v = 0; v < nv; ++v) flux[(size_t)v * nf + k] = fbuf[v];
        if (ustar) ustar[k] = us;
    }
    if (in.periodic) {
        for (int v = 0; v < nv; ++v) flux[(size_t)v * nf + n] = flux[(size_t)v * nf];
        if (ustar) ustar[n] = ustar[0];
    }
}

} // namespace igfv
