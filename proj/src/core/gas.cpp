#include "core/gas.hpp"

namespace igfv {

bool cons_to_prim(const double* q, double* u, const GasModel& gas) {
    if (!gas.multi()) {
        const double rho = q[sv::rho];
        if (!(rho > 0.0)) return false;
        const double inv = 1.0 / rho;
        const double vx = q[sv::mx] * inv;
        const double vy = q[sv::my] * inv;
        const double vz = q[sv::mz] * inv;
        u[sv::rho] = rho;
        u[sv::u] = vx;
        u[sv::v] = vy;
        u[sv::w] = vz;
        u[sv::p] = (gas.gamma - 1.0) * (q[sv::en] - 0.5 * rho * (vx * vx + vy * vy + vz * vz));
        return true;
    }
    const double a1r1 = q[mv::a1r1];
    const double a2r2 = q[mv::a2r2];
    const double rho = a1r1 + a2r2;
    if (!(rho > 0.0)) return false;
    const double inv = 1.0 / rho;
    const double vx = q[mv::mx] * inv;
    const double vy = q[mv::my] * inv;
    const double alpha = q[mv::alpha];
    u[mv::a1r1] = a1r1;
    u[mv::a2r2] = a2r2;
    u[mv::u] = vx;
    u[mv::v] = vy;
    u[mv::alpha] = alpha;
    u[mv::p] = (q[mv::en] - 0.5 * rho * (vx * vx + vy * vy)) / mixture_energy_factor(alpha, gas);
    return true;
}

void prim_to_cons(const double* u, double* q, const GasModel& gas) {
    if (!gas.multi()) {
        const double rho = u[sv::rho];
        q[sv::rho] = rho;
        q[sv::mx] = rho * u[sv::u];
        q[sv::my] = rho * u[sv::v];
        q[sv::mz] = rho * u[sv::w];
        q[sv::en] = u[sv::p] / (gas.gamma - 1.0) +
                    0.5 * rho * (u[sv::u] * u[sv::u] + u[sv::v] * u[sv::v] + u[sv::w] * u[sv::w]);
        return;
    }
    const double rho = mixture_density(u);
    q[mv::a1r1] = u[mv::a1r1];
    q[mv::a2r2] = u[mv::a2r2];
    q[mv::mx] = rho * u[mv::u];
    q[mv::my] = rho * u[mv::v];
    q[mv::en] = u[mv::p] * mixture_energy_factor(u[mv::alpha], gas) +
                0.5 * rho * (u[mv::u] * u[mv::u] + u[mv::v] * u[mv::v]);
    q[mv::alpha] = u[mv::alpha];
}

double sound_speed(const double* u, const GasModel& gas) {
    if (!gas.multi()) return std::sqrt(gas.gamma * u[sv::p] / u[sv::rho]);
    const double rho = mixture_density(u);
    return std::sqrt(mixture_gamma(u[mv::alpha], gas) * u[mv::p] / rho);
}

void physical_flux(const double* u, int axis, double* f, const GasModel& gas) {
    if (!gas.multi()) {
        const double rho = u[sv::rho];
        const double un = u[sv::u + axis];
        const double p = u[sv::p];
        const double en = p / (gas.gamma - 1.0) +
                          0.5 * rho * (u[sv::u] * u[sv::u] + u[sv::v] * u[sv::v] + u[sv::w] * u[sv::w]);
        f[sv::rho] = rho * un;
        f[sv::mx] = rho * u[sv::u] * un;
        f[sv::my] = rho * u[sv::v] * un;
        f[sv::mz] = rho * u[sv::w] * un;
        f[sv::mx + axis] += p;
        f[sv::en] = (en + p) * un;
        return;
    }
    const double rho = mixture_density(u);
    const double un = u[mv::u + axis];
    const double p = u[mv::p];
    const double en = p * mixture_energy_factor(u[mv::alpha], gas) +
                      0.5 * rho * (u[mv::u] * u[mv::u] + u[mv::v] * u[mv::v]);
    f[mv::a1r1] = u[mv::a1r1] * un;
    f[mv::a2r2] = u[mv::a2r2] * un;
    f[mv::mx] = rho * u[mv::u] * un;
    f[mv::my] = rho * u[mv::v] * un;
    f[mv::mx + axis] += p;
    f[mv::en] = (en + p) * un;
    f[mv::alpha] = u[mv::alpha] * un;
}

bool state_admissible(const double* u, const GasModel& gas) {
    if (!gas.multi()) return u[sv::rho] > 0.0 && u[sv::p] > 0.0;
    // Partial densities may sit exactly at zero for pure-fluid states, so the
    // per-fluid checks trigger only on strictly negative values.
    if (u[mv::a1r1] < 0.0 || u[mv::a2r2] < 0.0) return false;
    if (!(u[mv::a1r1] + u[mv::a2r2] > 0.0)) return false;
    if (u[mv::alpha] < 0.0 || u[mv::alpha] > 1.0) return false;
    return u[mv::p] > 0.0;
}

} // namespace igfv
