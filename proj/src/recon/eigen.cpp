#include "recon/eigen.hpp"

#include <cmath>

namespace igfv {

void eigen_averages(const double* uL, const double* uR, int axis, const GasModel& gas,
                    EigenSystem& es) {
    es.axis = axis;
    es.nvar = gas.nvar();

    if (!gas.multi()) {
        // Roe averages of velocity and total enthalpy; geometric-mean density.
        const double rl = uL[sv::rho], rr = uR[sv::rho];
        if (!(rl > 0.0 && rr > 0.0)) throw NumericalError("eigensystem: nonpositive density");
        const double wl = std::sqrt(rl), wr = std::sqrt(rr);
        const double inv = 1.0 / (wl + wr);
        double v2 = 0.0;
        for (int a = 0; a < 3; ++a) {
            const double va = (wl * uL[sv::u + a] + wr * uR[sv::u + a]) * inv;
            v2 += va * va;
        }
        auto enthalpy = [&](const double* u) {
            const double ke =
                0.5 * (u[sv::u] * u[sv::u] + u[sv::v] * u[sv::v] + u[sv::w] * u[sv::w]);
            return gas.gamma / (gas.gamma - 1.0) * u[sv::p] / u[sv::rho] + ke;
        };
        const double H = (wl * enthalpy(uL) + wr * enthalpy(uR)) * inv;
        const double c2 = (gas.gamma - 1.0) * (H - 0.5 * v2);
        if (!(c2 > 0.0)) throw NumericalError("eigensystem: nonpositive averaged sound speed");
        es.rho = wl * wr;
        es.c = std::sqrt(c2);
        return;
    }

    const double rl = mixture_density(uL), rr = mixture_density(uR);
    if (!(rl > 0.0 && rr > 0.0)) throw NumericalError("eigensystem: nonpositive density");
    es.rho = 0.5 * (rl + rr);
    es.a1r1 = 0.5 * (uL[mv::a1r1] + uR[mv::a1r1]);
    es.a2r2 = 0.5 * (uL[mv::a2r2] + uR[mv::a2r2]);
    es.c = 0.5 * (sound_speed(uL, gas) + sound_speed(uR, gas));
    if (!(es.c > 0.0)) throw NumericalError("eigensystem: nonpositive averaged sound speed");
}

EigenSystem build_eigensystem(const double* uL, const double* uR, int axis, const GasModel& gas) {
    EigenSystem es;
    eigen_averages(uL, uR, axis, gas, es);

    if (!gas.multi()) {
        const int d = axis;
        const int t1 = (d == 0) ? 1 : 0;
        const int t2 = (d == 2) ? 1 : 2;
        const int n = 5;
        auto L = [&](int r, int col) -> double& { return es.L[r * n + col]; };
        auto R = [&](int r, int col) -> double& { return es.R[r * n + col]; };
        const double A = 0.5 * es.rho / es.c;
        const double B = 0.5 / (es.c * es.c);
        L(0, sv::u + d) = -A;
        L(0, sv::p) = B;
        L(1, sv::rho) = 1.0;
        L(1, sv::p) = -2.0 * B;
        L(2, sv::u + d) = A;
        L(2, sv::p) = B;
        L(3, sv::u + t1) = es.rho;
        L(4, sv::u + t2) = es.rho;

        R(sv::rho, 0) = 1.0;
        R(sv::rho, 1) = 1.0;
        R(sv::rho, 2) = 1.0;
        R(sv::u + d, 0) = -es.c / es.rho;
        R(sv::u + d, 2) = es.c / es.rho;
        R(sv::u + t1, 3) = 1.0 / es.rho;
        R(sv::u + t2, 4) = 1.0 / es.rho;
        R(sv::p, 0) = es.c * es.c;
        R(sv::p, 2) = es.c * es.c;
        return es;
    }

    const int d = axis;
    const int t = 1 - d;
    const int n = 6;
    auto L = [&](int r, int col) -> double& { return es.L[r * n + col]; };
    auto R = [&](int r, int col) -> double& { return es.R[r * n + col]; };
    const double cr = es.c * es.rho;
    const double f1 = es.a1r1 / (es.c * es.c * es.rho);
    const double f2 = es.a2r2 / (es.c * es.c * es.rho);
    L(0, mv::u + d) = -0.5 * cr;
    L(0, mv::p) = 0.5;
    L(1, mv::a1r1) = 1.0;
    L(1, mv::p) = -f1;
    L(2, mv::a2r2) = 1.0;
    L(2, mv::p) = -f2;
    L(3, mv::u + t) = 1.0;
    L(4, mv::alpha) = 1.0;
    L(5, mv::u + d) = 0.5 * cr;
    L(5, mv::p) = 0.5;

    R(mv::a1r1, 0) = f1;
    R(mv::a1r1, 1) = 1.0;
    R(mv::a1r1, 5) = f1;
    R(mv::a2r2, 0) = f2;
    R(mv::a2r2, 2) = 1.0;
    R(mv::a2r2, 5) = f2;
    R(mv::u + d, 0) = -1.0 / cr;
    R(mv::u + d, 5) = 1.0 / cr;
    R(mv::u + t, 3) = 1.0;
    R(mv::p, 0) = 1.0;
    R(mv::p, 5) = 1.0;
    R(mv::alpha, 4) = 1.0;
    return es;
}

} // namespace igfv
