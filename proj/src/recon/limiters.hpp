#ifndef IGFV_RECON_LIMITERS_HPP
#define IGFV_RECON_LIMITERS_HPP

#include <algorithm>
#include <cmath>

namespace igfv {

inline double sgn(double a) { return (a > 0.0) - (a < 0.0); }

inline double minmod2(double a, double b) {
    return 0.5 * (sgn(a) + sgn(b)) * std::min(std::abs(a), std::abs(b));
}

// Zero unless all four arguments share a sign; then the minimum magnitude.
inline double minmod4(double a, double b, double c, double d) {
    const double s = sgn(a);
    if (s == 0.0 || sgn(b) != s || sgn(c) != s || sgn(d) != s) return 0.0;
    return s * std::min(std::min(std::abs(a), std::abs(b)), std::min(std::abs(c), std::abs(d)));
}

// Fifth-order monotonicity-preserving face value from the five-cell stencil
// (q0..q4, upwind to downwind, face between q2 and q3). alpha is the
// monotonicity parameter, eps the smooth-region switching threshold.
inline double mp5_face(double q0, double q1, double q2, double q3, double q4, double alpha,
                       double eps) {
    const double ul = (2.0 * q0 - 13.0 * q1 + 47.0 * q2 + 27.0 * q3 - 3.0 * q4) / 60.0;
    const double ump = q2 + minmod2(q3 - q2, alpha * (q2 - q1));
    if ((ul - q2) * (ul - ump) <= eps) return ul;

    const double dm1 = q0 - 2.0 * q1 + q2;
    const double d0 = q1 - 2.0 * q2 + q3;
    const double dp1 = q2 - 2.0 * q3 + q4;
    const double dMp = minmod4(4.0 * d0 - dp1, 4.0 * dp1 - d0, d0, dp1);
    const double dMm = minmod4(4.0 * dm1 - d0, 4.0 * d0 - dm1, dm1, d0);

    const double uul = q2 + alpha * (q2 - q1);
    const double uav = 0.5 * (q2 + q3);
    const double umd = uav - 0.5 * dMp;
    const double ulc = q2 + 0.5 * (q2 - q1) + (4.0 / 3.0) * dMm;

    const double umin =
        std::max(std::min(q2, std::min(q3, umd)), std::min(q2, std::min(uul, ulc)));
    const double umax =
        std::min(std::max(q2, std::max(q3, umd)), std::max(q2, std::max(uul, ulc)));

    return ul + minmod2(umin - ul, umax - ul);
}

// Unlimited third-order kappa reconstruction (kappa = 1/3) from the
// three-cell stencil around cell c.
inline double muscl_left(double um1, double u0, double up1) {
    return (-um1 + 5.0 * u0 + 2.0 * up1) / 6.0;
}
inline double muscl_right(double um1, double u0, double up1) {
    return (2.0 * um1 + 5.0 * u0 - up1) / 6.0;
}

// Interface values from the cell value and nondimensional derivatives
// (hd = h * dU/dx, h2dd = h^2 * d2U/dx2); kappa = 1/3 baked in.
inline double ig_left(double u, double hd, double h2dd) { return u + 0.5 * hd + h2dd / 12.0; }
inline double ig_right(double u, double hd, double h2dd) { return u - 0.5 * hd + h2dd / 12.0; }

} // namespace igfv

#endif
