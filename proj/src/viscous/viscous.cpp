#include "viscous/viscous.hpp"

namespace igfv {

void cell_viscous_fluxes(const Field& prim, const GradientField& grad, const GasModel& gas,
                         ViscousFluxField& out) {
    const Grid& g = prim.grid;
    const bool multi = gas.multi();
    const int vu = gas.vel0();
    const int vv = vu + 1;
    const bool ax = g.axis_active(0), ay = g.axis_active(1);
    if (g.axis_active(2)) throw ConfigError("viscous fluxes are implemented for 1D/2D only");

    out.grid = g;
    out.nvar = prim.nvar;
    const size_t sz = (size_t)prim.nvar * g.total_padded();
    out.f[0].assign(sz, 0.0);
    if (ay) out.f[1].assign(sz, 0.0);

    const int rx = ax ? 1 : 0, ry = ay ? 1 : 0;
    const int nx = g.n[0], ny = g.n[1];

#pragma omp parallel for schedule(static)
    for (int j = -ry; j < ny + ry; ++j) {
        for (int i = -rx; i < nx + rx; ++i) {
            const bool xrim = (i < 0 || i >= nx);
            const bool yrim = (j < 0 || j >= ny);
            if (xrim && yrim) continue; // corner rim never feeds a face rule
            const long idx = prim.cell_index(i, j, 0);

            const double u = prim.var(vu)[idx];
            const double v = ay ? prim.var(vv)[idx] : 0.0;
            const double ux = grad.qp[0].empty() ? 0.0 : grad.dq(0, vu)[idx];
            const double vx = ay ? grad.dq(0, vv)[idx] : 0.0;
            const double uy = ay ? grad.dq(1, vu)[idx] : 0.0;
            const double vy = ay ? grad.dq(1, vv)[idx] : 0.0;

            double txx, txy, tyy;
            stress_tensor(ux, uy, vx, vy, gas.mu, txx, txy, tyy);

            double qx = 0.0, qy = 0.0;
            if (!multi) {
                const double rho = prim.var(sv::rho)[idx];
                const double p = prim.var(sv::p)[idx];
                const double drdx = grad.dq(0, sv::rho)[idx];
                const double dpdx = grad.dq(0, sv::p)[idx];
                const double drdy = ay ? grad.dq(1, sv::rho)[idx] : 0.0;
                const double dpdy = ay ? grad.dq(1, sv::p)[idx] : 0.0;
                heat_flux(dpdx, dpdy, drdx, drdy, rho, p, gas, qx, qy);
            }

            const int mrow = multi ? mv::mx : sv::mx;
            const int erow = multi ? mv::en : sv::en;
            out.dir(0, mrow)[idx] = -txx;
            out.dir(0, mrow + 1)[idx] = -txy;
            out.dir(0, erow)[idx] = -txx * u - txy * v + qx;
            if (ay) {
                out.dir(1, mrow)[idx] = -txy;
                out.dir(1, mrow + 1)[idx] = -tyy;
                out.dir(1, erow)[idx] = -txy * u - tyy * v + qy;
            }
        }
    }
}

void interpolate_flux_to_faces(const double* v, int n, int gv, bool periodic, double* face) {
    if (n < 4) throw ConfigError("flux interpolation needs at least 4 cells");
    auto cell = [&](int c) { return v[c + gv]; };
    if (periodic) {
        for (int k = 0; k < n; ++k)
            face[k] = (cell(k - 3) - 8.0 * cell(k - 2) + 37.0 * cell(k - 1) + 37.0 * cell(k) -
                       8.0 * cell(k + 1) + cell(k + 2)) /
                      60.0;
        face[n] = face[0];
        return;
    }
    for (int k = 0; k <= n; ++k) {
        if (k == 0 || k == n) {
            face[k] = 0.5 * (cell(k - 1) + cell(k));
        } else if (k <= 2 || k >= n - 2) {
            face[k] = (-cell(k - 2) + 7.0 * cell(k - 1) + 7.0 * cell(k) - cell(k + 1)) / 12.0;
        } else {
            face[k] = (cell(k - 3) - 8.0 * cell(k - 2) + 37.0 * cell(k - 1) + 37.0 * cell(k) -
                       8.0 * cell(k + 1) + cell(k + 2)) /
                      60.0;
        }
    }
}

void explicit_gradient_4e_line(const double* u, int g, double h, int lo, int hi, double* out) {
    const double c1 = 8.0 / (12.0 * h), c2 = 1.0 / (12.0 * h);
    for (int c = lo; c <= hi; ++c)
        out[c + g] = c1 * (u[c + 1 + g] - u[c - 1 + g]) - c2 * (u[c + 2 + g] - u[c - 2 + g]);
}

namespace {

// Mirror parity of a variable across a wall: +1 for scalars, -1 for the
// velocity components a wall reflects.
int mirror_sign(BcTag tag, int v, int normal_slot, const GasModel& gas) {
    const int v0 = gas.vel0();
    switch (tag) {
    case BcTag::reflective_wall:
        return v == normal_slot ? -1 : 1;
    case BcTag::noslip_wall:
        return (v >= v0 && v < v0 + gas.nvel()) ? -1 : 1;
    default:
        return 1; // outflow/dirichlet rim copies the interior gradient
    }
}

} // namespace

void extend_gradient_rim(GradientField& gf, const GasModel& gas) {
    const Grid& g = gf.grid;
    const int nvar = gf.nvar;
    for (int axis = 0; axis < 2; ++axis) {
        if (!g.axis_active(axis)) continue;
        const int n = g.n[axis];
        const int tr = 1 - axis; // transverse axis (2D at most)
        const int ntr = g.axis_active(tr) ? g.n[tr] : 1;
        for (int side = 0; side < 2; ++side) {
            const BcTag tag = g.bc[2 * axis + side].tag;
            const int ghost_c = side == 0 ? -1 : n;
            const int mirror_c = (tag == BcTag::periodic) ? (side == 0 ? n - 1 : 0)
                                                          : (side == 0 ? 0 : n - 1);
            for (int t = 0; t < ntr; ++t) {
                int gi[3] = {0, 0, 0}, mi[3] = {0, 0, 0};
                gi[axis] = ghost_c;
                mi[axis] = mirror_c;
                gi[tr] = mi[tr] = t;
                for (int dgrad = 0; dgrad < 2; ++dgrad) {
                    if (gf.qp[dgrad].empty()) continue;
                    for (int v = 0; v < nvar; ++v) {
                        double s = 1.0;
                        if (tag != BcTag::periodic) {
                            const int sv_ = mirror_sign(tag, v, gas.vel0() + axis, gas);
                            s = (dgrad == axis) ? -sv_ : sv_;
                        }
                        GradientField& G = gf;
                        G.dq(dgrad, v)[gfield_index(G, gi[0], gi[1], gi[2])] =
                            s * G.dq(dgrad, v)[gfield_index(G, mi[0], mi[1], mi[2])];
                    }
                }
            }
        }
    }
}

void explicit_gradients_all(const Field& prim, GradientField& out) {
    const Grid& g = prim.grid;
    out.grid = g;
    out.nvar = prim.nvar;
    out.with_second = false;
    const size_t sz = (size_t)prim.nvar * g.total_padded();
    const long strides[3] = {1, g.pad(0), (long)g.pad(0) * g.pad(1)};
    if (g.axis_active(2)) throw ConfigError("explicit gradients are implemented for 1D/2D only");

    for (int axis = 0; axis < 2; ++axis) {
        if (!g.axis_active(axis)) continue;
        out.qp[axis].assign(sz, 0.0);
        const int tr = 1 - axis;
        const int rim_tr = g.axis_active(tr) ? 1 : 0;
        const int lo_t = -rim_tr, hi_t = (g.axis_active(tr) ? g.n[tr] : 1) + rim_tr - 1;
        const double c1 = 8.0 / (12.0 * g.h[axis]), c2 = 1.0 / (12.0 * g.h[axis]);
        const long s = strides[axis];
#pragma omp parallel for schedule(static)
        for (int t = lo_t; t <= hi_t; ++t) {
            int idx0[3] = {0, 0, 0};
            idx0[tr] = t;
            const long base = prim.cell_index(idx0[0], idx0[1], idx0[2]);
            for (int v = 0; v < prim.nvar; ++v) {
                const double* u = prim.var(v) + base;
                double* dq = out.qp[axis].data() + (size_t)v * g.total_padded() + base;
                for (int c = -1; c <= g.n[axis]; ++c)
                    dq[c * s] = c1 * (u[(c + 1) * s] - u[(c - 1) * s]) -
                                c2 * (u[(c + 2) * s] - u[(c - 2) * s]);
            }
        }
    }
}

} // namespace igfv
