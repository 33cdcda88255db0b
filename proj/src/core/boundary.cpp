#include "core/boundary.hpp"

namespace igfv {

namespace {

struct Idx {
    int i, j, k;
};

// Writes one ghost cell from its rule. "mirror" is the interior cell the
// reflective variants read from, "near" the nearest interior cell.
void fill_cell(Field& f, const GasModel& gas, const BoundaryCondition& bc, int axis,
               Idx ghost, Idx mirror, Idx near, double x, double t) {
    const int nvar = f.nvar;
    const int v0 = gas.vel0();
    const int vn = v0 + axis; // wall-normal velocity slot

    switch (bc.tag) {
    case BcTag::outflow:
        for (int v = 0; v < nvar; ++v)
            f.at(v, ghost.i, ghost.j, ghost.k) = f.at(v, near.i, near.j, near.k);
        return;
    case BcTag::dirichlet:
        for (int v = 0; v < nvar; ++v) f.at(v, ghost.i, ghost.j, ghost.k) = bc.state[v];
        return;
    case BcTag::reflective_wall:
        for (int v = 0; v < nvar; ++v) {
            double val = f.at(v, mirror.i, mirror.j, mirror.k);
            if (v == vn) val = -val;
            f.at(v, ghost.i, ghost.j, ghost.k) = val;
        }
        return;
    case BcTag::noslip_wall:
        for (int v = 0; v < nvar; ++v) {
            double val = f.at(v, mirror.i, mirror.j, mirror.k);
            if (v >= v0 && v < v0 + gas.nvel()) val = 2.0 * bc.wall_velocity[v - v0] - val;
            f.at(v, ghost.i, ghost.j, ghost.k) = val;
        }
        return;
    case BcTag::dmr_top: {
        const double xs = bc.shock_x0 + bc.shock_speed * t;
        const StateVec& s = (x < xs) ? bc.state : bc.state2;
        for (int v = 0; v < nvar; ++v) f.at(v, ghost.i, ghost.j, ghost.k) = s[v];
        return;
    }
    case BcTag::dmr_bottom:
        if (x < bc.split_x) {
            for (int v = 0; v < nvar; ++v) f.at(v, ghost.i, ghost.j, ghost.k) = bc.state[v];
        } else {
            for (int v = 0; v < nvar; ++v) {
                double val = f.at(v, mirror.i, mirror.j, mirror.k);
                if (v == vn) val = -val;
                f.at(v, ghost.i, ghost.j, ghost.k) = val;
            }
        }
        return;
    case BcTag::periodic:
        // handled by the caller (pure index wrap)
        return;
    }
}

} // namespace

void apply_boundary_conditions(Field& f, const GasModel& gas, double t) {
    const Grid& g = f.grid;
    const int gh = g.ghost;
    const int nx = g.n[0], ny = g.n[1], nz = g.n[2];
    const int nvar = f.nvar;

    // x pass over physical rows, then y over x-padded rows, then z over the
    // full plane: corner ghosts compose the two adjacent rules.
    const bool ax = g.axis_active(0), ay = g.axis_active(1), az = g.axis_active(2);

    auto wrap = [&](int v, Idx dst, Idx src) {
        f.at(v, dst.i, dst.j, dst.k) = f.at(v, src.i, src.j, src.k);
    };

    if (ax) {
        for (int k = 0; k < nz; ++k)
            for (int j = 0; j < ny; ++j)
                for (int d = 0; d < gh; ++d) {
                    const BoundaryCondition& lo = g.bc[0];
                    const BoundaryCondition& hi = g.bc[1];
                    if (lo.tag == BcTag::periodic) {
                        for (int v = 0; v < nvar; ++v) wrap(v, {-1 - d, j, k}, {nx - 1 - d, j, k});
                    } else {
                        fill_cell(f, gas, lo, 0, {-1 - d, j, k}, {d, j, k}, {0, j, k},
                                  g.center(0, -1 - d), t);
                    }
                    if (hi.tag == BcTag::periodic) {
                        for (int v = 0; v < nvar; ++v) wrap(v, {nx + d, j, k}, {d, j, k});
                    } else {
                        fill_cell(f, gas, hi, 0, {nx + d, j, k}, {nx - 1 - d, j, k}, {nx - 1, j, k},
                                  g.center(0, nx + d), t);
                    }
                }
    }
    if (ay) {
        const int ilo = ax ? -gh : 0, ihi = ax ? nx + gh : 1;
        for (int k = 0; k < nz; ++k)
            for (int i = ilo; i < ihi; ++i)
                for (int d = 0; d < gh; ++d) {
                    const BoundaryCondition& lo = g.bc[2];
                    const BoundaryCondition& hi = g.bc[3];
                    const double x = g.center(0, i);
                    if (lo.tag == BcTag::periodic) {
                        for (int v = 0; v < nvar; ++v) wrap(v, {i, -1 - d, k}, {i, ny - 1 - d, k});
                    } else {
                        fill_cell(f, gas, lo, 1, {i, -1 - d, k}, {i, d, k}, {i, 0, k}, x, t);
                    }
                    if (hi.tag == BcTag::periodic) {
                        for (int v = 0; v < nvar; ++v) wrap(v, {i, ny + d, k}, {i, d, k});
                    } else {
                        fill_cell(f, gas, hi, 1, {i, ny + d, k}, {i, ny - 1 - d, k}, {i, ny - 1, k}, x, t);
                    }
                }
    }
    if (az) {
        const int ilo = ax ? -gh : 0, ihi = ax ? nx + gh : 1;
        const int jlo = ay ? -gh : 0, jhi = ay ? ny + gh : 1;
        for (int j = jlo; j < jhi; ++j)
            for (int i = ilo; i < ihi; ++i)
                for (int d = 0; d < gh; ++d) {
                    const BoundaryCondition& lo = g.bc[4];
                    const BoundaryCondition& hi = g.bc[5];
                    const double x = g.center(0, i);
                    if (lo.tag == BcTag::periodic) {
                        for (int v = 0; v < nvar; ++v) wrap(v, {i, j, -1 - d}, {i, j, nz - 1 - d});
                    } else {
                        fill_cell(f, gas, lo, 2, {i, j, -1 - d}, {i, j, d}, {i, j, 0}, x, t);
                    }
                    if (hi.tag == BcTag::periodic) {
                        for (int v = 0; v < nvar; ++v) wrap(v, {i, j, nz + d}, {i, j, d});
                    } else {
                        fill_cell(f, gas, hi, 2, {i, j, nz + d}, {i, j, nz - 1 - d}, {i, j, nz - 1}, x, t);
                    }
                }
    }
}

} // namespace igfv
