#include "recon/sweep.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "recon/eigen.hpp"
#include "recon/limiters.hpp"

namespace igfv {

void SweepScratch::ensure(int nvar, int n) {
    const size_t sz = (size_t)nvar * (n + 1);
    if (linL.size() < sz) {
        linL.resize(sz);
        linR.resize(sz);
        mpL.resize(sz);
        mpR.resize(sz);
    }
    if (w.size() < (size_t)nvar * 6) w.resize((size_t)nvar * 6);
    if (c5s.size() < (size_t)2 * (n + 1)) c5s.resize((size_t)2 * (n + 1));
}

void bvd_select_line(const double* linL, const double* linR, const double* mpL, const double* mpR,
                     int n, bool periodic, int lo_face, int hi_face, double* finL, double* finR,
                     std::uint8_t* provL, std::uint8_t* provR) {
    for (int c = 0; c < n; ++c) {
        const double t_lin =
            std::abs(linL[c] - linR[c]) + std::abs(linL[c + 1] - linR[c + 1]);
        const double t_mp = std::abs(mpL[c] - mpR[c]) + std::abs(mpL[c + 1] - mpR[c + 1]);
        if (!(t_mp < t_lin)) continue;
        for (int f = c - 1; f <= c + 2; ++f) {
            int k = f;
            if (periodic) {
                k = ((f % n) + n) % n;
            } else if (k < lo_face || k > hi_face) {
                continue;
            }
            finL[k] = mpL[k];
            finR[k] = mpR[k];
            provL[k] = provR[k] = (std::uint8_t)FaceProv::mp5;
        }
    }
}

namespace {

// Characteristic MP5 candidate at one face: freeze the eigensystem from the
// two adjacent cells, reconstruct each characteristic field over the six-cell
// stencil, and project back to primitives.
inline void mp5_characteristic_face(const LineInput& in, const SchemeConfig& sc,
                                    const GasModel& gas, int k, double* w6, double* mpL,
                                    double* mpR, int nf) {
    const int nv = in.nvar;
    const int g = in.g;
    const bool multi = gas.multi();
    double ua[max_nvar], ub[max_nvar], wv[max_nvar];

    for (int v = 0; v < nv; ++v) {
        ua[v] = in.u[v][k - 1 + g];
        ub[v] = in.u[v][k + g];
    }
    EigenSystem es;
    eigen_averages(ua, ub, in.axis, gas, es);

    for (int s = 0; s < 6; ++s) {
        const int c = k - 3 + s;
        for (int v = 0; v < nv; ++v) ua[v] = in.u[v][c + g];
        eigen_project(es, multi, ua, wv);
        for (int v = 0; v < nv; ++v) w6[v * 6 + s] = wv[v];
    }
    double wl[max_nvar], wr[max_nvar];
    for (int v = 0; v < nv; ++v) {
        const double* wc = w6 + v * 6;
        wl[v] = mp5_face(wc[0], wc[1], wc[2], wc[3], wc[4], sc.alpha_mp, sc.eps_mp);
        wr[v] = mp5_face(wc[5], wc[4], wc[3], wc[2], wc[1], sc.alpha_mp, sc.eps_mp);
    }
    eigen_unproject(es, multi, wl, ua);
    eigen_unproject(es, multi, wr, ub);
    for (int v = 0; v < nv; ++v) {
        mpL[v * nf + k] = ua[v];
        mpR[v * nf + k] = ub[v];
    }
}

} // namespace

void reconstruct_interfaces(const LineInput& in, const SchemeConfig& sc, const GasModel& gas,
                            LinePair& out, SweepScratch& s, long& fallback_count) {
    const int n = in.n;
    const int nf = n + 1;
    const int nv = in.nvar;
    const int g = in.g;
    const bool per = in.periodic;
    out.resize(nv, n);
    s.ensure(nv, n);

    auto U = [&](int v, int c) { return in.u[v][c + g]; };

    // Linear candidate.
    if (sc.uses_ig()) {
        const double h = in.h, h2 = in.h * in.h;
        for (int v = 0; v < nv; ++v) {
            const double* u = in.u[v] + g;
            const double* qp = in.qp[v];
            const double* qpp = in.qpp[v];
            double* L = s.linL.data() + (size_t)v * nf;
            double* R = s.linR.data() + (size_t)v * nf;
            for (int c = 0; c < n; ++c) {
                const double hd = h * qp[c];
                const double hdd = h2 * qpp[c];
                L[c + 1] = ig_left(u[c], hd, hdd);
                R[c] = ig_right(u[c], hd, hdd);
            }
            if (per) {
                L[0] = L[n];
                R[n] = R[0];
            } else {
                L[0] = U(v, -1);
                R[n] = U(v, n);
            }
        }
    } else if (sc.base == BaseScheme::muscl_k3) {
        for (int v = 0; v < nv; ++v) {
            double* L = s.linL.data() + (size_t)v * nf;
            double* R = s.linR.data() + (size_t)v * nf;
            for (int k = 0; k <= n; ++k) {
                L[k] = muscl_left(U(v, k - 2), U(v, k - 1), U(v, k));
                R[k] = muscl_right(U(v, k - 1), U(v, k), U(v, k + 1));
            }
        }
    } else if (sc.base == BaseScheme::c5) {
        for (int v = 0; v < nv; ++v)
            in.c5->solve(in.u[v], g, s.linL.data() + (size_t)v * nf,
                         s.linR.data() + (size_t)v * nf, s.c5s.data());
    }

    // MP5 candidate in characteristic space.
    const int mp_lo = per ? 0 : 2;
    const int mp_hi = per ? n - 1 : n - 2;
    if (sc.uses_mp5()) {
        for (int k = mp_lo; k <= mp_hi; ++k)
            mp5_characteristic_face(in, sc, gas, k, s.w.data(), s.mpL.data(), s.mpR.data(), nf);
        if (per) {
            for (int v = 0; v < nv; ++v) {
                s.mpL[(size_t)v * nf + n] = s.mpL[(size_t)v * nf];
                s.mpR[(size_t)v * nf + n] = s.mpR[(size_t)v * nf];
            }
        }
    }

    // Non-periodic edge faces: first-order at the domain faces and a
    // minmod-limited second-order value one face in. Written into every
    // candidate array so the TBV comparison is inert there.
    if (!per) {
        for (int v = 0; v < nv; ++v) {
            auto set = [&](int k, double lv, double rv) {
                s.linL[(size_t)v * nf + k] = lv;
                s.linR[(size_t)v * nf + k] = rv;
                if (sc.uses_mp5()) {
                    s.mpL[(size_t)v * nf + k] = lv;
                    s.mpR[(size_t)v * nf + k] = rv;
                }
            };
            set(0, U(v, -1), U(v, 0));
            set(n, U(v, n - 1), U(v, n));
            set(1, U(v, 0) + 0.5 * minmod2(U(v, 1) - U(v, 0), U(v, 0) - U(v, -1)),
                U(v, 1) - 0.5 * minmod2(U(v, 2) - U(v, 1), U(v, 1) - U(v, 0)));
            set(n - 1,
                U(v, n - 2) + 0.5 * minmod2(U(v, n - 1) - U(v, n - 2), U(v, n - 2) - U(v, n - 3)),
                U(v, n - 1) - 0.5 * minmod2(U(v, n) - U(v, n - 1), U(v, n - 1) - U(v, n - 2)));
        }
    }

    // Assemble the selected pair.
    const bool mp_base = (sc.base == BaseScheme::mp5);
    const std::uint8_t base_tag =
        (std::uint8_t)(mp_base ? FaceProv::mp5 : FaceProv::ig);
    std::memcpy(out.L.data(), mp_base ? s.mpL.data() : s.linL.data(),
                sizeof(double) * (size_t)nv * nf);
    std::memcpy(out.R.data(), mp_base ? s.mpR.data() : s.linR.data(),
                sizeof(double) * (size_t)nv * nf);
    std::fill(out.provL.begin(), out.provL.end(), base_tag);
    std::fill(out.provR.begin(), out.provR.end(), base_tag);
    if (!per) {
        for (int v = 0; v < nv; ++v)
            for (int k : {0, n}) {
                out.provL[(size_t)v * nf + k] = (std::uint8_t)FaceProv::fo;
                out.provR[(size_t)v * nf + k] = (std::uint8_t)FaceProv::fo;
            }
    }

    if (sc.bvd_enabled && sc.uses_ig()) {
        for (int v = 0; v < nv; ++v)
            bvd_select_line(s.linL.data() + (size_t)v * nf, s.linR.data() + (size_t)v * nf,
                            s.mpL.data() + (size_t)v * nf, s.mpR.data() + (size_t)v * nf, n, per,
                            2, n - 2, out.L.data() + (size_t)v * nf,
                            out.R.data() + (size_t)v * nf, out.provL.data() + (size_t)v * nf,
                            out.provR.data() + (size_t)v * nf);
    }

    // Positivity / boundedness descent: failed side -> MP5 value -> the
    // first-order cell value. An inadmissible cell value is unrecoverable.
    const int klast = per ? n - 1 : n;
    double st[max_nvar];
    for (int k = 0; k <= klast; ++k) {
        for (int side = 0; side < 2; ++side) {
            double* face = side == 0 ? &out.l(0, 0) : &out.r(0, 0);
            auto val = [&](int v) -> double& { return face[(size_t)v * nf + k]; };
            for (int v = 0; v < nv; ++v) st[v] = val(v);
            if (state_admissible(st, gas)) continue;
            ++fallback_count;
            bool fixed = false;
            if (sc.uses_mp5() && k >= mp_lo && k <= mp_hi) {
                const double* mp = side == 0 ? s.mpL.data() : s.mpR.data();
                for (int v = 0; v < nv; ++v) st[v] = mp[(size_t)v * nf + k];
                if (state_admissible(st, gas)) {
                    for (int v = 0; v < nv; ++v) {
                        val(v) = st[v];
                        (side == 0 ? out.provL : out.provR)[(size_t)v * nf + k] =
                            (std::uint8_t)FaceProv::mp5;
                    }
                    fixed = true;
                }
            }
            if (!fixed) {
                const int c = side == 0 ? k - 1 : k;
                for (int v = 0; v < nv; ++v) st[v] = U(v, c);
                if (!state_admissible(st, gas))
                    throw NumericalError("invalid cell state past first-order fallback (axis " +
                                         std::to_string(in.axis) + ", face " + std::to_string(k) +
                                         ")");
                for (int v = 0; v < nv; ++v) {
                    val(v) = st[v];
                    (side == 0 ? out.provL : out.provR)[(size_t)v * nf + k] =
                        (std::uint8_t)FaceProv::fo;
                }
            }
        }
    }
    if (per) {
        for (int v = 0; v < nv; ++v) {
            out.l(v, n) = out.l(v, 0);
            out.r(v, n) = out.r(v, 0);
            out.provL[(size_t)v * nf + n] = out.provL[(size_t)v * nf];
            out.provR[(size_t)v * nf + n] = out.provR[(size_t)v * nf];
        }
    }
}

} // namespace igfv
