#ifndef IGFV_RECON_SWEEP_HPP
#define IGFV_RECON_SWEEP_HPP

#include <cstdint>
#include <vector>

#include "core/gas.hpp"
#include "recon/c5.hpp"
#include "recon/scheme.hpp"

namespace igfv {

enum class FaceProv : std::uint8_t { ig = 0, mp5 = 1, fo = 2 };

// One grid line handed to the reconstruction kernel. u points at padded
// per-variable lines (entry m corresponds to cell m - g); qp/qpp hold the
// physical first/second derivatives when the scheme needs them.
struct LineInput {
    int n = 0;
    int g = 0;
    double h = 1.0;
    bool periodic = false;
    int axis = 0;
    int nvar = 0;
    const double* u[max_nvar] = {};
    const double* qp[max_nvar] = {};
    const double* qpp[max_nvar] = {};
    const C5LineSolver* c5 = nullptr;
};

// Left/right primitive values at the n+1 faces of a line, with a per-face,
// per-variable record of which candidate produced each value.
struct LinePair {
    int n = 0;
    int nvar = 0;
    std::vector<double> L, R;
    std::vector<std::uint8_t> provL, provR;

    void resize(int nv, int ncells) {
        n = ncells;
        nvar = nv;
        const size_t sz = (size_t)nv * (ncells + 1);
        L.assign(sz, 0.0);
        R.assign(sz, 0.0);
        provL.assign(sz, 0);
        provR.assign(sz, 0);
    }
    double& l(int v, int k) { return L[(size_t)v * (n + 1) + k]; }
    double& r(int v, int k) { return R[(size_t)v * (n + 1) + k]; }
    double l(int v, int k) const { return L[(size_t)v * (n + 1) + k]; }
    double r(int v, int k) const { return R[(size_t)v * (n + 1) + k]; }
    FaceProv prov_l(int v, int k) const { return FaceProv(provL[(size_t)v * (n + 1) + k]); }
    FaceProv prov_r(int v, int k) const { return FaceProv(provR[(size_t)v * (n + 1) + k]); }
};

// Total boundary variation of cell c for one variable: the sum of the
// left/right reconstruction jumps at its two faces.
inline double tbv(const LinePair& p, int v, int c) {
    return std::abs(p.l(v, c) - p.r(v, c)) + std::abs(p.l(v, c + 1) - p.r(v, c + 1));
}

// Per-variable BVD selection between a linear candidate and the MP5
// candidate: wherever the MP5 pair of cell c has strictly smaller TBV, the
// eight face values reachable from c (both sides of faces c-1..c+2) are
// replaced by the MP5 values. Writes are clipped to [lo_face, hi_face]
// (wrapped instead when periodic).
void bvd_select_line(const double* linL, const double* linR, const double* mpL, const double* mpR,
                     int n, bool periodic, int lo_face, int hi_face, double* finL, double* finR,
                     std::uint8_t* provL, std::uint8_t* provR);

struct SweepScratch {
    std::vector<double> linL, linR, mpL, mpR;
    std::vector<double> w;    // characteristic stencil buffer
    std::vector<double> c5s;  // c5 solver scratch
    void ensure(int nvar, int n);
};

// Full interface reconstruction for one line: linear candidate (implicit
// gradient, explicit kappa, or compact C5), characteristic MP5 candidate,
// BVD selection, boundary handling, and the positivity fallback chain.
// fallback_count is incremented once per replaced face side.
void reconstruct_interfaces(const LineInput& in, const SchemeConfig& sc, const GasModel& gas,
                            LinePair& out, SweepScratch& scratch, long& fallback_count);

} // namespace igfv

#endif
