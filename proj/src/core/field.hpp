#ifndef IGFV_CORE_FIELD_HPP
#define IGFV_CORE_FIELD_HPP

#include <vector>

#include "core/grid.hpp"

namespace igfv {

// Cell-centered multi-variable array over the padded grid, stored
// variable-major so x-lines of one variable are contiguous.
struct Field {
    Grid grid;
    int nvar = 0;
    std::vector<double> a;

    Field() = default;
    Field(const Grid& g, int nv) : grid(g), nvar(nv), a((size_t)nv * g.total_padded(), 0.0) {}

    long plane() const { return grid.total_padded(); }

    // i,j,k are physical cell indices; ghosts use negative / >= n indices.
    long cell_index(int i, int j, int k) const {
        const int gx = grid.axis_active(0) ? grid.ghost : 0;
        const int gy = grid.axis_active(1) ? grid.ghost : 0;
        const int gz = grid.axis_active(2) ? grid.ghost : 0;
        return ((long)(k + gz) * grid.pad(1) + (j + gy)) * grid.pad(0) + (i + gx);
    }

    double& at(int v, int i, int j = 0, int k = 0) { return a[(size_t)v * plane() + cell_index(i, j, k)]; }
    double at(int v, int i, int j = 0, int k = 0) const { return a[(size_t)v * plane() + cell_index(i, j, k)]; }

    double* var(int v) { return a.data() + (size_t)v * plane(); }
    const double* var(int v) const { return a.data() + (size_t)v * plane(); }

    void fill(double value) { std::fill(a.begin(), a.end(), value); }
};

} // namespace igfv

#endif
