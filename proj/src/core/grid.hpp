#ifndef IGFV_CORE_GRID_HPP
#define IGFV_CORE_GRID_HPP

#include <array>
#include <cstdint>

#include "core/gas.hpp"
#include "core/errors.hpp"

namespace igfv {

enum class BcTag : std::uint8_t {
    periodic,
    reflective_wall, // slip wall, normal velocity mirrored with sign flip
    noslip_wall,     // full velocity reflection about the wall velocity
    outflow,         // zero-gradient copy of the nearest interior cell
    dirichlet,       // fixed primitive state
    dmr_top,         // time-dependent exact moving-shock trace along the top
    dmr_bottom,      // dirichlet left of split_x, reflective wall right of it
};

struct BoundaryCondition {
    BcTag tag = BcTag::outflow;
    std::array<double, 3> wall_velocity{0.0, 0.0, 0.0};
    StateVec state{};  // dirichlet / dmr post-shock state (primitives)
    StateVec state2{}; // dmr pre-shock state
    double split_x = 0.0;
    double shock_x0 = 0.0;    // dmr_top trace x(t) = shock_x0 + shock_speed * t
    double shock_speed = 0.0;
};

// Sides are indexed 2*axis + (0 lo | 1 hi).
using BcSet = std::array<BoundaryCondition, 6>;

// Uniform Cartesian mesh descriptor with ghost layers. origin is the lower
// corner of the physical domain; cell centers sit at origin + (i + 1/2) h.
struct Grid {
    std::array<int, 3> n{1, 1, 1};
    std::array<double, 3> h{1.0, 1.0, 1.0};
    std::array<double, 3> origin{0.0, 0.0, 0.0};
    int ghost = 4;
    BcSet bc{};

    int dim() const { return n[2] > 1 ? 3 : (n[1] > 1 ? 2 : 1); }
    bool axis_active(int a) const { return n[a] > 1; }
    int pad(int a) const { return axis_active(a) ? n[a] + 2 * ghost : 1; }
    long total_padded() const { return (long)pad(0) * pad(1) * pad(2); }
    long cells() const { return (long)n[0] * n[1] * n[2]; }
    double cell_volume() const {
        double v = h[0];
        if (axis_active(1)) v *= h[1];
        if (axis_active(2)) v *= h[2];
        return v;
    }
    double center(int a, int i) const { return origin[a] + (i + 0.5) * h[a]; }

    bool periodic_axis(int a) const {
        return bc[2 * a].tag == BcTag::periodic && bc[2 * a + 1].tag == BcTag::periodic;
    }

    void validate() const {
        for (int a = 0; a < 3; ++a) {
            if (n[a] < 1) throw ConfigError("grid dims must be >= 1");
            if (!(h[a] > 0.0)) throw ConfigError("grid spacing must be positive");
        }
        if (ghost < 3) throw ConfigError("ghost width must be >= 3");
        for (int a = 0; a < 3; ++a) {
            if (!axis_active(a)) continue;
            const bool lo = bc[2 * a].tag == BcTag::periodic;
            const bool hi = bc[2 * a + 1].tag == BcTag::periodic;
            if (lo != hi) throw ConfigError("periodic tags must match on opposing sides");
        }
    }
};

} // namespace igfv

#endif
