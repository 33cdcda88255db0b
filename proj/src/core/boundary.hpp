#ifndef IGFV_CORE_BOUNDARY_HPP
#define IGFV_CORE_BOUNDARY_HPP

#include "core/field.hpp"

namespace igfv {

// Populate all ghost cells of a primitive-variable field from the grid's
// boundary tags. Interior cells are never written. t drives the
// time-dependent moving-shock boundary.
void apply_boundary_conditions(Field& prim, const GasModel& gas, double t);

} // namespace igfv

#endif
