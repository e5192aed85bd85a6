#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mext/multiseq.hpp"

namespace mext {

/// One step of the road map: decrement the first coordinate attaining the
/// maximum. Throws AtOnes for the all-ones vector.
RVector phi(const RVector& g);

/// [R, phi(R), phi^2(R), ..., (1,...,1)]; length r - m + 1.
std::vector<RVector> road(const RVector& r);

/// The active coordinate of a point G != R on the R-road (1-based): the
/// largest c with g_c = G_max - 1 and g_c < r_c, or failing that the largest
/// c with g_c = G_max and g_c < r_c. With validate set, membership of G on
/// the road is checked by replaying phi from R.
size_t active_coordinate(const RVector& g, const RVector& r, bool validate = true);

/// Walk the road backwards from (1,...,1) to R: emits (G, active coordinate)
/// then increments that coordinate, stopping when G = R. The emitted points
/// are reverse(road(R)) minus its last element.
std::vector<std::pair<RVector, size_t>> backward_traverse(const RVector& r);

}  // namespace mext
