/**
 * Random strongly unimodular subdivisions for cross-checks and benchmarks.
 *
 * 1-D: a run of consecutive integer vertices (unit segments are the only
 * strongly unimodular bounded cells on the line).
 *
 * 2-D: a random lattice rectangle triangulated by a random regular lifting,
 * completed outside by edge strips and corner cones of the normal fan, then
 * twisted by a random unimodular shear. Samples whose lifting does not
 * induce a unimodular triangulation are discarded and redrawn.
 */

#ifndef PATCHGLUE_SAMPLING_HPP
#define PATCHGLUE_SAMPLING_HPP

#include "patchglue/patchwork.hpp"
#include "patchglue/polyhedra.hpp"

#include <random>

namespace patchglue {

Subdivision random_subdivision_1d(std::mt19937& rng);
Subdivision random_subdivision_2d(std::mt19937& rng);
std::vector<Sign> random_signs(std::mt19937& rng, std::size_t count);

}  // namespace patchglue

#endif  // PATCHGLUE_SAMPLING_HPP
