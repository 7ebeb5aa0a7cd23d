#pragma once

#include "qmath.hpp"
#include "rng.hpp"

namespace dopt {

// Area-uniform point on the unit sphere.
Vec3 random_unit_vector(Rng& rng);

// Ginibre-induced random density matrices: G G^dag / tr(G G^dag).
Mat2 random_qubit_density(Rng& rng);
Mat4 random_two_qubit_density(Rng& rng);

// Random convex mixture of product states (separable by construction).
Mat4 random_separable_density(Rng& rng, int terms = 4);

// SU(2) element from Euler angles with uniformly drawn angles.
Mat2 random_unitary2(Rng& rng);

}  // namespace dopt
