#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmath.hpp"
#include "rng.hpp"

namespace dopt {

// Weighted rank-one element r * (1 + sigma . b_hat) / 2.
struct PovmElement {
    double weight = 0.0;
    Vec3 direction{0.0, 0.0, 1.0};
};

Mat2 element_operator(const PovmElement& e);

// In-plane angle measured from +z toward +x; direction (sin t, 0, cos t).
Vec3 planar_direction(double theta);
double planar_angle(const Vec3& direction);
bool is_planar(const Vec3& direction, double tol = kCompletenessTol);

struct RankOnePovm {
    std::vector<PovmElement> elements;
    bool planar = true;

    int size() const { return static_cast<int>(elements.size()); }
};

// Antipodal unit-weight pair; the first element carries the direction whose
// planar angle lies in [0, pi).
RankOnePovm projective_pair(double theta);
RankOnePovm projective_pair(const Vec3& direction);

struct ValidationReport {
    bool ok = true;
    double vector_residual = 0.0;  // |sum r_i b_i|
    double weight_residual = 0.0;  // |sum r_i - 2|
    std::vector<std::string> violations;
};

// Checks element well-formedness plus the two completeness constraints
// (sum r_i b_i = 0 and sum r_i = 2, both within 1e-9). Never throws.
ValidationReport validate(std::span<const PovmElement> elements);
ValidationReport validate(const RankOnePovm& povm);

// Solves the completeness system for the weights of the given directions.
// n=2 is feasible only for an antipodal pair (weights (1,1)); n=3 requires
// the planar geometry and n=4 the non-planar one, where the system is
// square. Returns nullopt when the system is singular or any weight falls
// below 1e-12.
std::optional<std::vector<double>> weights_from_directions(std::span<const Vec3> directions,
                                                           bool planar);

// lambda * P + (1 - lambda) * Q as a plain element multiset; may have more
// than four elements and is meant for the convexity checks only.
std::vector<PovmElement> convex_combine(const RankOnePovm& p, const RankOnePovm& q, double lambda);

struct RandomPovm {
    RankOnePovm povm;
    long long rejections = 0;
};

inline constexpr long long kResampleCap = 10000;

// Directions drawn uniformly (angles on the circle in planar mode,
// area-uniform on the sphere otherwise); weights re-solved per draw and
// infeasible draws rejected. Throws std::runtime_error past 10^4
// consecutive rejections.
RandomPovm random_povm(int n, bool planar, Rng& rng);

}  // namespace dopt
