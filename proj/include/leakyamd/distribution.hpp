#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "leakyamd/linalg.hpp"
#include "leakyamd/rational.hpp"

namespace lamd {

// Finite probability distribution over residue vectors with exact rational
// weights. Support is sorted and deduplicated; weights are positive and sum
// to one.
struct Distribution {
    std::vector<std::pair<Vec, Rational>> support;
};

// Uniform distribution over a multiset of outcomes (repeats add weight).
Distribution make_distribution(std::vector<Vec> outcomes);
Distribution point_mass(Vec outcome);

// Half the L1 distance, exact.
Rational statistical_distance(const Distribution& p, const Distribution& q);

// -log2 of the largest weight, in bits.
double min_entropy(const Distribution& p);

// Joint distribution of (x, z) with exact weights; entries sorted by (x, z)
// and deduplicated.
struct JointDistribution {
    std::vector<std::tuple<Vec, Vec, Rational>> support;
};

JointDistribution make_joint(std::vector<std::pair<Vec, Vec>> outcomes);

Distribution joint_marginal_x(const JointDistribution& j);

// sum_z max_x Pr[x, z]: the exact success mass of the best per-observation
// guess of x. Conditional min-entropy is -log2 of this.
Rational guessing_mass(const JointDistribution& j);
double conditional_min_entropy(const JointDistribution& j);

// true iff Pr[x, z] = Pr[x] * Pr[z] for every entry (exact).
bool is_product_distribution(const JointDistribution& j);

}  // namespace lamd
