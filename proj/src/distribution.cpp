#include "leakyamd/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace lamd {

Distribution make_distribution(std::vector<Vec> outcomes) {
    if (outcomes.empty()) throw std::invalid_argument("make_distribution: empty support");
    std::sort(outcomes.begin(), outcomes.end());
    Distribution d;
    Rational unit = Rational(1, static_cast<long long>(outcomes.size()));
    for (size_t i = 0; i < outcomes.size();) {
        size_t j = i;
        while (j < outcomes.size() && outcomes[j] == outcomes[i]) ++j;
        d.support.emplace_back(std::move(outcomes[i]),
                               unit * Rational(static_cast<long long>(j - i)));
        i = j;
    }
    return d;
}

Distribution point_mass(Vec outcome) {
    Distribution d;
    d.support.emplace_back(std::move(outcome), Rational(1));
    return d;
}

Rational statistical_distance(const Distribution& p, const Distribution& q) {
    Rational total(0);
    size_t i = 0, j = 0;
    while (i < p.support.size() || j < q.support.size()) {
        if (j == q.support.size() ||
            (i < p.support.size() && p.support[i].first < q.support[j].first)) {
            total = total + p.support[i].second;
            ++i;
        } else if (i == p.support.size() || q.support[j].first < p.support[i].first) {
            total = total + q.support[j].second;
            ++j;
        } else {
            const Rational& a = p.support[i].second;
            const Rational& b = q.support[j].second;
            total = total + (a < b ? b - a : a - b);
            ++i;
            ++j;
        }
    }
    return total / Rational(2);
}

double min_entropy(const Distribution& p) {
    Rational best(0);
    for (const auto& [x, w] : p.support)
        if (best < w) best = w;
    return -std::log2(best.to_double());
}

JointDistribution make_joint(std::vector<std::pair<Vec, Vec>> outcomes) {
    if (outcomes.empty()) throw std::invalid_argument("make_joint: empty support");
    std::sort(outcomes.begin(), outcomes.end());
    JointDistribution j;
    Rational unit = Rational(1, static_cast<long long>(outcomes.size()));
    for (size_t i = 0; i < outcomes.size();) {
        size_t e = i;
        while (e < outcomes.size() && outcomes[e] == outcomes[i]) ++e;
        j.support.emplace_back(outcomes[i].first, outcomes[i].second,
                               unit * Rational(static_cast<long long>(e - i)));
        i = e;
    }
    return j;
}

Distribution joint_marginal_x(const JointDistribution& j) {
    std::map<Vec, Rational> acc;
    for (const auto& [x, z, w] : j.support) {
        auto [it, fresh] = acc.emplace(x, w);
        if (!fresh) it->second = it->second + w;
    }
    Distribution d;
    for (auto& [x, w] : acc) d.support.emplace_back(x, w);
    return d;
}

Rational guessing_mass(const JointDistribution& j) {
    // Entries are sorted by (x, z); regroup by z.
    std::map<Vec, Rational> best_by_z;
    for (const auto& [x, z, w] : j.support) {
        auto [it, fresh] = best_by_z.emplace(z, w);
        if (!fresh && it->second < w) it->second = w;
    }
    Rational total(0);
    for (const auto& [z, w] : best_by_z) total = total + w;
    return total;
}

double conditional_min_entropy(const JointDistribution& j) {
    return -std::log2(guessing_mass(j).to_double());
}

bool is_product_distribution(const JointDistribution& j) {
    std::map<Vec, Rational> px, pz;
    for (const auto& [x, z, w] : j.support) {
        auto [ix, fx] = px.emplace(x, w);
        if (!fx) ix->second = ix->second + w;
        auto [iz, fz] = pz.emplace(z, w);
        if (!fz) iz->second = iz->second + w;
    }
    for (const auto& [x, z, w] : j.support)
        if (w != px.at(x) * pz.at(z)) return false;
    // A product also requires a full rectangle of support.
    return j.support.size() == px.size() * pz.size();
}

}  // namespace lamd
