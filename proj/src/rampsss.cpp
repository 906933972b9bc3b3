#include "leakyamd/rampsss.hpp"

#include <algorithm>
#include <stdexcept>

namespace lamd {

namespace {

// Lagrange coefficients: weights w with P(target) = sum_i w_i * y_i for the
// unique degree <= len-1 polynomial through (points_i, y_i).
std::vector<uint64_t> lagrange_weights(const std::vector<uint64_t>& points, uint64_t target,
                                       uint64_t q) {
    std::vector<uint64_t> w(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        uint64_t num = 1, den = 1;
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            num = mod_mul(num, mod_sub(target, points[j], q), q);
            den = mod_mul(den, mod_sub(points[i], points[j], q), q);
        }
        w[i] = mod_mul(num, mod_inv(den, q), q);
    }
    return w;
}

}  // namespace

RampScheme RampScheme::create(uint64_t q, size_t t, size_t r, size_t N) {
    if (!is_prime(q)) throw std::invalid_argument("RampScheme: q must be prime");
    if (!(t < r && r <= N)) throw std::invalid_argument("RampScheme: need t < r <= N");
    if (t < 1) throw std::invalid_argument("RampScheme: need t >= 1 for privacy");
    if (q <= N + (r - t))
        throw std::invalid_argument("RampScheme: q must exceed N + r - t distinct points");
    return RampScheme{q, t, r, N};
}

ShareVector ramp_share(const Vec& secret, const Vec& rand, const RampScheme& scheme) {
    if (secret.modulus != scheme.q || secret.size() != scheme.secret_len())
        throw std::invalid_argument("ramp_share: bad secret shape");
    if (rand.modulus != scheme.q || rand.size() != scheme.t)
        throw std::invalid_argument("ramp_share: bad randomness shape");
    // Interpolation nodes: the secret points, then the first t share points.
    std::vector<uint64_t> nodes;
    std::vector<uint64_t> vals;
    for (size_t i = 0; i < scheme.secret_len(); ++i) {
        nodes.push_back(scheme.secret_point(i));
        vals.push_back(secret[i]);
    }
    for (size_t j = 0; j < scheme.t; ++j) {
        nodes.push_back(scheme.share_point(j + 1));
        vals.push_back(rand[j]);
    }
    ShareVector out;
    out.modulus = scheme.q;
    out.slots.resize(scheme.N);
    for (size_t idx = 1; idx <= scheme.N; ++idx) {
        auto w = lagrange_weights(nodes, scheme.share_point(idx), scheme.q);
        uint64_t s = 0;
        for (size_t i = 0; i < nodes.size(); ++i)
            s = mod_add(s, mod_mul(w[i], vals[i], scheme.q), scheme.q);
        out.slots[idx - 1] = s;
    }
    return out;
}

Matrix ramp_recover_coeffs(const std::vector<size_t>& subset, const RampScheme& scheme) {
    if (subset.size() != scheme.r)
        throw std::invalid_argument("ramp_recover_coeffs: subset must have exactly r indices");
    std::vector<uint64_t> nodes;
    for (size_t idx : subset) {
        if (idx < 1 || idx > scheme.N)
            throw std::invalid_argument("ramp_recover_coeffs: participant index out of range");
        nodes.push_back(scheme.share_point(idx));
    }
    Matrix L(scheme.secret_len(), scheme.r, scheme.q);
    for (size_t i = 0; i < scheme.secret_len(); ++i) {
        auto w = lagrange_weights(nodes, scheme.secret_point(i), scheme.q);
        for (size_t j = 0; j < scheme.r; ++j) L.at(i, j) = w[j];
    }
    return L;
}

std::optional<Vec> ramp_recover(const ShareVector& shares, std::vector<size_t> subset,
                                const RampScheme& scheme) {
    if (shares.modulus != scheme.q || shares.size() != scheme.N)
        throw std::invalid_argument("ramp_recover: bad share vector");
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
        throw std::invalid_argument("ramp_recover: repeated participant index");
    if (subset.size() < scheme.r)
        throw std::invalid_argument("ramp_recover: need at least r shares");
    // Absent anywhere in the requested subset absorbs the whole reconstruction.
    for (size_t idx : subset) {
        if (idx < 1 || idx > scheme.N)
            throw std::invalid_argument("ramp_recover: participant index out of range");
        if (!shares.slots[idx - 1].has_value()) return std::nullopt;
    }
    subset.resize(scheme.r);
    Matrix L = ramp_recover_coeffs(subset, scheme);
    Vec picked = Vec::zero(scheme.q, scheme.r);
    for (size_t j = 0; j < scheme.r; ++j) picked[j] = *shares.slots[subset[j] - 1];
    return mat_vec(L, picked);
}

RobustRampScheme RobustRampScheme::create(uint64_t q, size_t t, size_t r, size_t N, size_t k) {
    RampScheme ramp = RampScheme::create(q, t, r, N);
    if (ramp.secret_len() <= k + 2)
        throw std::invalid_argument("RobustRampScheme: need r - t > k + 2 for the inner code");
    return RobustRampScheme{ramp, LvStrongInstance::create(q, k, ramp.secret_len())};
}

size_t RobustRampScheme::corrupt_budget() const {
    // t + floor(rho * (r - t)) with rho taken from the inner code
    Rational extra = code.rho() * Rational(static_cast<long long>(ramp.secret_len()));
    return ramp.t + static_cast<size_t>(extra.num() / extra.den());
}

ShareVector rr_share(const Vec& secret, FieldElem i, const Vec& j, const Vec& rand,
                     const RobustRampScheme& scheme) {
    return ramp_share(lv_strong_encode(secret, i, j, scheme.code), rand, scheme.ramp);
}

std::optional<Vec> rr_recover(const ShareVector& shares, std::vector<size_t> subset,
                              const RobustRampScheme& scheme) {
    auto inner = ramp_recover(shares, std::move(subset), scheme.ramp);
    if (!inner.has_value()) return std::nullopt;
    return lv_strong_decode(*inner, scheme.code);
}

}  // namespace lamd
