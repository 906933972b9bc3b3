#pragma once

#include <optional>

#include "leakyamd/lvamd.hpp"

namespace lamd {

// Packed polynomial ramp sharing over F_q with thresholds t < r <= N: the
// secret block (length r-t) is pinned at reserved evaluation points N+1..N+r-t,
// the first t share points carry the sharing randomness, and every share is an
// evaluation of the unique degree <= r-1 polynomial through those r values.
// Any t shares are independent of the secret; any r shares reconstruct it by
// interpolation, which makes recovery a linear map of the shares.
struct RampScheme {
    uint64_t q = 0;
    size_t t = 0, r = 0, N = 0;

    static RampScheme create(uint64_t q, size_t t, size_t r, size_t N);

    size_t secret_len() const { return r - t; }
    uint64_t share_point(size_t idx1) const { return idx1 % q; }           // participant 1..N
    uint64_t secret_point(size_t i) const { return (N + 1 + i) % q; }      // block 0..r-t-1
};

// N participant slots; a missing share is the absorbing absent symbol.
struct ShareVector {
    uint64_t modulus = 0;
    std::vector<std::optional<uint64_t>> slots;  // slot i holds participant i+1's share

    size_t size() const { return slots.size(); }
};

ShareVector ramp_share(const Vec& secret, const Vec& rand, const RampScheme& scheme);

// Reconstruct from the shares at `subset` (1-based participant indices,
// distinct; at least r of them — the r smallest are used). Any absent slot in
// the subset makes the result REJECT.
std::optional<Vec> ramp_recover(const ShareVector& shares, std::vector<size_t> subset,
                                const RampScheme& scheme);

// The (r-t) x r matrix L with recover(shares at subset) = L * shares^T, for a
// subset of exactly r indices. Exposes the linearity of recovery.
Matrix ramp_recover_coeffs(const std::vector<size_t>& subset, const RampScheme& scheme);

// Ramp sharing of an inner limited-view codeword: corrupting up to
// t + floor(rho*(r-t)) shares shows the adversary at most a tolerated view of
// the codeword, and by linearity the corruption acts as an additive offset on
// it, which the inner code detects.
struct RobustRampScheme {
    RampScheme ramp;
    LvStrongInstance code;  // codeword length n = r - t

    static RobustRampScheme create(uint64_t q, size_t t, size_t r, size_t N, size_t k);

    size_t k() const { return code.k(); }
    size_t corrupt_budget() const;  // t + floor(rho * (r-t))
};

ShareVector rr_share(const Vec& secret, FieldElem i, const Vec& j, const Vec& rand,
                     const RobustRampScheme& scheme);
std::optional<Vec> rr_recover(const ShareVector& shares, std::vector<size_t> subset,
                              const RobustRampScheme& scheme);

}  // namespace lamd
