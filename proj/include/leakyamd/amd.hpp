#pragma once

#include <optional>

#include "leakyamd/linalg.hpp"
#include "leakyamd/rational.hpp"

namespace lamd {

// Parameters of the systematic algebraic manipulation detection code over
// F_q: messages in F_q^d, codewords (m, r, tag) in F_q^{d+2}, with
// tag(r, m) = r^{d+2} + sum_i m_i r^i. Valid only when q does not divide d+2
// (otherwise the leading tag term has zero derivative and offsets slip by).
struct AmdParams {
    uint64_t q = 0;
    size_t d = 0;

    static AmdParams create(uint64_t q, size_t d);

    size_t codeword_len() const { return d + 2; }
    Rational delta() const { return Rational(static_cast<long long>(d) + 1, static_cast<long long>(q)); }
    uint64_t message_count() const { return checked_pow(q, static_cast<unsigned>(d)); }
    uint64_t group_count() const { return checked_pow(q, static_cast<unsigned>(d + 2)); }
};

uint64_t amd_tag(const Vec& m, uint64_t r, const AmdParams& p);

// (m, r, tag). Randomness r is caller-supplied so adversary oracles can
// enumerate it; callers wanting a random encoding draw r themselves.
Vec amd_encode(const Vec& m, FieldElem r, const AmdParams& p);

// First d components iff the tag verifies; nullopt is the REJECT symbol.
std::optional<Vec> amd_decode(const Vec& x, const AmdParams& p);

}  // namespace lamd
