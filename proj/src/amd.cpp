#include "leakyamd/amd.hpp"

#include <stdexcept>

namespace lamd {

AmdParams AmdParams::create(uint64_t q, size_t d) {
    if (!is_prime(q) || q > kMaxModulus) throw std::invalid_argument("AmdParams: q must be a small prime");
    if (d < 1) throw std::invalid_argument("AmdParams: message length must be >= 1");
    if ((d + 2) % q == 0)
        throw std::invalid_argument("AmdParams: q must not divide d+2");
    return AmdParams{q, d};
}

uint64_t amd_tag(const Vec& m, uint64_t r, const AmdParams& p) {
    if (m.modulus != p.q || m.size() != p.d) throw std::invalid_argument("amd_tag: bad message");
    uint64_t tag = mod_pow(r, p.d + 2, p.q);
    uint64_t rp = 1;
    for (size_t i = 0; i < p.d; ++i) {
        rp = mod_mul(rp, r, p.q);  // r^{i+1}
        tag = mod_add(tag, mod_mul(m[i], rp, p.q), p.q);
    }
    return tag;
}

Vec amd_encode(const Vec& m, FieldElem r, const AmdParams& p) {
    if (r.modulus != p.q) throw std::invalid_argument("amd_encode: randomness modulus mismatch");
    Vec out = Vec::zero(p.q, p.d + 2);
    for (size_t i = 0; i < p.d; ++i) out[i] = m[i];
    out[p.d] = r.value;
    out[p.d + 1] = amd_tag(m, r.value, p);
    return out;
}

std::optional<Vec> amd_decode(const Vec& x, const AmdParams& p) {
    if (x.modulus != p.q || x.size() != p.d + 2)
        throw std::invalid_argument("amd_decode: bad codeword shape");
    Vec m(p.q, std::vector<uint64_t>(x.values.begin(), x.values.begin() + p.d));
    if (amd_tag(m, x[p.d], p) != x[p.d + 1]) return std::nullopt;
    return m;
}

}  // namespace lamd
