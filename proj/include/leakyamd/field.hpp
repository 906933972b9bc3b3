#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lamd {

// Raw residue arithmetic. Moduli are capped at 2^31 - 1 so products of two
// reduced residues fit a uint64_t without overflow.
inline constexpr uint64_t kMaxModulus = 0x7fffffffULL;

bool is_prime(uint64_t n);
uint64_t gcd_u64(uint64_t a, uint64_t b);

inline uint64_t mod_add(uint64_t a, uint64_t b, uint64_t m) { return (a + b) % m; }
inline uint64_t mod_sub(uint64_t a, uint64_t b, uint64_t m) { return (a + m - b) % m; }
inline uint64_t mod_mul(uint64_t a, uint64_t b, uint64_t m) { return (a * b) % m; }
inline uint64_t mod_neg(uint64_t a, uint64_t m) { return a == 0 ? 0 : m - a; }
uint64_t mod_pow(uint64_t a, uint64_t e, uint64_t m);
uint64_t mod_inv(uint64_t a, uint64_t m);  // inverse of a unit, any modulus

// q^e as uint64_t, throwing on overflow; used for message/group counts.
uint64_t checked_pow(uint64_t q, unsigned e);

// Element of the prime field F_q. Carries its modulus so that mixed-field
// operations fail loudly instead of silently reducing mod the wrong prime.
struct FieldElem {
    uint64_t value = 0;
    uint64_t modulus = 0;

    FieldElem() = default;
    FieldElem(uint64_t v, uint64_t q);

    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

// Residue mod q-1, the exponent ring of F_q^*. The modulus may be composite.
struct ExpElem {
    uint64_t value = 0;
    uint64_t modulus = 0;  // q - 1

    ExpElem() = default;
    ExpElem(uint64_t v, uint64_t m);

    friend bool operator==(const ExpElem&, const ExpElem&) = default;
};

FieldElem fadd(FieldElem a, FieldElem b);
FieldElem fsub(FieldElem a, FieldElem b);
FieldElem fmul(FieldElem a, FieldElem b);
FieldElem fneg(FieldElem a);
FieldElem finv(FieldElem a);  // throws on zero
FieldElem fpow(FieldElem a, uint64_t e);

// true iff d is invertible mod its modulus, i.e. gcd(d, q-1) = 1.
bool is_unit_mod(ExpElem d);

// Smallest generator of the multiplicative group F_q^*. Deterministic;
// requires q prime, q >= 3.
FieldElem primitive_element(uint64_t q);

// Multiplicative order of a nonzero element.
uint64_t element_order(FieldElem a);

}  // namespace lamd
