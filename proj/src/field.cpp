#include "leakyamd/field.hpp"

namespace lamd {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b != 0) { uint64_t t = a % b; a = b; b = t; }
    return a;
}

uint64_t mod_pow(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t acc = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) acc = mod_mul(acc, a, m);
        a = mod_mul(a, a, m);
        e >>= 1;
    }
    return acc;
}

uint64_t mod_inv(uint64_t a, uint64_t m) {
    // extended Euclid; requires gcd(a, m) = 1
    long long r0 = static_cast<long long>(m), r1 = static_cast<long long>(a % m);
    long long s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long qout = r0 / r1;
        long long r2 = r0 - qout * r1;
        long long s2 = s0 - qout * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inv: element is not a unit");
    long long res = s0 % static_cast<long long>(m);
    if (res < 0) res += static_cast<long long>(m);
    return static_cast<uint64_t>(res);
}

uint64_t checked_pow(uint64_t q, unsigned e) {
    uint64_t acc = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (acc > UINT64_MAX / q) throw std::overflow_error("checked_pow: overflow");
        acc *= q;
    }
    return acc;
}

namespace {

void require_modulus(uint64_t m) {
    if (m < 2 || m > kMaxModulus)
        throw std::invalid_argument("modulus out of supported range");
}

void require_same(const FieldElem& a, const FieldElem& b) {
    if (a.modulus != b.modulus)
        throw std::invalid_argument("field elements have mismatched moduli");
}

}  // namespace

FieldElem::FieldElem(uint64_t v, uint64_t q) {
    require_modulus(q);
    if (!is_prime(q)) throw std::invalid_argument("FieldElem: modulus must be prime");
    value = v % q;
    modulus = q;
}

ExpElem::ExpElem(uint64_t v, uint64_t m) {
    if (m == 0 || m > kMaxModulus) throw std::invalid_argument("ExpElem: modulus out of range");
    value = v % m;
    modulus = m;
}

FieldElem fadd(FieldElem a, FieldElem b) {
    require_same(a, b);
    return {mod_add(a.value, b.value, a.modulus), a.modulus};
}

FieldElem fsub(FieldElem a, FieldElem b) {
    require_same(a, b);
    return {mod_sub(a.value, b.value, a.modulus), a.modulus};
}

FieldElem fmul(FieldElem a, FieldElem b) {
    require_same(a, b);
    return {mod_mul(a.value, b.value, a.modulus), a.modulus};
}

FieldElem fneg(FieldElem a) { return {mod_neg(a.value, a.modulus), a.modulus}; }

FieldElem finv(FieldElem a) {
    if (a.value == 0) throw std::invalid_argument("finv: zero has no inverse");
    return {mod_inv(a.value, a.modulus), a.modulus};
}

FieldElem fpow(FieldElem a, uint64_t e) { return {mod_pow(a.value, e, a.modulus), a.modulus}; }

bool is_unit_mod(ExpElem d) { return gcd_u64(d.value, d.modulus) == 1; }

uint64_t element_order(FieldElem a) {
    if (a.value == 0) throw std::invalid_argument("element_order: zero element");
    uint64_t ord = 1;
    uint64_t x = a.value;
    while (x != 1) {
        x = mod_mul(x, a.value, a.modulus);
        ++ord;
    }
    return ord;
}

FieldElem primitive_element(uint64_t q) {
    if (!is_prime(q) || q < 3)
        throw std::invalid_argument("primitive_element: q must be a prime >= 3");
    for (uint64_t beta = 2; beta < q; ++beta) {
        FieldElem cand{beta, q};
        if (element_order(cand) == q - 1) return cand;
    }
    throw std::logic_error("primitive_element: unreachable for prime q");
}

}  // namespace lamd
