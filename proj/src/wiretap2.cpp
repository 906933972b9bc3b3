#include "leakyamd/wiretap2.hpp"

#include <stdexcept>

namespace lamd {

Wt2Instance Wt2Instance::create(uint64_t q, size_t n, size_t k_msg) {
    if (k_msg == 0 || k_msg >= n)
        throw std::invalid_argument("Wt2Instance: need 0 < k_msg < n");
    Wt2Instance inst;
    inst.q = q;
    inst.n = n;
    inst.k_msg = k_msg;
    inst.G = rs_generator(n, n - k_msg, q);
    inst.Gtilde = complete_basis(inst.G);
    inst.H = dual_parity_check(inst.G, inst.Gtilde);
    return inst;
}

Vec wt2_encode(const Vec& m, const Vec& r, const Wt2Instance& inst) {
    if (m.modulus != inst.q || m.size() != inst.k_msg)
        throw std::invalid_argument("wt2_encode: bad message shape");
    if (r.modulus != inst.q || r.size() != inst.rand_len())
        throw std::invalid_argument("wt2_encode: bad randomness shape");
    Vec rm = r;
    rm.values.insert(rm.values.end(), m.values.begin(), m.values.end());
    return row_vec_mul(rm, mat_stack(inst.G, inst.Gtilde));
}

Vec wt2_decode(const Vec& x, const Wt2Instance& inst) {
    if (x.modulus != inst.q || x.size() != inst.n)
        throw std::invalid_argument("wt2_decode: bad codeword shape");
    return mat_vec(inst.H, x);
}

}  // namespace lamd
