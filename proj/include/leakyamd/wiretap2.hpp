#pragma once

#include "leakyamd/linalg.hpp"
#include "leakyamd/rational.hpp"

namespace lamd {

// Coset-coding scheme over F_q: a message in F_q^{k_msg} selects a coset of
// the [n, n-k_msg] MDS code generated by G; the transmitted word is a uniform
// coset element. H maps every word to the message of its coset, so decoding
// is total and linear. Any view of at most n-k_msg components is distributed
// independently of the message.
struct Wt2Instance {
    uint64_t q = 0;
    size_t n = 0, k_msg = 0;
    Matrix G;       // (n-k_msg) x n
    Matrix Gtilde;  // k_msg x n, completes G to an invertible square matrix
    Matrix H;       // k_msg x n, H*G^T = 0 and H*Gtilde^T = I

    static Wt2Instance create(uint64_t q, size_t n, size_t k_msg);

    size_t rand_len() const { return n - k_msg; }
    Rational rho() const {
        return Rational(static_cast<long long>(n - k_msg), static_cast<long long>(n));
    }
};

// [r, m] * [G; Gtilde]; r is the caller-supplied coset randomness.
Vec wt2_encode(const Vec& m, const Vec& r, const Wt2Instance& inst);

// Syndrome H*x^T; total on F_q^n.
Vec wt2_decode(const Vec& x, const Wt2Instance& inst);

}  // namespace lamd
