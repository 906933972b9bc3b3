#pragma once

#include <optional>

#include "leakyamd/amd.hpp"
#include "leakyamd/wiretap2.hpp"

namespace lamd {

// Strong limited-view AMD code: an inner manipulation-detection layer wrapped
// in a coset-coding layer. The outer layer makes any read-set of at most
// floor(rho*n) components independent of the inner codeword, so an additive
// offset chosen from such a view acts on the inner code like a blind offset
// and is caught with probability >= 1 - (k+1)/q.
struct LvStrongInstance {
    AmdParams amd;   // d = k, inner codeword length k+2
    Wt2Instance wt2; // message length k+2, codeword length n

    static LvStrongInstance create(uint64_t q, size_t k, size_t n);

    size_t k() const { return amd.d; }
    size_t n() const { return wt2.n; }
    size_t inner_len() const { return amd.codeword_len(); }
    // Largest read-set size the code tolerates: n - (k+2) = floor(rho*n).
    size_t read_budget() const { return wt2.n - amd.codeword_len(); }
    Rational rho() const { return wt2.rho(); }
    Rational delta() const { return amd.delta(); }
};

Vec lv_strong_encode(const Vec& m, FieldElem i, const Vec& j, const LvStrongInstance& inst);
std::optional<Vec> lv_strong_decode(const Vec& x, const LvStrongInstance& inst);

// Weak limited-view AMD code over nonzero messages: deterministic encoder
// appending the tag sum_j prod_i m_i^{g_ij} for a column-distinct exponent
// matrix with unit determinant mod q-1.
struct LvWeakInstance {
    uint64_t q = 0;
    size_t k = 0;
    FieldElem beta;  // primitive element of F_q
    Matrix gmat;     // k x k over Z_{q-1}
    Rational psi;    // entry bound ratio: all entries <= psi*k

    // Searches for the exponent matrix deterministically.
    static LvWeakInstance create(uint64_t q, size_t k, Rational psi);
    // Uses a caller-supplied exponent matrix after validating all invariants.
    static LvWeakInstance from_matrix(uint64_t q, Matrix gmat, Rational psi);

    size_t n() const { return k + 1; }
    uint64_t message_count() const { return checked_pow(q - 1, static_cast<unsigned>(k)); }
    // Certified security for a uniform nonzero message: psi*k/(q-1).
    Rational delta_bound() const {
        return psi * Rational(static_cast<long long>(k)) / Rational(static_cast<long long>(q) - 1);
    }
};

// First matrix, in a deterministic scan of staircase columns and their cyclic
// rotations with entries in [1, psi*k], that is column-distinct and has unit
// determinant mod q-1.
Matrix lv_weak_matrix(size_t k, uint64_t q, Rational psi);

uint64_t lv_weak_tag(const Vec& m, const LvWeakInstance& inst);

// (m || tag); rejects any zero message component (the message alphabet is
// the nonzero elements of F_q).
Vec lv_weak_encode(const Vec& m, const LvWeakInstance& inst);
std::optional<Vec> lv_weak_decode(const Vec& x, const LvWeakInstance& inst);

}  // namespace lamd
