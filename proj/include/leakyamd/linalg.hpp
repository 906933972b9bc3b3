#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "leakyamd/field.hpp"

namespace lamd {

// Vector of residues sharing one modulus.
struct Vec {
    uint64_t modulus = 0;
    std::vector<uint64_t> values;

    Vec() = default;
    Vec(uint64_t m, std::vector<uint64_t> v);
    static Vec zero(uint64_t m, size_t n) { return Vec(m, std::vector<uint64_t>(n, 0)); }

    size_t size() const { return values.size(); }
    uint64_t operator[](size_t i) const { return values[i]; }
    uint64_t& operator[](size_t i) { return values[i]; }

    friend bool operator==(const Vec&, const Vec&) = default;
    friend bool operator<(const Vec& a, const Vec& b) { return a.values < b.values; }
};

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);

// Sub-vector at the (0-based, strictly increasing) positions in S.
Vec vec_restrict(const Vec& x, std::span<const size_t> S);

// Enumeration order for vectors of length n over F_q: index 0..q^n-1 maps to
// vectors in lexicographic order (component 0 most significant).
Vec vec_unpack(uint64_t index, size_t n, uint64_t q);
uint64_t vec_pack(const Vec& x);

// Row-major matrix over Z_m (m prime for the field paths; the exponent ring
// Z_{q-1} is allowed for det and unit tests).
struct Matrix {
    size_t rows = 0, cols = 0;
    uint64_t modulus = 0;
    std::vector<uint64_t> a;  // rows*cols entries

    Matrix() = default;
    Matrix(size_t r, size_t c, uint64_t m);
    Matrix(size_t r, size_t c, uint64_t m, std::vector<uint64_t> entries);
    static Matrix identity(size_t n, uint64_t m);

    uint64_t at(size_t r, size_t c) const { return a[r * cols + c]; }
    uint64_t& at(size_t r, size_t c) { return a[r * cols + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix mat_mul(const Matrix& A, const Matrix& B);
Matrix mat_transpose(const Matrix& A);
Matrix mat_stack(const Matrix& top, const Matrix& bottom);

// A * x^T as a column vector.
Vec mat_vec(const Matrix& A, const Vec& x);
// x * A for a row vector x.
Vec row_vec_mul(const Vec& x, const Matrix& A);

// Determinant mod the matrix modulus. Works over any Z_m (cofactor expansion,
// capped at 10x10); equal to the integer determinant reduced mod m.
uint64_t det(const Matrix& A);

size_t rank(const Matrix& A);              // prime modulus only
Matrix inverse(const Matrix& A);           // prime modulus only; throws if singular
Vec solve(const Matrix& A, const Vec& b);  // prime modulus only; unique solution

// Generator of an [n, dim] MDS (Reed-Solomon) code: row i holds the i-th
// powers of the evaluation points 1..n. Requires n <= q-1 so the points are
// distinct and nonzero.
Matrix rs_generator(size_t n, size_t dim, uint64_t q);

// Extend a full-row-rank G to an invertible square matrix by continuing the
// power sequence of the points 1..cols; returns only the appended rows.
Matrix complete_basis(const Matrix& G);

// H with H*G^T = 0 and H*Gtilde^T = I, so syndromes equal messages directly.
Matrix dual_parity_check(const Matrix& G, const Matrix& Gtilde);

}  // namespace lamd
