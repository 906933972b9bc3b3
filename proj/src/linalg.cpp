#include "leakyamd/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lamd {

namespace {

void require_same_modulus(uint64_t a, uint64_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": modulus mismatch");
}

void require_prime_modulus(const Matrix& A, const char* what) {
    if (!is_prime(A.modulus))
        throw std::invalid_argument(std::string(what) + ": requires a prime modulus");
}

}  // namespace

Vec::Vec(uint64_t m, std::vector<uint64_t> v) : modulus(m), values(std::move(v)) {
    if (m < 2 || m > kMaxModulus) throw std::invalid_argument("Vec: modulus out of range");
    for (auto& x : values) x %= m;
}

Vec vec_add(const Vec& a, const Vec& b) {
    require_same_modulus(a.modulus, b.modulus, "vec_add");
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    Vec out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] = mod_add(a[i], b[i], a.modulus);
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    require_same_modulus(a.modulus, b.modulus, "vec_sub");
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
    Vec out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] = mod_sub(a[i], b[i], a.modulus);
    return out;
}

Vec vec_restrict(const Vec& x, std::span<const size_t> S) {
    Vec out;
    out.modulus = x.modulus;
    out.values.reserve(S.size());
    for (size_t i : S) {
        if (i >= x.size()) throw std::invalid_argument("vec_restrict: index out of range");
        out.values.push_back(x[i]);
    }
    return out;
}

Vec vec_unpack(uint64_t index, size_t n, uint64_t q) {
    Vec out = Vec::zero(q, n);
    for (size_t i = n; i-- > 0;) {
        out[i] = index % q;
        index /= q;
    }
    return out;
}

uint64_t vec_pack(const Vec& x) {
    uint64_t idx = 0;
    for (size_t i = 0; i < x.size(); ++i) idx = idx * x.modulus + x[i];
    return idx;
}

Matrix::Matrix(size_t r, size_t c, uint64_t m) : rows(r), cols(c), modulus(m), a(r * c, 0) {
    if (m < 2 || m > kMaxModulus) throw std::invalid_argument("Matrix: modulus out of range");
}

Matrix::Matrix(size_t r, size_t c, uint64_t m, std::vector<uint64_t> entries) : Matrix(r, c, m) {
    if (entries.size() != r * c) throw std::invalid_argument("Matrix: entry count mismatch");
    a = std::move(entries);
    for (auto& x : a) x %= m;
}

Matrix Matrix::identity(size_t n, uint64_t m) {
    Matrix I(n, n, m);
    for (size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

Matrix mat_mul(const Matrix& A, const Matrix& B) {
    require_same_modulus(A.modulus, B.modulus, "mat_mul");
    if (A.cols != B.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Matrix C(A.rows, B.cols, A.modulus);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t k = 0; k < A.cols; ++k) {
            uint64_t aik = A.at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < B.cols; ++j)
                C.at(i, j) = mod_add(C.at(i, j), mod_mul(aik, B.at(k, j), A.modulus), A.modulus);
        }
    return C;
}

Matrix mat_transpose(const Matrix& A) {
    Matrix T(A.cols, A.rows, A.modulus);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Matrix mat_stack(const Matrix& top, const Matrix& bottom) {
    require_same_modulus(top.modulus, bottom.modulus, "mat_stack");
    if (bottom.rows == 0) return top;
    if (top.cols != bottom.cols) throw std::invalid_argument("mat_stack: width mismatch");
    Matrix S(top.rows + bottom.rows, top.cols, top.modulus);
    std::copy(top.a.begin(), top.a.end(), S.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(), S.a.begin() + top.a.size());
    return S;
}

Vec mat_vec(const Matrix& A, const Vec& x) {
    require_same_modulus(A.modulus, x.modulus, "mat_vec");
    if (A.cols != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    Vec out = Vec::zero(A.modulus, A.rows);
    for (size_t i = 0; i < A.rows; ++i) {
        uint64_t acc = 0;
        for (size_t j = 0; j < A.cols; ++j)
            acc = mod_add(acc, mod_mul(A.at(i, j), x[j], A.modulus), A.modulus);
        out[i] = acc;
    }
    return out;
}

Vec row_vec_mul(const Vec& x, const Matrix& A) {
    require_same_modulus(A.modulus, x.modulus, "row_vec_mul");
    if (A.rows != x.size()) throw std::invalid_argument("row_vec_mul: shape mismatch");
    Vec out = Vec::zero(A.modulus, A.cols);
    for (size_t i = 0; i < A.rows; ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < A.cols; ++j)
            out[j] = mod_add(out[j], mod_mul(x[i], A.at(i, j), A.modulus), A.modulus);
    }
    return out;
}

uint64_t det(const Matrix& A) {
    if (A.rows != A.cols) throw std::invalid_argument("det: square matrix required");
    if (A.rows > 10) throw std::invalid_argument("det: dimension cap exceeded");
    if (A.rows == 0) return 1 % A.modulus;
    // Cofactor expansion over Z_m; valid for composite moduli where Gaussian
    // elimination is not.
    if (A.rows == 1) return A.at(0, 0);
    uint64_t m = A.modulus;
    uint64_t acc = 0;
    for (size_t j = 0; j < A.cols; ++j) {
        if (A.at(0, j) == 0) continue;
        Matrix minor(A.rows - 1, A.cols - 1, m);
        for (size_t r = 1; r < A.rows; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < A.cols; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = A.at(r, c);
            }
        }
        uint64_t term = mod_mul(A.at(0, j), det(minor), m);
        acc = (j % 2 == 0) ? mod_add(acc, term, m) : mod_sub(acc, term, m);
    }
    return acc;
}

namespace {

// Gauss-Jordan over F_q on [A | B]; returns false if A is singular.
bool gauss_jordan(Matrix& A, Matrix& B) {
    size_t n = A.rows;
    uint64_t q = A.modulus;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A.at(piv, col) == 0) ++piv;
        if (piv == n) return false;
        if (piv != col) {
            for (size_t j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(col, j));
            for (size_t j = 0; j < B.cols; ++j) std::swap(B.at(piv, j), B.at(col, j));
        }
        uint64_t inv = mod_inv(A.at(col, col), q);
        for (size_t j = 0; j < A.cols; ++j) A.at(col, j) = mod_mul(A.at(col, j), inv, q);
        for (size_t j = 0; j < B.cols; ++j) B.at(col, j) = mod_mul(B.at(col, j), inv, q);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || A.at(r, col) == 0) continue;
            uint64_t f = A.at(r, col);
            for (size_t j = 0; j < A.cols; ++j)
                A.at(r, j) = mod_sub(A.at(r, j), mod_mul(f, A.at(col, j), q), q);
            for (size_t j = 0; j < B.cols; ++j)
                B.at(r, j) = mod_sub(B.at(r, j), mod_mul(f, B.at(col, j), q), q);
        }
    }
    return true;
}

}  // namespace

size_t rank(const Matrix& A) {
    require_prime_modulus(A, "rank");
    Matrix M = A;
    uint64_t q = M.modulus;
    size_t rk = 0;
    for (size_t col = 0; col < M.cols && rk < M.rows; ++col) {
        size_t piv = rk;
        while (piv < M.rows && M.at(piv, col) == 0) ++piv;
        if (piv == M.rows) continue;
        for (size_t j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(rk, j));
        uint64_t inv = mod_inv(M.at(rk, col), q);
        for (size_t j = 0; j < M.cols; ++j) M.at(rk, j) = mod_mul(M.at(rk, j), inv, q);
        for (size_t r = 0; r < M.rows; ++r) {
            if (r == rk || M.at(r, col) == 0) continue;
            uint64_t f = M.at(r, col);
            for (size_t j = 0; j < M.cols; ++j)
                M.at(r, j) = mod_sub(M.at(r, j), mod_mul(f, M.at(rk, j), q), q);
        }
        ++rk;
    }
    return rk;
}

Matrix inverse(const Matrix& A) {
    require_prime_modulus(A, "inverse");
    if (A.rows != A.cols) throw std::invalid_argument("inverse: square matrix required");
    Matrix M = A;
    Matrix I = Matrix::identity(A.rows, A.modulus);
    if (!gauss_jordan(M, I)) throw std::invalid_argument("inverse: singular matrix");
    return I;
}

Vec solve(const Matrix& A, const Vec& b) {
    require_prime_modulus(A, "solve");
    require_same_modulus(A.modulus, b.modulus, "solve");
    if (A.rows != A.cols || A.rows != b.size())
        throw std::invalid_argument("solve: shape mismatch");
    Matrix M = A;
    Matrix B(b.size(), 1, b.modulus);
    for (size_t i = 0; i < b.size(); ++i) B.at(i, 0) = b[i];
    if (!gauss_jordan(M, B)) throw std::invalid_argument("solve: singular matrix");
    Vec out = Vec::zero(b.modulus, b.size());
    for (size_t i = 0; i < b.size(); ++i) out[i] = B.at(i, 0);
    return out;
}

Matrix rs_generator(size_t n, size_t dim, uint64_t q) {
    if (!is_prime(q)) throw std::invalid_argument("rs_generator: q must be prime");
    if (n > q - 1)
        throw std::invalid_argument("rs_generator: need n distinct nonzero points, n <= q-1");
    if (dim == 0 || dim > n) throw std::invalid_argument("rs_generator: dimension out of range");
    Matrix G(dim, n, q);
    for (size_t j = 0; j < n; ++j) {
        uint64_t point = static_cast<uint64_t>(j + 1) % q;
        uint64_t p = 1;
        for (size_t i = 0; i < dim; ++i) {
            G.at(i, j) = p;
            p = mod_mul(p, point, q);
        }
    }
    return G;
}

Matrix complete_basis(const Matrix& G) {
    require_prime_modulus(G, "complete_basis");
    if (G.rows > G.cols) throw std::invalid_argument("complete_basis: more rows than columns");
    if (rank(G) != G.rows) throw std::invalid_argument("complete_basis: rank-deficient input");
    size_t n = G.cols;
    uint64_t q = G.modulus;
    Matrix extra(0, n, q);
    Matrix work = G;
    // Continue the power sequence of the points 1..n; a candidate row is kept
    // iff it increases the rank. For Vandermonde inputs this appends exactly
    // the next powers.
    for (uint64_t e = G.rows; work.rows < n && e < G.rows + 2 * (q - 1); ++e) {
        Matrix cand(1, n, q);
        for (size_t j = 0; j < n; ++j)
            cand.at(0, j) = mod_pow(static_cast<uint64_t>(j + 1) % q, e, q);
        Matrix trial = mat_stack(work, cand);
        if (rank(trial) == work.rows + 1) {
            work = trial;
            extra = mat_stack(extra, cand);
        }
    }
    if (work.rows != n)
        throw std::invalid_argument("complete_basis: power sequence cannot complete this basis");
    return extra;
}

Matrix dual_parity_check(const Matrix& G, const Matrix& Gtilde) {
    require_same_modulus(G.modulus, Gtilde.modulus, "dual_parity_check");
    if (G.cols != Gtilde.cols) throw std::invalid_argument("dual_parity_check: width mismatch");
    size_t n = G.cols, k = Gtilde.rows;
    if (G.rows + k != n) throw std::invalid_argument("dual_parity_check: stack is not square");
    Matrix B = mat_stack(G, Gtilde);
    Matrix Binv = inverse(B);  // throws if the stack is singular
    // H = ([0 | I_k] * B^{-1})^T rows, i.e. the last k columns of B^{-1} transposed.
    Matrix H(k, n, G.modulus);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) H.at(i, j) = Binv.at(j, n - k + i);
    return H;
}

}  // namespace lamd
