#include "leakyamd/lvamd.hpp"

#include <cmath>
#include <stdexcept>

namespace lamd {

LvStrongInstance LvStrongInstance::create(uint64_t q, size_t k, size_t n) {
    if (n <= k + 2)
        throw std::invalid_argument("LvStrongInstance: need n > k+2 for a positive read budget");
    LvStrongInstance inst{AmdParams::create(q, k), Wt2Instance::create(q, n, k + 2)};
    return inst;
}

Vec lv_strong_encode(const Vec& m, FieldElem i, const Vec& j, const LvStrongInstance& inst) {
    return wt2_encode(amd_encode(m, i, inst.amd), j, inst.wt2);
}

std::optional<Vec> lv_strong_decode(const Vec& x, const LvStrongInstance& inst) {
    return amd_decode(wt2_decode(x, inst.wt2), inst.amd);
}

namespace {

uint64_t entry_cap(size_t k, const Rational& psi) {
    // floor(psi * k), the largest admissible exponent entry
    Rational cap = psi * Rational(static_cast<long long>(k));
    long long fl = cap.num() / cap.den();
    return fl < 0 ? 0 : static_cast<uint64_t>(fl);
}

bool columns_distinct(const Matrix& g) {
    for (size_t j = 0; j < g.cols; ++j)
        for (size_t i = 0; i < g.rows; ++i)
            for (size_t i2 = i + 1; i2 < g.rows; ++i2)
                if (g.at(i, j) == g.at(i2, j)) return false;
    return true;
}

void validate_weak_matrix(const Matrix& g, uint64_t q, size_t k, const Rational& psi) {
    if (g.rows != k || g.cols != k) throw std::invalid_argument("weak exponent matrix: bad shape");
    if (g.modulus != q - 1)
        throw std::invalid_argument("weak exponent matrix: modulus must be q-1");
    uint64_t cap = entry_cap(k, psi);
    for (uint64_t e : g.a) {
        if (e == 0 || e > cap)
            throw std::invalid_argument("weak exponent matrix: entry outside [1, psi*k]");
    }
    if (!columns_distinct(g))
        throw std::invalid_argument("weak exponent matrix: repeated entry within a column");
    if (!is_unit_mod(ExpElem(det(g), q - 1)))
        throw std::invalid_argument("weak exponent matrix: determinant is not a unit mod q-1");
}

}  // namespace

namespace {

bool next_odometer(std::vector<size_t>& counters, size_t radix) {
    for (size_t pos = counters.size(); pos-- > 0;) {
        if (++counters[pos] < radix) return true;
        counters[pos] = 0;
    }
    return false;
}

// Next k-subset of {1..limit} in lexicographic order; false when exhausted.
bool next_subset(std::vector<uint64_t>& s, uint64_t limit) {
    size_t k = s.size();
    for (size_t pos = k; pos-- > 0;) {
        if (s[pos] + (k - pos) <= limit) {
            ++s[pos];
            for (size_t j = pos + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

Matrix lv_weak_matrix(size_t k, uint64_t q, Rational psi) {
    if (!is_prime(q) || q < 3) throw std::invalid_argument("lv_weak_matrix: q must be a prime >= 3");
    if (k < 1) throw std::invalid_argument("lv_weak_matrix: k must be >= 1");
    uint64_t cap = entry_cap(k, psi);
    if (cap < k)
        throw std::invalid_argument("lv_weak_matrix: entry bound psi*k too small for distinct columns");
    if (cap < 2 * k - 1)
        throw std::invalid_argument("lv_weak_matrix: entry bound leaves no room for shifted columns");
    // Candidates: a base shape S (a k-subset of [1, cap-k+1]); column j is the
    // shape translated by j and cyclically rotated by rot[j]. Scanned in
    // lexicographic (shape, rotations) order; the first one whose determinant
    // is a unit mod q-1 wins. Plain progressions come first, so small k keep
    // the staircase form; from k=4 on only non-progression shapes can have
    // odd determinant (all translates of a progression agree mod 2 up to
    // complement, forcing an even determinant).
    double space = 1.0;
    for (size_t i = 0; i < k; ++i) space *= static_cast<double>(k);  // rotations
    {
        double choose = 1.0;
        for (size_t i = 0; i < k; ++i)
            choose *= static_cast<double>(cap - k + 1 - i) / static_cast<double>(i + 1);
        space *= choose;
    }
    if (space > 1e7)
        throw std::invalid_argument("lv_weak_matrix: candidate space too large for this k");
    std::vector<uint64_t> shape(k);
    for (size_t i = 0; i < k; ++i) shape[i] = i + 1;
    do {
        std::vector<size_t> rot(k, 0);
        do {
            Matrix g(k, k, q - 1);
            for (size_t j = 0; j < k; ++j)
                for (size_t i = 0; i < k; ++i) g.at(i, j) = shape[(i + rot[j]) % k] + j;
            if (is_unit_mod(ExpElem(det(g), q - 1))) {
                validate_weak_matrix(g, q, k, psi);
                return g;
            }
        } while (next_odometer(rot, k));
    } while (next_subset(shape, cap - k + 1));
    throw std::invalid_argument("lv_weak_matrix: no unit-determinant candidate within entry bound");
}

LvWeakInstance LvWeakInstance::create(uint64_t q, size_t k, Rational psi) {
    return from_matrix(q, lv_weak_matrix(k, q, psi), psi);
}

LvWeakInstance LvWeakInstance::from_matrix(uint64_t q, Matrix gmat, Rational psi) {
    if (!is_prime(q) || q < 3)
        throw std::invalid_argument("LvWeakInstance: q must be a prime >= 3");
    validate_weak_matrix(gmat, q, gmat.rows, psi);
    LvWeakInstance inst;
    inst.q = q;
    inst.k = gmat.rows;
    inst.beta = primitive_element(q);
    inst.gmat = std::move(gmat);
    inst.psi = psi;
    return inst;
}

uint64_t lv_weak_tag(const Vec& m, const LvWeakInstance& inst) {
    if (m.modulus != inst.q || m.size() != inst.k)
        throw std::invalid_argument("lv_weak_tag: bad message shape");
    uint64_t tag = 0;
    for (size_t j = 0; j < inst.k; ++j) {
        uint64_t prod = 1;
        for (size_t i = 0; i < inst.k; ++i)
            prod = mod_mul(prod, mod_pow(m[i], inst.gmat.at(i, j), inst.q), inst.q);
        tag = mod_add(tag, prod, inst.q);
    }
    return tag;
}

Vec lv_weak_encode(const Vec& m, const LvWeakInstance& inst) {
    if (m.modulus != inst.q || m.size() != inst.k)
        throw std::invalid_argument("lv_weak_encode: bad message shape");
    for (uint64_t mi : m.values)
        if (mi == 0) throw std::invalid_argument("lv_weak_encode: message components must be nonzero");
    Vec out = m;
    out.values.push_back(lv_weak_tag(m, inst));
    return out;
}

std::optional<Vec> lv_weak_decode(const Vec& x, const LvWeakInstance& inst) {
    if (x.modulus != inst.q || x.size() != inst.k + 1)
        throw std::invalid_argument("lv_weak_decode: bad codeword shape");
    Vec m(inst.q, std::vector<uint64_t>(x.values.begin(), x.values.begin() + inst.k));
    for (uint64_t mi : m.values)
        if (mi == 0) return std::nullopt;
    if (lv_weak_tag(m, inst) != x[inst.k]) return std::nullopt;
    return m;
}

}  // namespace lamd
