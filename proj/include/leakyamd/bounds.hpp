#pragma once

#include <string>
#include <vector>

#include "leakyamd/rational.hpp"

namespace lamd {
namespace bounds {

// Slack for float comparisons wherever a logarithm enters a bound.
inline constexpr double kSlack = 1e-9;

// One evaluated inequality. All logarithms are base 2.
struct BoundReport {
    std::string name;
    std::string inputs;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string relation;  // "lhs <= rhs" or "lhs >= rhs"
    bool satisfied = false;
};

BoundReport make_le(std::string name, std::string inputs, double lhs, double rhs);
BoundReport make_ge(std::string name, std::string inputs, double lhs, double rhs);

// Smallest security parameter any code with M messages in a group of order G
// can claim: (M-1)/(G-1) for deterministic (weak) codes.
Rational amd_weak_min_delta(uint64_t M, uint64_t G);
// sqrt((M-1)/(G-1)) for randomized (strong) codes.
double amd_strong_min_delta(uint64_t M, uint64_t G);

// Rate bound for strong leaky-storage codes:
// k <= n(1-rho) + (2*log2(delta) - 1)/log2(q).
BoundReport strong_rho_bound_check(size_t n, size_t k, double rho, double delta, uint64_t q);
// Group-size form of the same row: G^(1-rho) >= (M-1)/delta^2 + 1.
BoundReport strong_rho_table_check(size_t n, size_t k, double rho, double delta, uint64_t q);

// Necessary conditions for weak leaky-storage codes:
// q^(rho*n - k) <= delta and (q^k - 1)/(q^n - 1) <= delta.
std::vector<BoundReport> weak_rho_bound_check(size_t n, size_t k, double rho, double delta,
                                              uint64_t q);

// Plain (leak-free) code rows: G >= (M-1)/delta + 1 and G >= (M-1)/delta^2 + 1.
BoundReport amd_weak_table_check(uint64_t M, uint64_t G, double delta);
BoundReport amd_strong_table_check(uint64_t M, uint64_t G, double delta);

// Conversions between the randomness-leakage parameterization (alpha, r bits)
// and the storage-leakage parameterization (rho).
double llr_strong_max_rho(double alpha, double r_bits, size_t n, uint64_t q);
struct StrongLlrParams {
    double max_alpha;
    double min_r_bits;
};
StrongLlrParams rho_strong_convert(double rho, size_t n, uint64_t q, double delta);
// Specialization of the conversion to the polynomial-tag code family:
// rho <= (1 - log_q((n-1)/delta)) / n.
double corollary_strong_max_rho(size_t n, uint64_t q, double delta);

double llr_weak_max_rho(double alpha, size_t k, size_t n);
double llr_weak_max_alpha(double rho, size_t k, size_t n);
double corollary_weak_max_rho(size_t n, uint64_t q, double delta);

// Reference-only randomness-leakage rows: minimum group sizes
// (M-1)(1-1/e)/delta^(2/(1-alpha)) + 1 (strong) and the larger of
// (M-1)(1-1/e)/delta^(1/(1-alpha)) + 1 and M^alpha(M-1)(1-1/e)/delta + 1 (weak).
struct LlrTableMinG {
    double strong_min_g;
    double weak_min_g;
};
LlrTableMinG llr_table_bounds(uint64_t M, double delta, double alpha);

// Rate ceiling 1 - rho for the secrecy layer and anything built on it.
Rational wt2_rate_bound(Rational rho);

// Tag overhead of a concrete code: log2(G) - log2(M) = (code_len - msg_len)*log2(q).
double tag_overhead_bits(uint64_t q, size_t msg_len, size_t code_len);

}  // namespace bounds
}  // namespace lamd
