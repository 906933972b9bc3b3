#include "leakyamd/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace lamd {
namespace bounds {

BoundReport make_le(std::string name, std::string inputs, double lhs, double rhs) {
    BoundReport r;
    r.name = std::move(name);
    r.inputs = std::move(inputs);
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = "lhs <= rhs";
    r.satisfied = lhs <= rhs + kSlack;
    return r;
}

BoundReport make_ge(std::string name, std::string inputs, double lhs, double rhs) {
    BoundReport r = make_le(std::move(name), std::move(inputs), lhs, rhs);
    r.relation = "lhs >= rhs";
    r.satisfied = r.lhs >= r.rhs - kSlack;
    return r;
}

namespace {

std::string fmt(std::initializer_list<std::pair<const char*, double>> kv) {
    std::string out;
    for (const auto& [k, v] : kv) {
        if (!out.empty()) out += ", ";
        out += k;
        out += "=";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", v);
        out += buf;
    }
    return out;
}

void require_delta(double delta) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("bounds: delta must lie in (0, 1]");
}

// The conversion formulas stay well-defined for vacuous delta >= 1.
void require_positive_delta(double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("bounds: delta must be positive");
}

}  // namespace

Rational amd_weak_min_delta(uint64_t M, uint64_t G) {
    if (M < 1) throw std::invalid_argument("amd_weak_min_delta: M must be >= 1");
    if (G < 2) throw std::invalid_argument("amd_weak_min_delta: G must be > 1");
    return Rational(static_cast<long long>(M) - 1, static_cast<long long>(G) - 1);
}

double amd_strong_min_delta(uint64_t M, uint64_t G) {
    return std::sqrt(amd_weak_min_delta(M, G).to_double());
}

BoundReport strong_rho_bound_check(size_t n, size_t k, double rho, double delta, uint64_t q) {
    require_delta(delta);
    double rhs = static_cast<double>(n) * (1.0 - rho) +
                 (2.0 * std::log2(delta) - 1.0) / std::log2(static_cast<double>(q));
    return make_le("strong-rho-rate",
                   fmt({{"n", double(n)}, {"k", double(k)}, {"rho", rho}, {"delta", delta}, {"q", double(q)}}),
                   static_cast<double>(k), rhs);
}

BoundReport strong_rho_table_check(size_t n, size_t k, double rho, double delta, uint64_t q) {
    require_delta(delta);
    double logq = std::log2(static_cast<double>(q));
    // Compare in log2 to keep large group sizes finite:
    // (1-rho)*n*log2(q) >= log2((M-1)/delta^2 + 1).
    double M = std::pow(static_cast<double>(q), static_cast<double>(k));
    double rhs = std::log2((M - 1.0) / (delta * delta) + 1.0);
    return make_ge("strong-rho-group",
                   fmt({{"n", double(n)}, {"k", double(k)}, {"rho", rho}, {"delta", delta}, {"q", double(q)}}),
                   (1.0 - rho) * static_cast<double>(n) * logq, rhs);
}

std::vector<BoundReport> weak_rho_bound_check(size_t n, size_t k, double rho, double delta,
                                              uint64_t q) {
    require_delta(delta);
    double logq = std::log2(static_cast<double>(q));
    std::string in =
        fmt({{"n", double(n)}, {"k", double(k)}, {"rho", rho}, {"delta", delta}, {"q", double(q)}});
    std::vector<BoundReport> out;
    // q^(rho*n-k) <= delta, compared as (rho*n-k)*log2(q) <= log2(delta).
    out.push_back(make_le("weak-rho-entropy", in,
                          (rho * static_cast<double>(n) - static_cast<double>(k)) * logq,
                          std::log2(delta)));
    double Mm1 = std::pow(static_cast<double>(q), static_cast<double>(k)) - 1.0;
    double Gm1 = std::pow(static_cast<double>(q), static_cast<double>(n)) - 1.0;
    out.push_back(make_le("weak-rho-random-offset", in, Mm1 / Gm1, delta));
    return out;
}

BoundReport amd_weak_table_check(uint64_t M, uint64_t G, double delta) {
    require_delta(delta);
    return make_ge("weak-amd-group", fmt({{"M", double(M)}, {"G", double(G)}, {"delta", delta}}),
                   static_cast<double>(G), (static_cast<double>(M) - 1.0) / delta + 1.0);
}

BoundReport amd_strong_table_check(uint64_t M, uint64_t G, double delta) {
    require_delta(delta);
    return make_ge("strong-amd-group", fmt({{"M", double(M)}, {"G", double(G)}, {"delta", delta}}),
                   static_cast<double>(G),
                   (static_cast<double>(M) - 1.0) / (delta * delta) + 1.0);
}

double llr_strong_max_rho(double alpha, double r_bits, size_t n, uint64_t q) {
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("llr_strong_max_rho: bad alpha");
    if (r_bits < 0.0) throw std::invalid_argument("llr_strong_max_rho: bad randomness size");
    return alpha * r_bits / (static_cast<double>(n) * std::log2(static_cast<double>(q)));
}

StrongLlrParams rho_strong_convert(double rho, size_t n, uint64_t q, double delta) {
    require_positive_delta(delta);
    if (rho < 0.0 || rho > 1.0) throw std::invalid_argument("rho_strong_convert: bad rho");
    double leak_bits = rho * static_cast<double>(n) * std::log2(static_cast<double>(q));
    double min_r = std::log2(1.0 / delta) + leak_bits;
    // alpha is a fraction of the encoder randomness, so it caps at 1.
    double max_alpha = min_r > 0.0 ? std::min(1.0, leak_bits / min_r) : 0.0;
    return {max_alpha, min_r};
}

double corollary_strong_max_rho(size_t n, uint64_t q, double delta) {
    require_positive_delta(delta);
    if (n < 2) throw std::invalid_argument("corollary_strong_max_rho: n must be >= 2");
    double logq = std::log2(static_cast<double>(q));
    return (1.0 - std::log2((static_cast<double>(n) - 1.0) / delta) / logq) / static_cast<double>(n);
}

double llr_weak_max_rho(double alpha, size_t k, size_t n) {
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("llr_weak_max_rho: bad alpha");
    return alpha * static_cast<double>(k) / static_cast<double>(n);
}

double llr_weak_max_alpha(double rho, size_t k, size_t n) {
    if (rho < 0.0 || rho > 1.0) throw std::invalid_argument("llr_weak_max_alpha: bad rho");
    return rho * static_cast<double>(n) / static_cast<double>(k);
}

double corollary_weak_max_rho(size_t n, uint64_t q, double delta) {
    require_positive_delta(delta);
    double logq = std::log2(static_cast<double>(q));
    return (1.0 - std::log2(2.0 / delta) / logq) / static_cast<double>(n);
}

LlrTableMinG llr_table_bounds(uint64_t M, double delta, double alpha) {
    require_delta(delta);
    if (alpha < 0.0 || alpha >= 1.0)
        throw std::invalid_argument("llr_table_bounds: alpha must lie in [0, 1)");
    double Mm1 = static_cast<double>(M) - 1.0;
    double c = 1.0 - std::exp(-1.0);
    double strong = Mm1 * c / std::pow(delta, 2.0 / (1.0 - alpha)) + 1.0;
    double weak_a = Mm1 * c / std::pow(delta, 1.0 / (1.0 - alpha)) + 1.0;
    double weak_b = std::pow(static_cast<double>(M), alpha) * Mm1 * c / delta + 1.0;
    return {strong, std::max(weak_a, weak_b)};
}

Rational wt2_rate_bound(Rational rho) { return Rational(1) - rho; }

double tag_overhead_bits(uint64_t q, size_t msg_len, size_t code_len) {
    if (code_len < msg_len) throw std::invalid_argument("tag_overhead_bits: negative overhead");
    return static_cast<double>(code_len - msg_len) * std::log2(static_cast<double>(q));
}

}  // namespace bounds
}  // namespace lamd
