#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "leakyamd/distribution.hpp"
#include "leakyamd/rampsss.hpp"

namespace lamd {

// Hard ceiling on exhaustive enumeration work. Oracles estimate their step
// count up front and refuse to run rather than silently sample.
struct EnumerationLimits {
    uint64_t cap = 100'000'000;
};

class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A code instance unrolled for exhaustive analysis: every message, every
// codeword over uniform encoder randomness, and a total decoder. The weak
// flag marks codes whose security statement is for a uniform message.
struct EnumeratedCode {
    uint64_t q = 0;
    size_t n = 0;
    bool weak = false;
    std::vector<Vec> messages;
    std::vector<std::vector<Vec>> encodings;  // [message][randomness]
    std::function<std::optional<size_t>(const Vec&)> decode_index;
};

EnumeratedCode enumerate_amd(const AmdParams& p, const EnumerationLimits& lim = {});
EnumeratedCode enumerate_lv_strong(const LvStrongInstance& inst, const EnumerationLimits& lim = {});
EnumeratedCode enumerate_lv_weak(const LvWeakInstance& inst, const EnumerationLimits& lim = {});

// One tampering strategy: a read set and, for every observable view, the
// offset added to the codeword.
struct TamperStrategy {
    std::vector<size_t> read_set;  // 0-based component positions
    std::map<std::vector<uint64_t>, Vec> offset_for_view;
};

struct AttackOutcome {
    Rational success;
    TamperStrategy strategy;
};

// Exact optimum over all strategies with the given read set: for each view,
// the lexicographically first offset maximizing the conditional probability
// that the decoder accepts a wrong message. Success for message m of a
// strong code.
AttackOutcome optimal_lv_attack(const EnumeratedCode& code, size_t msg_index,
                                std::span<const size_t> S, const EnumerationLimits& lim = {});

// Same optimum for a uniform message (weak codes).
AttackOutcome optimal_lv_attack_uniform(const EnumeratedCode& code, std::span<const size_t> S,
                                        const EnumerationLimits& lim = {});

// Independent oracles: best single view-oblivious offset, computed by direct
// double enumeration with no view machinery. Cross-checks the S = {} case of
// the optimal attack.
Rational exhaustive_offset_attack(const EnumeratedCode& code, size_t msg_index);
Rational exhaustive_offset_attack_uniform(const EnumeratedCode& code);

struct AttackRow {
    std::string message;           // "*" when the message is uniform
    std::vector<size_t> read_set;  // read positions (or corrupt participants)
    Rational success;
};

struct AttackReport {
    std::string family;
    std::vector<AttackRow> rows;
    Rational worst;
    Rational bound;
    bool pass = false;  // worst <= bound
    bool condition_ok = true;
    std::string condition_note;
};

// Certifies the strong limited-view code: every message, every read set of
// size at most the instance budget. Bound (k+1)/q.
AttackReport empirical_delta_strong(const LvStrongInstance& inst,
                                    const EnumerationLimits& lim = {});

// Certifies the weak code for a uniform nonzero message and read sets of size
// at most read_size. Bound psi*k/(q-1); flags read budgets that exceed the
// regime k - (k+1)*rho >= 1 where that bound is justified.
AttackReport empirical_delta_weak(const LvWeakInstance& inst, size_t read_size,
                                  const EnumerationLimits& lim = {});

// Exact maximum statistical distance between the views of two encodings over
// all message pairs and all read sets of size at most max_view_size. Zero for
// the coset-coding construction within its budget; sizes beyond the budget
// are allowed for diagnostics.
Rational wt2_secrecy_check(const Wt2Instance& inst, size_t max_view_size,
                           const EnumerationLimits& lim = {});
Rational wt2_secrecy_check(const Wt2Instance& inst, const EnumerationLimits& lim = {});

// Certifies robustness of the ramp composition: for every secret and every
// corrupt set of the given size, the adversary reads exactly the corrupted
// shares and adds the per-view optimal offsets to them; the reconstructor
// uses the first r participants containing every corrupted slot. Bound is
// the inner code's (k+1)/q.
AttackReport rr_robustness_attack(const RobustRampScheme& scheme, size_t corrupt_count,
                                  const EnumerationLimits& lim = {});

// Exact distribution of Enc(m) under uniform encoder randomness.
Distribution codeword_distribution(const EnumeratedCode& code, size_t msg_index,
                                   const EnumerationLimits& lim = {});

// Joint distribution of (codeword, view at S).
JointDistribution joint_codeword_view(const EnumeratedCode& code, size_t msg_index,
                                      std::span<const size_t> S,
                                      const EnumerationLimits& lim = {});
// Weak variant: message uniform, X = Enc(M).
JointDistribution joint_codeword_view_uniform(const EnumeratedCode& code,
                                              std::span<const size_t> S,
                                              const EnumerationLimits& lim = {});
// Ramp composition: X = inner codeword of the secret, Z = shares at the
// corrupt set (1-based participant indices).
JointDistribution rr_joint_codeword_shareview(const RobustRampScheme& scheme, const Vec& secret,
                                              const std::vector<size_t>& corrupt,
                                              const EnumerationLimits& lim = {});

// Best additive attack computed directly from a joint (x, z) distribution
// with offsets unrestricted over F_q^n; x must decode to its own message.
Rational optimal_attack_on_joint(const JointDistribution& joint, const EnumeratedCode& code,
                                 const EnumerationLimits& lim = {});

// All subsets of {0..n-1} of the given size, lexicographic.
std::vector<std::vector<size_t>> subsets_of_size(size_t n, size_t size);

}  // namespace lamd
