#include "leakyamd/adversary.hpp"

#include <algorithm>
#include <sstream>

namespace lamd {

namespace {

uint64_t offset_space(uint64_t q, size_t n) {
    try {
        return checked_pow(q, static_cast<unsigned>(n));
    } catch (const std::overflow_error&) {
        throw CapExceeded("offset space q^n does not fit 64 bits");
    }
}

void require_steps(uint64_t a, uint64_t b, const EnumerationLimits& lim, const char* what) {
    if (b != 0 && a > lim.cap / b)
        throw CapExceeded(std::string(what) + ": enumeration cap exceeded");
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

// Lazily memoized decoder over the packed codeword space.
class DecodeTable {
  public:
    explicit DecodeTable(const EnumeratedCode& code) : code_(code) {
        uint64_t qn = offset_space(code.q, code.n);
        if (qn <= (1ULL << 24)) table_.assign(qn, kUnknown);
    }

    // Decoded message index, or -1 for REJECT.
    int64_t lookup(const Vec& x) {
        if (table_.empty()) return direct(x);
        int32_t& slot = table_[vec_pack(x)];
        if (slot == kUnknown) slot = static_cast<int32_t>(direct(x));
        return slot;
    }

  private:
    static constexpr int32_t kUnknown = -2;

    int64_t direct(const Vec& x) const {
        auto r = code_.decode_index(x);
        return r.has_value() ? static_cast<int64_t>(*r) : -1;
    }

    const EnumeratedCode& code_;
    std::vector<int32_t> table_;
};

struct Member {
    const Vec* x;
    size_t own_msg;
};

void unpack_into(uint64_t index, uint64_t q, Vec& out) {
    for (size_t i = out.size(); i-- > 0;) {
        out[i] = index % q;
        index /= q;
    }
}

// Shared core of the limited-view optimum: per observable view, scan all
// offsets in lexicographic order and keep the first one maximizing the count
// of members decoding to a wrong message.
AttackOutcome best_attack(const EnumeratedCode& code, const std::vector<Member>& members,
                          std::span<const size_t> S, const EnumerationLimits& lim) {
    uint64_t qn = offset_space(code.q, code.n);
    require_steps(qn, members.size(), lim, "optimal_lv_attack");

    std::map<std::vector<uint64_t>, std::vector<Member>> classes;
    for (const Member& mem : members)
        classes[vec_restrict(*mem.x, S).values].push_back(mem);

    DecodeTable dt(code);
    std::vector<uint64_t> best_cnt(classes.size(), 0);
    std::vector<uint64_t> best_idx(classes.size(), 0);
    Vec delta = Vec::zero(code.q, code.n);
    Vec tampered = Vec::zero(code.q, code.n);
    for (uint64_t di = 0; di < qn; ++di) {
        unpack_into(di, code.q, delta);
        size_t ci = 0;
        for (const auto& [view, cls] : classes) {
            uint64_t cnt = 0;
            for (const Member& mem : cls) {
                for (size_t i = 0; i < code.n; ++i)
                    tampered[i] = mod_add((*mem.x)[i], delta[i], code.q);
                int64_t dec = dt.lookup(tampered);
                if (dec >= 0 && dec != static_cast<int64_t>(mem.own_msg)) ++cnt;
            }
            if (cnt > best_cnt[ci]) {
                best_cnt[ci] = cnt;
                best_idx[ci] = di;
            }
            ++ci;
        }
    }
    TamperStrategy strategy;
    strategy.read_set.assign(S.begin(), S.end());
    uint64_t hits = 0;
    size_t ci = 0;
    for (const auto& [view, cls] : classes) {
        hits += best_cnt[ci];
        strategy.offset_for_view.emplace(view, vec_unpack(best_idx[ci], code.n, code.q));
        ++ci;
    }
    return {Rational::from_count(hits, members.size()), std::move(strategy)};
}

std::vector<Member> strong_members(const EnumeratedCode& code, size_t msg_index) {
    if (msg_index >= code.messages.size())
        throw std::invalid_argument("attack: message index out of range");
    std::vector<Member> members;
    for (const Vec& x : code.encodings[msg_index]) members.push_back({&x, msg_index});
    return members;
}

std::vector<Member> uniform_members(const EnumeratedCode& code) {
    std::vector<Member> members;
    for (size_t m = 0; m < code.messages.size(); ++m)
        for (const Vec& x : code.encodings[m]) members.push_back({&x, m});
    return members;
}

void finalize_report(AttackReport& report) {
    report.worst = Rational(0);
    for (const AttackRow& row : report.rows)
        if (report.worst < row.success) report.worst = row.success;
    report.pass = report.worst <= report.bound && report.condition_ok;
}

}  // namespace

std::vector<std::vector<size_t>> subsets_of_size(size_t n, size_t size) {
    std::vector<std::vector<size_t>> out;
    if (size > n) return out;
    std::vector<size_t> cur(size);
    for (size_t i = 0; i < size; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        size_t pos = size;
        while (pos-- > 0) {
            if (cur[pos] + (size - pos) < n) {
                ++cur[pos];
                for (size_t j = pos + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
                break;
            }
            if (pos == 0) return out;
        }
        if (size == 0) return out;
    }
}

EnumeratedCode enumerate_amd(const AmdParams& p, const EnumerationLimits& lim) {
    uint64_t M = p.message_count();
    require_steps(M * p.q, p.d + 2, lim, "enumerate_amd");
    EnumeratedCode code;
    code.q = p.q;
    code.n = p.codeword_len();
    code.messages.reserve(M);
    code.encodings.reserve(M);
    for (uint64_t mi = 0; mi < M; ++mi) {
        Vec m = vec_unpack(mi, p.d, p.q);
        std::vector<Vec> enc;
        enc.reserve(p.q);
        for (uint64_t r = 0; r < p.q; ++r) enc.push_back(amd_encode(m, FieldElem(r, p.q), p));
        code.messages.push_back(std::move(m));
        code.encodings.push_back(std::move(enc));
    }
    code.decode_index = [p](const Vec& x) -> std::optional<size_t> {
        auto m = amd_decode(x, p);
        if (!m.has_value()) return std::nullopt;
        return static_cast<size_t>(vec_pack(*m));
    };
    return code;
}

EnumeratedCode enumerate_lv_strong(const LvStrongInstance& inst, const EnumerationLimits& lim) {
    uint64_t M = checked_pow(inst.wt2.q, static_cast<unsigned>(inst.k()));
    uint64_t jspace = checked_pow(inst.wt2.q, static_cast<unsigned>(inst.wt2.rand_len()));
    uint64_t rand_count = inst.wt2.q * jspace;
    require_steps(M * rand_count, inst.n() * inst.n(), lim, "enumerate_lv_strong");
    EnumeratedCode code;
    code.q = inst.wt2.q;
    code.n = inst.n();
    for (uint64_t mi = 0; mi < M; ++mi) {
        Vec m = vec_unpack(mi, inst.k(), code.q);
        std::vector<Vec> enc;
        enc.reserve(rand_count);
        for (uint64_t i = 0; i < code.q; ++i)
            for (uint64_t ji = 0; ji < jspace; ++ji)
                enc.push_back(lv_strong_encode(m, FieldElem(i, code.q),
                                               vec_unpack(ji, inst.wt2.rand_len(), code.q), inst));
        code.messages.push_back(std::move(m));
        code.encodings.push_back(std::move(enc));
    }
    code.decode_index = [inst](const Vec& x) -> std::optional<size_t> {
        auto m = lv_strong_decode(x, inst);
        if (!m.has_value()) return std::nullopt;
        return static_cast<size_t>(vec_pack(*m));
    };
    return code;
}

EnumeratedCode enumerate_lv_weak(const LvWeakInstance& inst, const EnumerationLimits& lim) {
    uint64_t M = inst.message_count();
    require_steps(M, inst.k * inst.k * 64, lim, "enumerate_lv_weak");
    EnumeratedCode code;
    code.q = inst.q;
    code.n = inst.n();
    code.weak = true;
    uint64_t base = inst.q - 1;
    for (uint64_t mi = 0; mi < M; ++mi) {
        // digits over 1..q-1, component 0 most significant
        Vec m = Vec::zero(inst.q, inst.k);
        uint64_t rem = mi;
        for (size_t i = inst.k; i-- > 0;) {
            m[i] = rem % base + 1;
            rem /= base;
        }
        code.encodings.push_back({lv_weak_encode(m, inst)});
        code.messages.push_back(std::move(m));
    }
    code.decode_index = [inst, base](const Vec& x) -> std::optional<size_t> {
        auto m = lv_weak_decode(x, inst);
        if (!m.has_value()) return std::nullopt;
        uint64_t idx = 0;
        for (size_t i = 0; i < m->size(); ++i) idx = idx * base + ((*m)[i] - 1);
        return static_cast<size_t>(idx);
    };
    return code;
}

AttackOutcome optimal_lv_attack(const EnumeratedCode& code, size_t msg_index,
                                std::span<const size_t> S, const EnumerationLimits& lim) {
    return best_attack(code, strong_members(code, msg_index), S, lim);
}

AttackOutcome optimal_lv_attack_uniform(const EnumeratedCode& code, std::span<const size_t> S,
                                        const EnumerationLimits& lim) {
    return best_attack(code, uniform_members(code), S, lim);
}

Rational exhaustive_offset_attack(const EnumeratedCode& code, size_t msg_index) {
    if (msg_index >= code.messages.size())
        throw std::invalid_argument("exhaustive_offset_attack: message index out of range");
    uint64_t qn = offset_space(code.q, code.n);
    const auto& enc = code.encodings[msg_index];
    uint64_t best = 0;
    for (uint64_t di = 1; di < qn; ++di) {
        Vec delta = vec_unpack(di, code.n, code.q);
        uint64_t cnt = 0;
        for (const Vec& x : enc) {
            auto dec = code.decode_index(vec_add(x, delta));
            if (dec.has_value() && *dec != msg_index) ++cnt;
        }
        best = std::max(best, cnt);
    }
    return Rational::from_count(best, enc.size());
}

Rational exhaustive_offset_attack_uniform(const EnumeratedCode& code) {
    uint64_t qn = offset_space(code.q, code.n);
    uint64_t total = 0;
    for (const auto& enc : code.encodings) total += enc.size();
    uint64_t best = 0;
    for (uint64_t di = 1; di < qn; ++di) {
        Vec delta = vec_unpack(di, code.n, code.q);
        uint64_t cnt = 0;
        for (size_t m = 0; m < code.messages.size(); ++m)
            for (const Vec& x : code.encodings[m]) {
                auto dec = code.decode_index(vec_add(x, delta));
                if (dec.has_value() && *dec != m) ++cnt;
            }
        best = std::max(best, cnt);
    }
    return Rational::from_count(best, total);
}

AttackReport empirical_delta_strong(const LvStrongInstance& inst, const EnumerationLimits& lim) {
    EnumeratedCode code = enumerate_lv_strong(inst, lim);
    AttackReport report;
    report.family = "lv-strong";
    report.bound = inst.delta();
    for (size_t mi = 0; mi < code.messages.size(); ++mi)
        for (size_t size = 0; size <= inst.read_budget(); ++size)
            for (const auto& S : subsets_of_size(inst.n(), size)) {
                auto outcome = optimal_lv_attack(code, mi, S, lim);
                report.rows.push_back({vec_str(code.messages[mi]), S, outcome.success});
            }
    finalize_report(report);
    return report;
}

AttackReport empirical_delta_weak(const LvWeakInstance& inst, size_t read_size,
                                  const EnumerationLimits& lim) {
    if (read_size > inst.n())
        throw std::invalid_argument("empirical_delta_weak: read size exceeds codeword length");
    EnumeratedCode code = enumerate_lv_weak(inst, lim);
    AttackReport report;
    report.family = "lv-weak";
    report.bound = inst.delta_bound();
    // The certified bound assumes k - (k+1)*rho >= 1 for rho = read_size/n.
    Rational margin = Rational(static_cast<long long>(inst.k)) -
                      Rational(static_cast<long long>(inst.k) + 1) *
                          Rational(static_cast<long long>(read_size), static_cast<long long>(inst.n()));
    if (margin < Rational(1)) {
        report.condition_ok = false;
        report.condition_note = "read budget violates k-(k+1)*rho >= 1";
    }
    for (size_t size = 0; size <= read_size; ++size)
        for (const auto& S : subsets_of_size(inst.n(), size)) {
            auto outcome = optimal_lv_attack_uniform(code, S, lim);
            report.rows.push_back({"*", S, outcome.success});
        }
    finalize_report(report);
    return report;
}

Rational wt2_secrecy_check(const Wt2Instance& inst, size_t max_view_size,
                           const EnumerationLimits& lim) {
    if (max_view_size > inst.n)
        throw std::invalid_argument("wt2_secrecy_check: view size exceeds codeword length");
    uint64_t M = checked_pow(inst.q, static_cast<unsigned>(inst.k_msg));
    uint64_t R = checked_pow(inst.q, static_cast<unsigned>(inst.rand_len()));
    require_steps(M * R + M * M, inst.n * (max_view_size + 1), lim, "wt2_secrecy_check");

    std::vector<std::vector<Vec>> words(M);
    for (uint64_t mi = 0; mi < M; ++mi) {
        Vec m = vec_unpack(mi, inst.k_msg, inst.q);
        words[mi].reserve(R);
        for (uint64_t ri = 0; ri < R; ++ri)
            words[mi].push_back(wt2_encode(m, vec_unpack(ri, inst.rand_len(), inst.q), inst));
    }
    Rational worst(0);
    for (size_t size = 0; size <= max_view_size; ++size)
        for (const auto& S : subsets_of_size(inst.n, size)) {
            std::vector<Distribution> views(M);
            for (uint64_t mi = 0; mi < M; ++mi) {
                std::vector<Vec> restricted;
                restricted.reserve(R);
                for (const Vec& w : words[mi]) restricted.push_back(vec_restrict(w, S));
                views[mi] = make_distribution(std::move(restricted));
            }
            for (uint64_t a = 0; a < M; ++a)
                for (uint64_t b = a + 1; b < M; ++b) {
                    Rational sd = statistical_distance(views[a], views[b]);
                    if (worst < sd) worst = sd;
                }
        }
    return worst;
}

Rational wt2_secrecy_check(const Wt2Instance& inst, const EnumerationLimits& lim) {
    return wt2_secrecy_check(inst, inst.rand_len(), lim);
}

namespace {

// Shares of every (i, j, rand) triple for one secret, with the inner codeword.
struct RrSample {
    Vec inner;                   // lv codeword, length r-t
    std::vector<uint64_t> shares;  // all N share values
};

std::vector<RrSample> rr_samples(const RobustRampScheme& scheme, const Vec& secret,
                                 const EnumerationLimits& lim) {
    uint64_t q = scheme.ramp.q;
    uint64_t jspace = checked_pow(q, static_cast<unsigned>(scheme.code.wt2.rand_len()));
    uint64_t rspace = checked_pow(q, static_cast<unsigned>(scheme.ramp.t));
    require_steps(q * jspace * rspace, scheme.ramp.N * scheme.ramp.r, lim, "rr_samples");
    std::vector<RrSample> samples;
    samples.reserve(q * jspace * rspace);
    for (uint64_t i = 0; i < q; ++i)
        for (uint64_t ji = 0; ji < jspace; ++ji) {
            Vec inner = lv_strong_encode(secret, FieldElem(i, q),
                                         vec_unpack(ji, scheme.code.wt2.rand_len(), q), scheme.code);
            for (uint64_t ri = 0; ri < rspace; ++ri) {
                ShareVector sv =
                    ramp_share(inner, vec_unpack(ri, scheme.ramp.t, q), scheme.ramp);
                RrSample s;
                s.inner = inner;
                s.shares.reserve(scheme.ramp.N);
                for (const auto& slot : sv.slots) s.shares.push_back(*slot);
                samples.push_back(std::move(s));
            }
        }
    return samples;
}

// First r participants (ascending) whose set contains every corrupted slot.
std::vector<size_t> reconstruction_subset(const std::vector<size_t>& corrupt, size_t r, size_t N) {
    std::vector<size_t> T(corrupt);
    for (size_t idx = 1; idx <= N && T.size() < r; ++idx)
        if (std::find(corrupt.begin(), corrupt.end(), idx) == corrupt.end()) T.push_back(idx);
    std::sort(T.begin(), T.end());
    return T;
}

}  // namespace

AttackReport rr_robustness_attack(const RobustRampScheme& scheme, size_t corrupt_count,
                                  const EnumerationLimits& lim) {
    if (corrupt_count > scheme.corrupt_budget())
        throw std::invalid_argument("rr_robustness_attack: corrupt count above t + floor(rho(r-t))");
    uint64_t q = scheme.ramp.q;
    size_t n_in = scheme.ramp.secret_len();
    uint64_t secrets = checked_pow(q, static_cast<unsigned>(scheme.k()));
    uint64_t opp = checked_pow(q, static_cast<unsigned>(corrupt_count));
    uint64_t triples = q * checked_pow(q, static_cast<unsigned>(scheme.code.wt2.rand_len())) *
                       checked_pow(q, static_cast<unsigned>(scheme.ramp.t));
    {
        uint64_t sets = subsets_of_size(scheme.ramp.N, corrupt_count).size();
        require_steps(opp, triples, lim, "rr_robustness_attack");
        require_steps(secrets, sets, lim, "rr_robustness_attack");
        require_steps(secrets * sets, opp * triples, lim, "rr_robustness_attack");
    }

    AttackReport report;
    report.family = "robust-ramp";
    report.bound = scheme.code.delta();

    EnumeratedCode inner_code = enumerate_lv_strong(scheme.code, lim);
    DecodeTable dt(inner_code);

    auto corrupt_sets = subsets_of_size(scheme.ramp.N, corrupt_count);
    for (auto& C : corrupt_sets)
        for (auto& idx : C) ++idx;  // participants are 1-based

    for (uint64_t si = 0; si < secrets; ++si) {
        Vec secret = vec_unpack(si, scheme.k(), q);
        auto samples = rr_samples(scheme, secret, lim);
        for (const auto& C : corrupt_sets) {
            auto T = reconstruction_subset(C, scheme.ramp.r, scheme.ramp.N);
            Matrix L = ramp_recover_coeffs(T, scheme.ramp);
            // Column of L corresponding to each corrupted participant.
            std::vector<size_t> col(C.size());
            for (size_t c = 0; c < C.size(); ++c)
                col[c] = static_cast<size_t>(
                    std::find(T.begin(), T.end(), C[c]) - T.begin());
            // Inner offsets realizable by tampering the corrupted shares.
            std::vector<Vec> inner_delta;
            inner_delta.reserve(opp);
            for (uint64_t oi = 0; oi < opp; ++oi) {
                Vec o = vec_unpack(oi, C.size(), q);
                Vec delta = Vec::zero(q, n_in);
                for (size_t c = 0; c < C.size(); ++c)
                    for (size_t row = 0; row < n_in; ++row)
                        delta[row] = mod_add(delta[row], mod_mul(o[c], L.at(row, col[c]), q), q);
                inner_delta.push_back(std::move(delta));
            }
            // Group samples by the adversary's view of the corrupted shares.
            std::map<std::vector<uint64_t>, std::vector<const Vec*>> classes;
            for (const auto& s : samples) {
                std::vector<uint64_t> view(C.size());
                for (size_t c = 0; c < C.size(); ++c) view[c] = s.shares[C[c] - 1];
                classes[view].push_back(&s.inner);
            }
            uint64_t hits = 0;
            Vec tampered = Vec::zero(q, n_in);
            for (const auto& [view, cls] : classes) {
                uint64_t best = 0;
                for (const Vec& delta : inner_delta) {
                    uint64_t cnt = 0;
                    for (const Vec* x : cls) {
                        for (size_t row = 0; row < n_in; ++row)
                            tampered[row] = mod_add((*x)[row], delta[row], q);
                        int64_t dec = dt.lookup(tampered);
                        if (dec >= 0 && dec != static_cast<int64_t>(si)) ++cnt;
                    }
                    best = std::max(best, cnt);
                }
                hits += best;
            }
            report.rows.push_back(
                {vec_str(secret), C, Rational::from_count(hits, samples.size())});
        }
    }
    finalize_report(report);
    return report;
}

Distribution codeword_distribution(const EnumeratedCode& code, size_t msg_index,
                                   const EnumerationLimits& lim) {
    if (msg_index >= code.messages.size())
        throw std::invalid_argument("codeword_distribution: message index out of range");
    require_steps(code.encodings[msg_index].size(), code.n, lim, "codeword_distribution");
    return make_distribution(code.encodings[msg_index]);
}

JointDistribution joint_codeword_view(const EnumeratedCode& code, size_t msg_index,
                                      std::span<const size_t> S, const EnumerationLimits& lim) {
    if (msg_index >= code.messages.size())
        throw std::invalid_argument("joint_codeword_view: message index out of range");
    require_steps(code.encodings[msg_index].size(), code.n, lim, "joint_codeword_view");
    std::vector<std::pair<Vec, Vec>> pairs;
    for (const Vec& x : code.encodings[msg_index]) pairs.emplace_back(x, vec_restrict(x, S));
    return make_joint(std::move(pairs));
}

JointDistribution joint_codeword_view_uniform(const EnumeratedCode& code,
                                              std::span<const size_t> S,
                                              const EnumerationLimits& lim) {
    std::vector<std::pair<Vec, Vec>> pairs;
    for (const auto& enc : code.encodings)
        for (const Vec& x : enc) pairs.emplace_back(x, vec_restrict(x, S));
    require_steps(pairs.size(), code.n, lim, "joint_codeword_view_uniform");
    return make_joint(std::move(pairs));
}

JointDistribution rr_joint_codeword_shareview(const RobustRampScheme& scheme, const Vec& secret,
                                              const std::vector<size_t>& corrupt,
                                              const EnumerationLimits& lim) {
    auto samples = rr_samples(scheme, secret, lim);
    std::vector<std::pair<Vec, Vec>> pairs;
    pairs.reserve(samples.size());
    for (const auto& s : samples) {
        Vec view = Vec::zero(scheme.ramp.q, corrupt.size());
        for (size_t c = 0; c < corrupt.size(); ++c) {
            if (corrupt[c] < 1 || corrupt[c] > scheme.ramp.N)
                throw std::invalid_argument("rr_joint_codeword_shareview: bad participant index");
            view[c] = s.shares[corrupt[c] - 1];
        }
        pairs.emplace_back(s.inner, view);
    }
    return make_joint(std::move(pairs));
}

Rational optimal_attack_on_joint(const JointDistribution& joint, const EnumeratedCode& code,
                                 const EnumerationLimits& lim) {
    uint64_t qn = offset_space(code.q, code.n);
    require_steps(qn, joint.support.size(), lim, "optimal_attack_on_joint");
    // Regroup by observation z; every x in the joint must be a valid codeword.
    std::map<Vec, std::vector<std::pair<const Vec*, Rational>>> classes;
    std::map<Vec, size_t> own;
    for (const auto& [x, z, w] : joint.support) {
        classes[z].emplace_back(&x, w);
        if (!own.count(x)) {
            auto dec = code.decode_index(x);
            if (!dec.has_value())
                throw std::invalid_argument("optimal_attack_on_joint: joint contains a non-codeword");
            own.emplace(x, *dec);
        }
    }
    DecodeTable dt(code);
    Rational total(0);
    for (const auto& [z, cls] : classes) {
        Rational best(0);
        for (uint64_t di = 0; di < qn; ++di) {
            Vec delta = vec_unpack(di, code.n, code.q);
            Rational mass(0);
            for (const auto& [x, w] : cls) {
                int64_t dec = dt.lookup(vec_add(*x, delta));
                if (dec >= 0 && dec != static_cast<int64_t>(own.at(*x))) mass = mass + w;
            }
            if (best < mass) best = mass;
        }
        total = total + best;
    }
    return total;
}

}  // namespace lamd
