#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leakyamd/adversary.hpp"
#include "leakyamd/bounds.hpp"

namespace py = pybind11;
using namespace lamd;

namespace {

Vec to_vec(const std::vector<uint64_t>& values, uint64_t q) { return Vec(q, values); }

py::object decode_result(const std::optional<Vec>& r) {
    if (!r.has_value()) return py::none();  // REJECT
    return py::cast(r->values);
}

std::vector<std::optional<uint64_t>> share_slots(const ShareVector& sv) { return sv.slots; }

ShareVector to_shares(const std::vector<std::optional<uint64_t>>& slots, uint64_t q) {
    ShareVector sv;
    sv.modulus = q;
    sv.slots = slots;
    return sv;
}

py::dict report_dict(const AttackReport& r) {
    py::dict out;
    out["family"] = r.family;
    py::list rows;
    for (const auto& row : r.rows) {
        py::dict item;
        item["message"] = row.message;
        item["read_set"] = row.read_set;
        item["success"] = row.success.str();
        rows.append(std::move(item));
    }
    out["rows"] = std::move(rows);
    out["worst"] = r.worst.str();
    out["bound"] = r.bound.str();
    out["pass"] = r.pass;
    out["condition_ok"] = r.condition_ok;
    if (!r.condition_note.empty()) out["condition_note"] = r.condition_note;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "algebraic manipulation detection codes for leaky storage";

    py::register_exception<CapExceeded>(m, "CapExceeded");

    py::class_<Rational>(m, "Rational")
        .def(py::init<long long, long long>(), py::arg("num"), py::arg("den") = 1)
        .def_property_readonly("num", &Rational::num)
        .def_property_readonly("den", &Rational::den)
        .def("__float__", &Rational::to_double)
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; })
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
        .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; });

    py::class_<Matrix>(m, "Matrix")
        .def_readonly("rows", &Matrix::rows)
        .def_readonly("cols", &Matrix::cols)
        .def_readonly("modulus", &Matrix::modulus)
        .def("to_list", [](const Matrix& m_) {
            std::vector<std::vector<uint64_t>> out(m_.rows,
                                                   std::vector<uint64_t>(m_.cols));
            for (size_t i = 0; i < m_.rows; ++i)
                for (size_t j = 0; j < m_.cols; ++j) out[i][j] = m_.at(i, j);
            return out;
        });

    // tag code
    py::class_<AmdParams>(m, "AmdParams")
        .def_static("create", &AmdParams::create, py::arg("q"), py::arg("d"))
        .def_readonly("q", &AmdParams::q)
        .def_readonly("d", &AmdParams::d)
        .def("delta", &AmdParams::delta)
        .def("message_count", &AmdParams::message_count)
        .def("group_count", &AmdParams::group_count);
    m.def("amd_encode",
          [](const std::vector<uint64_t>& msg, uint64_t r, const AmdParams& p) {
              return amd_encode(to_vec(msg, p.q), FieldElem(r, p.q), p).values;
          },
          py::arg("msg"), py::arg("r"), py::arg("params"));
    m.def("amd_decode",
          [](const std::vector<uint64_t>& word, const AmdParams& p) {
              return decode_result(amd_decode(to_vec(word, p.q), p));
          },
          py::arg("word"), py::arg("params"));

    // secrecy layer
    py::class_<Wt2Instance>(m, "Wt2Instance")
        .def_static("create", &Wt2Instance::create, py::arg("q"), py::arg("n"), py::arg("k_msg"))
        .def_readonly("q", &Wt2Instance::q)
        .def_readonly("n", &Wt2Instance::n)
        .def_readonly("k_msg", &Wt2Instance::k_msg)
        .def_readonly("G", &Wt2Instance::G)
        .def_readonly("Gtilde", &Wt2Instance::Gtilde)
        .def_readonly("H", &Wt2Instance::H)
        .def("rand_len", &Wt2Instance::rand_len)
        .def("rho", &Wt2Instance::rho);
    m.def("wt2_encode",
          [](const std::vector<uint64_t>& msg, const std::vector<uint64_t>& r,
             const Wt2Instance& inst) {
              return wt2_encode(to_vec(msg, inst.q), to_vec(r, inst.q), inst).values;
          },
          py::arg("msg"), py::arg("r"), py::arg("inst"));
    m.def("wt2_decode",
          [](const std::vector<uint64_t>& word, const Wt2Instance& inst) {
              return wt2_decode(to_vec(word, inst.q), inst).values;
          },
          py::arg("word"), py::arg("inst"));

    // limited-view codes
    py::class_<LvStrongInstance>(m, "LvStrongInstance")
        .def_static("create", &LvStrongInstance::create, py::arg("q"), py::arg("k"), py::arg("n"))
        .def_readonly("wt2", &LvStrongInstance::wt2)
        .def("k", &LvStrongInstance::k)
        .def("n", &LvStrongInstance::n)
        .def("read_budget", &LvStrongInstance::read_budget)
        .def("rho", &LvStrongInstance::rho)
        .def("delta", &LvStrongInstance::delta);
    m.def("lv_strong_encode",
          [](const std::vector<uint64_t>& msg, uint64_t i, const std::vector<uint64_t>& j,
             const LvStrongInstance& inst) {
              uint64_t q = inst.wt2.q;
              return lv_strong_encode(to_vec(msg, q), FieldElem(i, q), to_vec(j, q), inst).values;
          },
          py::arg("msg"), py::arg("i"), py::arg("j"), py::arg("inst"));
    m.def("lv_strong_decode",
          [](const std::vector<uint64_t>& word, const LvStrongInstance& inst) {
              return decode_result(lv_strong_decode(to_vec(word, inst.wt2.q), inst));
          },
          py::arg("word"), py::arg("inst"));

    py::class_<LvWeakInstance>(m, "LvWeakInstance")
        .def_static("create",
                    [](uint64_t q, size_t k, const std::string& psi_num_den) {
                        auto slash = psi_num_den.find('/');
                        Rational psi = slash == std::string::npos
                                           ? Rational(std::stoll(psi_num_den))
                                           : Rational(std::stoll(psi_num_den.substr(0, slash)),
                                                      std::stoll(psi_num_den.substr(slash + 1)));
                        return LvWeakInstance::create(q, k, psi);
                    },
                    py::arg("q"), py::arg("k"), py::arg("psi") = "3/2")
        .def_readonly("q", &LvWeakInstance::q)
        .def_readonly("k", &LvWeakInstance::k)
        .def_readonly("gmat", &LvWeakInstance::gmat)
        .def("delta_bound", &LvWeakInstance::delta_bound)
        .def("message_count", &LvWeakInstance::message_count);
    m.def("lv_weak_encode",
          [](const std::vector<uint64_t>& msg, const LvWeakInstance& inst) {
              return lv_weak_encode(to_vec(msg, inst.q), inst).values;
          },
          py::arg("msg"), py::arg("inst"));
    m.def("lv_weak_decode",
          [](const std::vector<uint64_t>& word, const LvWeakInstance& inst) {
              return decode_result(lv_weak_decode(to_vec(word, inst.q), inst));
          },
          py::arg("word"), py::arg("inst"));

    // ramp sharing
    py::class_<RampScheme>(m, "RampScheme")
        .def_static("create", &RampScheme::create, py::arg("q"), py::arg("t"), py::arg("r"),
                    py::arg("N"))
        .def_readonly("q", &RampScheme::q)
        .def_readonly("t", &RampScheme::t)
        .def_readonly("r", &RampScheme::r)
        .def_readonly("N", &RampScheme::N)
        .def("secret_len", &RampScheme::secret_len);
    m.def("ramp_share",
          [](const std::vector<uint64_t>& secret, const std::vector<uint64_t>& rand,
             const RampScheme& s) {
              return share_slots(ramp_share(to_vec(secret, s.q), to_vec(rand, s.q), s));
          },
          py::arg("secret"), py::arg("rand"), py::arg("scheme"));
    m.def("ramp_recover",
          [](const std::vector<std::optional<uint64_t>>& shares, std::vector<size_t> subset,
             const RampScheme& s) {
              return decode_result(ramp_recover(to_shares(shares, s.q), std::move(subset), s));
          },
          py::arg("shares"), py::arg("subset"), py::arg("scheme"));

    py::class_<RobustRampScheme>(m, "RobustRampScheme")
        .def_static("create", &RobustRampScheme::create, py::arg("q"), py::arg("t"), py::arg("r"),
                    py::arg("N"), py::arg("k"))
        .def_readonly("ramp", &RobustRampScheme::ramp)
        .def_readonly("code", &RobustRampScheme::code)
        .def("corrupt_budget", &RobustRampScheme::corrupt_budget);
    m.def("rr_share",
          [](const std::vector<uint64_t>& secret, uint64_t i, const std::vector<uint64_t>& j,
             const std::vector<uint64_t>& rand, const RobustRampScheme& s) {
              uint64_t q = s.ramp.q;
              return share_slots(rr_share(to_vec(secret, q), FieldElem(i, q), to_vec(j, q),
                                          to_vec(rand, q), s));
          },
          py::arg("secret"), py::arg("i"), py::arg("j"), py::arg("rand"), py::arg("scheme"));
    m.def("rr_recover",
          [](const std::vector<std::optional<uint64_t>>& shares, std::vector<size_t> subset,
             const RobustRampScheme& s) {
              return decode_result(rr_recover(to_shares(shares, s.ramp.q), std::move(subset), s));
          },
          py::arg("shares"), py::arg("subset"), py::arg("scheme"));

    // certification oracles
    m.def("empirical_delta_strong",
          [](const LvStrongInstance& inst, uint64_t cap) {
              return report_dict(empirical_delta_strong(inst, {cap}));
          },
          py::arg("inst"), py::arg("cap") = 100'000'000ULL);
    m.def("empirical_delta_weak",
          [](const LvWeakInstance& inst, size_t read_size, uint64_t cap) {
              return report_dict(empirical_delta_weak(inst, read_size, {cap}));
          },
          py::arg("inst"), py::arg("read_size"), py::arg("cap") = 100'000'000ULL);
    m.def("wt2_secrecy_check",
          [](const Wt2Instance& inst, uint64_t cap) {
              return wt2_secrecy_check(inst, EnumerationLimits{cap});
          },
          py::arg("inst"), py::arg("cap") = 100'000'000ULL);
    m.def("rr_robustness_attack",
          [](const RobustRampScheme& s, size_t corrupt_count, uint64_t cap) {
              return report_dict(rr_robustness_attack(s, corrupt_count, {cap}));
          },
          py::arg("scheme"), py::arg("corrupt_count"), py::arg("cap") = 100'000'000ULL);

    // closed-form bounds
    auto b = m.def_submodule("bounds");
    b.def("amd_weak_min_delta", &bounds::amd_weak_min_delta);
    b.def("amd_strong_min_delta", &bounds::amd_strong_min_delta);
    b.def("strong_rho_bound_check", [](size_t n, size_t k, double rho, double delta, uint64_t q) {
        auto r = bounds::strong_rho_bound_check(n, k, rho, delta, q);
        return py::make_tuple(r.lhs, r.rhs, r.satisfied);
    });
    b.def("weak_rho_bound_check", [](size_t n, size_t k, double rho, double delta, uint64_t q) {
        auto rows = bounds::weak_rho_bound_check(n, k, rho, delta, q);
        py::list out;
        for (const auto& r : rows) out.append(py::make_tuple(r.name, r.lhs, r.rhs, r.satisfied));
        return out;
    });
    b.def("wt2_rate_bound", [](long long num, long long den) {
        return bounds::wt2_rate_bound(Rational(num, den)).str();
    });
    b.def("tag_overhead_bits", &bounds::tag_overhead_bits);
}
