#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "perfect/core.hpp"
#include "perfect/format.hpp"
#include "perfect/generator.hpp"
#include "perfect/oracle.hpp"

namespace py = pybind11;
using namespace perfect;

namespace {

int ordering_to_int(std::strong_ordering o) {
    if (o == std::strong_ordering::greater) return 1;
    if (o == std::strong_ordering::less) return -1;
    return 0;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Lexicographically greatest (n,k)-perfect necklaces via Lyndon pairs";

    py::register_exception<CapacityError>(m, "CapacityError");
    py::register_exception<NoPredecessorError>(m, "NoPredecessorError");

    py::enum_<Mode>(m, "Mode")
        .value("K_DIVIDES_N", Mode::KDividesN)
        .value("N_DIVIDES_K", Mode::NDividesK);

    py::class_<Params>(m, "Params")
        .def(py::init<int, int, int>(), py::arg("s"), py::arg("n"), py::arg("k"))
        .def_readonly("s", &Params::s)
        .def_readonly("n", &Params::n)
        .def_readonly("k", &Params::k)
        .def_readonly("mode", &Params::mode)
        .def("__repr__", [](const Params& p) {
            return "Params(s=" + std::to_string(p.s) + ", n=" + std::to_string(p.n) +
                   ", k=" + std::to_string(p.k) + ")";
        });

    py::class_<PairNK>(m, "Pair")
        .def(py::init([](Word word, int residue) {
                 return PairNK{std::move(word), residue};
             }),
             py::arg("word"), py::arg("residue") = 0)
        .def_readonly("word", &PairNK::word)
        .def_readonly("residue", &PairNK::residue)
        .def("__eq__", [](const PairNK& a, const PairNK& b) { return a == b; })
        .def("__repr__", [](const PairNK& a) {
            return "Pair(" + render_word(a.word, 11) + ", " +
                   std::to_string(a.residue) + ")";
        });

    m.def("cmp_succ",
          [](const PairNK& a, const PairNK& b, const Params& p) {
              return ordering_to_int(cmp_succ(a, b, p));
          },
          py::arg("a"), py::arg("b"), py::arg("params"),
          "1 if a is the greater pair, -1 if smaller, 0 if equal.");
    m.def("rotate_right", &rotate_right);
    m.def("rotate_left", &rotate_left);
    m.def("rotation_class", &rotation_class);
    m.def("is_maximal", &is_maximal);
    m.def("reduce", [](const PairNK& a, const Params& p) { return reduce(a, p).word; });
    m.def("expand", [](const PairNK& a, const Params& p) { return expand(a, p).word; });
    m.def("theta", &theta);
    m.def("theta_preimage", &theta_preimage);

    m.def("necklace_length", &necklace_length);
    m.def("maximal_list", &collect_maximal);
    m.def("lyndon_list", [](const Params& p) {
        std::vector<Word> out;
        for (const LyndonPair& lp : collect_lyndon(p)) out.push_back(lp.word);
        return out;
    });
    m.def("build_necklace", &build_necklace, py::arg("params"),
          py::arg("guard") = kDefaultEmissionGuard);

    m.def("check_perfect", [](const Word& x, const Params& p) {
        const PerfectnessReport report = check_perfect(x, p);
        py::dict d;
        d["perfect"] = report.is_perfect;
        d["input_length"] = report.input_length;
        py::list violations;
        for (const Violation& v : report.violations) {
            py::dict jv;
            jv["reason"] = v.kind == ViolationKind::WrongLength ? "WRONG_LENGTH"
                           : v.kind == ViolationKind::WrongCount
                               ? "WRONG_COUNT"
                               : "RESIDUE_COLLISION";
            jv["word"] = v.word;
            jv["positions"] = v.positions;
            jv["found"] = v.found;
            jv["expected"] = v.expected;
            violations.append(jv);
        }
        d["violations"] = violations;
        py::dict occ;
        for (const auto& [word, positions] : report.occurrences)
            occ[py::tuple(py::cast(word))] = positions;
        d["occurrences"] = occ;
        return d;
    });
    m.def("brute_force_greatest", &brute_force_greatest, py::arg("params"),
          py::arg("budget") = 24);
    m.def("fkm_reference", &fkm_reference, py::arg("s"), py::arg("n"),
          py::arg("guard") = std::uint64_t{1} << 20);
}
