#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "factorlab/axb.hpp"
#include "factorlab/catalog.hpp"
#include "factorlab/dsl.hpp"
#include "factorlab/localize.hpp"
#include "factorlab/split.hpp"

namespace py = pybind11;
using namespace factorlab;

namespace {

// All results cross the boundary as JSON text; the Python package wraps
// them in json.loads so the schema matches the CLI exactly.
std::string dump(const nlohmann::json& j) { return j.dump(); }

struct Evaluated {
    RingPtr ring;
    ModulePtr mod;
    SatSet S;
};

Evaluated eval_triple(const std::string& r, const std::string& m,
                      const std::string& s) {
    auto ring = eval_ring(parse_expr(r));
    return {ring, eval_module(parse_expr(m), ring),
            eval_satset(parse_expr(s), ring)};
}

}  // namespace

PYBIND11_MODULE(_factorlab, m) {
    m.doc() = "exact factorization workbench core";

    py::register_exception<Error>(m, "FactorlabError");

    m.def("parse", [](const std::string& text) {
        return render(parse_expr(text));
    });
    m.def("ast", [](const std::string& text) {
        return dump(ast_json(parse_expr(text)));
    });

    m.def("describe_ring", [](const std::string& r) {
        auto R = eval_ring(parse_expr(r));
        auto reg = Module::regular(R);
        return dump({{"construction", R->to_json()},
                     {"size", R->size()},
                     {"units", R->units()},
                     {"zero_divisors", reg->zero_divisors(reg->carrier())},
                     {"is_field", R->is_domain()}});
    });

    m.def(
        "classify",
        [](const std::string& r, const std::string& mm, const std::string& s) {
            auto e = eval_triple(r, mm, s);
            return dump({{"instance", instance_json(*e.mod, e.S)},
                         {"report", classify(*e.mod, e.S).to_json()}});
        },
        py::arg("ring"), py::arg("module") = "regular", py::arg("satset"));

    m.def(
        "factorizations",
        [](const std::string& r, const std::string& mm, const std::string& s,
           Elem target, const std::string& mode, int max_len) {
            auto e = eval_triple(r, mm, s);
            EnumMode em = mode == "atomic"    ? EnumMode::Atomic()
                          : mode == "compact" ? EnumMode::Compact()
                                              : EnumMode::All();
            auto res = enumerate_factorizations(*e.mod, e.S, target, em, max_len);
            nlohmann::json items = nlohmann::json::array();
            for (const auto& f : res.items) items.push_back(f.to_json());
            return dump({{"status", res.status == EnumStatus::complete
                                        ? "complete"
                                        : res.status == EnumStatus::unbounded
                                              ? "unbounded"
                                              : "truncated"},
                         {"items", items},
                         {"cycle", res.cycle}});
        },
        py::arg("ring"), py::arg("module") = "regular", py::arg("satset"),
        py::arg("target"), py::arg("mode") = "atomic", py::arg("max_len") = 8);

    m.def("split_check", [](const std::string& r, const std::string& mm,
                            const std::string& s) {
        auto e = eval_triple(r, mm, s);
        return dump(analyze_subset(*e.mod, e.S, e.mod->carrier()).to_json());
    });

    m.def("localize", [](const std::string& r, const std::string& s) {
        auto R = eval_ring(parse_expr(r));
        auto RS = LocalizedRing::build(R, eval_satset(parse_expr(s), R));
        return dump({{"size", RS.ring()->size()},
                     {"map_injective", RS.map_injective()},
                     {"ring", RS.to_json()}});
    });

    m.def(
        "verify",
        [](int max_ring, int max_module, std::vector<std::string> theorems,
           int workers) {
            return dump(
                run_verify({max_ring, max_module}, std::move(theorems), workers)
                    .summary_json());
        },
        py::arg("max_ring") = 6, py::arg("max_module") = 6,
        py::arg("theorems") = std::vector<std::string>{},
        py::arg("workers") = 1);

    m.def(
        "hunt",
        [](const std::string& spec, int max_ring, int max_module,
           long stop_after, const std::string& checkpoint) {
            return dump(
                hunt({spec, max_ring, max_module, stop_after}, checkpoint)
                    .to_json());
        },
        py::arg("spec"), py::arg("max_ring") = 6, py::arg("max_module") = 6,
        py::arg("stop_after") = -1, py::arg("checkpoint") = "");

    m.def("axb_splits", [](const std::string& a, const std::string& b, int d) {
        return dump(check_ex_splits(eval_ring(parse_expr(a)),
                                    eval_ring(parse_expr(b)), d)
                        .to_json());
    });
    m.def("axb_main", [](const std::string& a, const std::string& b, int d) {
        return dump(check_ex_main(eval_ring(parse_expr(a)),
                                  eval_ring(parse_expr(b)), d)
                        .to_json());
    });
    m.def("axb_zq", [] { return dump(check_ex_splits_zq().to_json()); });
    m.def("nonbfd_witness", [](int k) {
        auto w = axb_nonbfd_witness(k);
        auto j = w.to_json();
        j["valid"] = w.validate();
        return dump(j);
    });
}
