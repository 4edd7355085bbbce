#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "factorlab/axb.hpp"
#include "factorlab/catalog.hpp"
#include "factorlab/dsl.hpp"
#include "factorlab/localize.hpp"
#include "factorlab/split.hpp"

using namespace factorlab;

namespace {

constexpr const char* kSchema = "factorlab.report/1";

// 0 clean, 1 usage, 2 evaluation error, 3 theorem violation
constexpr int kExitUsage = 1, kExitEval = 2, kExitViolation = 3;

struct Output {
    std::string path;  // empty = stdout
    std::ostringstream buf;

    template <typename T>
    Output& operator<<(const T& v) {
        buf << v;
        return *this;
    }
    void flush() {
        if (path.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(path, std::ios::binary);
            if (!f) throw Error("io", "cannot write " + path);
            f << buf.str();
        }
    }
};

nlohmann::json stamped(nlohmann::json j) {
    j["schema"] = kSchema;
    return j;
}

std::string cache_path(const std::string& p) {
    if (p.empty() || p.front() == '/') return p;
    const char* dir = std::getenv("FACTORLAB_CACHE_DIR");
    if (!dir || !*dir) return p;
    std::string d = dir;
    if (d.back() != '/') d += '/';
    return d + p;
}

struct Instance {
    RingPtr ring;
    ModulePtr mod;
    SatSet S;
    Instance(const std::string& r, const std::string& m, const std::string& s)
        : ring(eval_ring(parse_expr(r))),
          mod(eval_module(parse_expr(m), ring)),
          S(eval_satset(parse_expr(s), ring)) {}
};

int cmd_parse(const std::string& text, bool json, Output& out) {
    auto ast = parse_expr(text);
    if (json)
        out << stamped({{"ast", ast_json(ast)}, {"text", render(ast)}}).dump()
            << "\n";
    else
        out << render(ast) << "\n"
            << "category: " << ast_json(ast)["category"].get<std::string>()
            << "\n";
    return 0;
}

int cmd_describe(const std::string& text, bool json, Output& out) {
    auto ast = parse_expr(text);
    nlohmann::json j;
    if (category(ast) == ExprCat::ring) {
        auto R = eval_ring(ast);
        auto reg = Module::regular(R);
        j = {{"kind", "ring"},
             {"construction", R->to_json()},
             {"size", R->size()},
             {"units", R->units()},
             {"zero_divisors", reg->zero_divisors(reg->carrier())},
             {"is_field", R->is_domain()}};
    } else if (category(ast) == ExprCat::bound) {
        auto R = eval_ring(ast.args[1]);
        if (category(ast.args[0]) == ExprCat::satset) {
            auto S = eval_satset(ast.args[0], R);
            j = {{"kind", "satset"},
                 {"ring", R->to_json()},
                 {"elements", S.elements()},
                 {"count", S.count()},
                 {"is_full", S.is_full()},
                 {"has_nonunit", S.has_nonunit()}};
        } else {
            auto M = eval_module(ast.args[0], R);
            j = {{"kind", "module"},
                 {"construction", M->to_json()},
                 {"ring", R->to_json()},
                 {"size", M->size()},
                 {"annihilator", M->ann_of_subset(M->carrier())},
                 {"zero_divisors", M->zero_divisors(M->carrier())}};
        }
    } else {
        throw Error("type", "describe takes a ring or a bound set/module");
    }
    if (json) {
        out << stamped(j).dump() << "\n";
    } else {
        for (auto& [k, v] : j.items()) out << k << ": " << v.dump() << "\n";
    }
    return 0;
}

void print_class_table(const ClassReport& rep, Output& out) {
    auto row = [&](const char* name, bool v) {
        out << "  " << name << std::string(22 - std::string(name).size(), ' ')
            << (v ? "yes" : "no") << "\n";
    };
    row("presimplifiable", rep.presimplifiable);
    row("atomic", rep.is_atomic());
    row("BFM", rep.bfm);
    row("FFM", rep.ffm);
    row("HFM", rep.hfm);
    row("UFM", rep.ufm);
    if (!rep.bfm && !rep.bfm_cycle.empty()) {
        out << "  cycle:";
        for (Elem e : rep.bfm_cycle) out << " " << e;
        out << "\n";
    }
}

int cmd_classify(const std::string& rtxt, const std::string& mtxt,
                 const std::string& stxt, int deg, bool json, Output& out) {
    auto rast = parse_expr(rtxt);
    if (rast.head == "axb") {
        // fragment route: the dedicated degree-bounded checkers
        auto A = eval_ring(rast.args[0]);
        auto B = eval_ring(rast.args[1]);
        int d = deg > 0 ? deg : (int)rast.nums[0];
        if (parse_expr(mtxt).head != "regular" || parse_expr(stxt).head != "satx")
            throw Error("type", "axb classification takes regular and satx");
        auto splits = check_ex_splits(A, B, d);
        auto main = check_ex_main(A, B, d);
        nlohmann::json j = {{"instance", main.instance},
                            {"splits", splits.to_json()},
                            {"main", main.to_json()}};
        if (json) {
            out << stamped(j).dump() << "\n";
        } else {
            out << "axb fragment, degree <= " << d << "\n";
            out << "  splits                "
                << (splits.status == CheckStatus::holds ? "yes" : "NO") << "\n";
            out << "  HF within degree      "
                << (main.conclusion("half_factorial_within_degree") ? "yes"
                                                                    : "NO")
                << "\n";
        }
        int bad = (splits.status == CheckStatus::violation ||
                   main.status == CheckStatus::violation);
        return bad ? kExitViolation : 0;
    }
    Instance inst(rtxt, mtxt, stxt);
    auto rep = classify(*inst.mod, inst.S);
    if (json) {
        out << stamped({{"instance", instance_json(*inst.mod, inst.S)},
                        {"report", rep.to_json()}})
                   .dump()
            << "\n";
    } else {
        out << "classify " << render(parse_expr(mtxt)) << " @ "
            << render(parse_expr(rtxt)) << ", S = "
            << render(parse_expr(stxt)) << "\n";
        print_class_table(rep, out);
    }
    return 0;
}

int cmd_factor(const std::string& rtxt, const std::string& mtxt,
               const std::string& stxt, Elem m, const std::string& mode,
               int max_len, bool json, Output& out) {
    Instance inst(rtxt, mtxt, stxt);
    if (m < 0 || m >= inst.mod->size())
        throw Error("eval", "element out of range");
    EnumMode em = mode == "atomic"    ? EnumMode::Atomic()
                  : mode == "compact" ? EnumMode::Compact()
                                      : EnumMode::All();
    auto res = enumerate_factorizations(*inst.mod, inst.S, m, em, max_len);
    const char* status = res.status == EnumStatus::complete    ? "complete"
                         : res.status == EnumStatus::unbounded ? "unbounded"
                                                               : "truncated";
    if (json) {
        for (const auto& f : res.items)
            out << stamped({{"record", "factorization"},
                            {"factorization", f.to_json()}})
                       .dump()
                << "\n";
        out << stamped({{"record", "summary"},
                        {"instance", instance_json(*inst.mod, inst.S)},
                        {"element", m},
                        {"mode", mode},
                        {"status", status},
                        {"count", res.items.size()},
                        {"cycle", res.cycle}})
                   .dump()
            << "\n";
    } else {
        out << "factorizations of " << inst.mod->element_name(m) << " ("
            << mode << ", " << status << "): " << res.items.size() << "\n";
        for (const auto& f : res.items) {
            out << "  " << inst.mod->element_name(f.target) << " =";
            for (Elem s : f.scalars)
                out << " " << inst.ring->element_name(s) << " .";
            out << " " << inst.mod->element_name(f.tail) << "\n";
        }
    }
    return 0;
}

int cmd_assoc(const std::string& rtxt, const std::string& mtxt,
              const std::string& stxt, Elem m, Elem n, bool json, Output& out) {
    Instance inst(rtxt, mtxt, stxt);
    if (m < 0 || m >= inst.mod->size() || n < 0 || n >= inst.mod->size())
        throw Error("eval", "element out of range");
    nlohmann::json j = {{"instance", instance_json(*inst.mod, inst.S)},
                        {"m", m},
                        {"n", n}};
    for (AssocKind k : kAssocKinds)
        j[to_string(k)] = associates(*inst.mod, inst.S, m, n, k);
    for (PrimKind k : kPrimKinds)
        j["m_" + std::string(to_string(k))] =
            is_primitive(*inst.mod, inst.S, m, k);
    if (json) {
        out << stamped(j).dump() << "\n";
    } else {
        for (AssocKind k : kAssocKinds)
            out << to_string(k) << ": "
                << (j[to_string(k)].get<bool>() ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_localize(const std::string& rtxt, const std::string& stxt,
                 const std::string& mtxt, const std::string& sptxt, bool json,
                 Output& out) {
    auto R = eval_ring(parse_expr(rtxt));
    auto S = eval_satset(parse_expr(stxt), R);
    auto RS = LocalizedRing::build(R, S);
    auto M = eval_module(parse_expr(mtxt), R);
    auto MS = LocalizedModule::build(M, RS);
    nlohmann::json j = {{"ring", RS.to_json()},
                        {"module", MS.to_json()},
                        {"ring_size", RS.ring()->size()},
                        {"module_size", MS.module()->size()},
                        {"ring_map_injective", RS.map_injective()},
                        {"module_map_injective", MS.map_injective()}};
    if (!sptxt.empty()) {
        auto Sp = eval_satset(parse_expr(sptxt), R);
        auto T = induce_T(RS, Sp);
        j["T"] = T.to_json();
        j["T_count"] = T.count();
    }
    if (json) {
        out << stamped(j).dump() << "\n";
    } else {
        out << "R_S size: " << RS.ring()->size()
            << " (map injective: " << (RS.map_injective() ? "yes" : "no")
            << ")\n"
            << "M_S size: " << MS.module()->size()
            << " (map injective: " << (MS.map_injective() ? "yes" : "no")
            << ")\n";
        if (j.contains("T_count")) out << "|T| = " << j["T_count"] << "\n";
    }
    return 0;
}

int cmd_split_check(const std::string& rtxt, const std::string& mtxt,
                    const std::string& stxt, bool json, Output& out) {
    Instance inst(rtxt, mtxt, stxt);
    auto verdict = analyze_subset(*inst.mod, inst.S, inst.mod->carrier());
    auto semi = check_prop_semi_elem(*inst.mod, inst.S);
    if (json) {
        out << stamped({{"instance", instance_json(*inst.mod, inst.S)},
                        {"verdict", verdict.to_json()},
                        {"semi_elem", semi.to_json()}})
                   .dump()
            << "\n";
    } else {
        auto row = [&](const char* k, bool v) {
            out << "  " << k << std::string(22 - std::string(k).size(), ' ')
                << (v ? "yes" : "no") << "\n";
        };
        row("compactly atomic", verdict.compactly_atomic);
        row("semi-factorable", verdict.semi_factorable);
        row("factorable", verdict.factorable);
        row("splits", verdict.splits);
    }
    return semi.status == CheckStatus::violation ? kExitViolation : 0;
}

int cmd_verify(int max_ring, int max_module, int workers, long long seed,
               const std::vector<std::string>& theorems, bool json,
               Output& out) {
    auto res = run_verify({max_ring, max_module}, theorems, workers);
    if (json) {
        for (const auto& rep : res.reports)
            out << stamped(rep.to_json()).dump() << "\n";
    }
    auto summary = stamped(res.summary_json());
    summary["seed"] = seed;
    summary["config"] = {{"max_ring", max_ring},
                         {"max_module", max_module},
                         {"theorems", theorems}};
    if (json) {
        out << summary.dump() << "\n";
    } else {
        out << "instances: " << res.instances << "  pairs: " << res.pairs
            << "  reports: " << res.reports.size() << "\n";
        for (const auto& [name, hvv] : res.per_theorem)
            out << "  " << name << std::string(18 - std::min<std::size_t>(
                                                        18, name.size()),
                                               ' ')
                << " holds " << hvv[0] << "  vacuous " << hvv[1]
                << "  violations " << hvv[2] << "\n";
        for (const auto& w : res.coverage_warnings)
            out << "  warning: " << w << "\n";
        out << "violations: " << res.violations() << "\n";
    }
    return res.violations() ? kExitViolation : 0;
}

int cmd_hunt(const std::string& spec, int max_ring, int max_module,
             long stop_after, const std::string& checkpoint, bool json,
             Output& out) {
    auto res = hunt({spec, max_ring, max_module, stop_after},
                    cache_path(checkpoint));
    if (json) {
        for (const auto& w : res.witnesses)
            out << stamped({{"record", "witness"}, {"witness", w}}).dump()
                << "\n";
        auto j = stamped(res.to_json());
        j["record"] = "summary";
        j["predicate"] = spec;
        out << j.dump() << "\n";
    } else {
        out << "scanned " << res.scanned << " instances, "
            << res.witnesses.size() << " witnesses"
            << (res.exhausted ? "" : " (stopped early)") << "\n";
        for (const auto& w : res.witnesses)
            out << "  " << w["ring"].dump() << " " << w["module"].dump()
                << " S=" << w["S"].dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact factorization workbench for finite modules"};
    app.require_subcommand(1);

    bool json = false;
    std::string out_path;
    app.add_flag("--json", json, "machine-readable NDJSON output");
    app.add_option("--out", out_path, "write output to a file");

    std::string expr, rtxt, mtxt = "regular", stxt, sptxt, mode = "atomic",
                      spec, checkpoint;
    Elem elem_m = 0, elem_n = 0;
    int max_ring = 8, max_module = 8, workers = 1, deg = 0, max_len = 8;
    long long seed = 0;
    long stop_after = -1;
    std::vector<std::string> theorems;

    auto* parse_cmd = app.add_subcommand("parse", "parse a DSL expression")->fallthrough();
    parse_cmd->add_option("expr", expr)->required();

    auto* describe = app.add_subcommand("describe", "evaluate and describe")->fallthrough();
    describe->add_option("expr", expr)->required();

    auto* classify_cmd =
        app.add_subcommand("classify", "classify (ring, module, set)")->fallthrough();
    classify_cmd->add_option("ring", rtxt)->required();
    classify_cmd->add_option("module", mtxt)->required();
    classify_cmd->add_option("set", stxt)->required();
    classify_cmd->add_option("--deg", deg, "degree bound for fragments");

    auto* factor = app.add_subcommand("factor", "enumerate factorizations")->fallthrough();
    factor->add_option("ring", rtxt)->required();
    factor->add_option("module", mtxt)->required();
    factor->add_option("set", stxt)->required();
    factor->add_option("element", elem_m)->required();
    factor->add_option("--mode", mode)
        ->check(CLI::IsMember({"all", "atomic", "compact"}));
    factor->add_option("--max-len", max_len);

    auto* assoc = app.add_subcommand("assoc", "associate relations")->fallthrough();
    assoc->add_option("ring", rtxt)->required();
    assoc->add_option("module", mtxt)->required();
    assoc->add_option("set", stxt)->required();
    assoc->add_option("m", elem_m)->required();
    assoc->add_option("n", elem_n)->required();

    auto* localize = app.add_subcommand("localize", "build R_S and M_S")->fallthrough();
    localize->add_option("ring", rtxt)->required();
    localize->add_option("set", stxt)->required();
    localize->add_option("--module", mtxt);
    localize->add_option("--sprime", sptxt, "induce T = S^-1 S'");

    auto* split =
        app.add_subcommand("split-check", "splitting/factorability verdict")->fallthrough();
    split->add_option("ring", rtxt)->required();
    split->add_option("module", mtxt)->required();
    split->add_option("set", stxt)->required();

    auto* verify = app.add_subcommand("verify", "run the theorem catalog")->fallthrough();
    verify->add_option("--max-ring", max_ring);
    verify->add_option("--max-module", max_module);
    verify->add_option("--workers", workers);
    verify->add_option("--seed", seed);
    verify->add_option("--theorems", theorems);

    auto* hunt_cmd = app.add_subcommand("hunt", "predicate witness search")->fallthrough();
    hunt_cmd->add_option("--spec", spec)->required();
    hunt_cmd->add_option("--max-ring", max_ring);
    hunt_cmd->add_option("--max-module", max_module);
    hunt_cmd->add_option("--stop-after", stop_after);
    hunt_cmd->add_option("--checkpoint", checkpoint);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    Output out;
    out.path = out_path;
    int code = 0;
    try {
        if (*parse_cmd) code = cmd_parse(expr, json, out);
        else if (*describe) code = cmd_describe(expr, json, out);
        else if (*classify_cmd)
            code = cmd_classify(rtxt, mtxt, stxt, deg, json, out);
        else if (*factor)
            code = cmd_factor(rtxt, mtxt, stxt, elem_m, mode, max_len, json, out);
        else if (*assoc)
            code = cmd_assoc(rtxt, mtxt, stxt, elem_m, elem_n, json, out);
        else if (*localize)
            code = cmd_localize(rtxt, stxt, mtxt, sptxt, json, out);
        else if (*split) code = cmd_split_check(rtxt, mtxt, stxt, json, out);
        else if (*verify)
            code = cmd_verify(max_ring, max_module, workers, seed, theorems,
                              json, out);
        else if (*hunt_cmd)
            code = cmd_hunt(spec, max_ring, max_module, stop_after, checkpoint,
                            json, out);
        out.flush();
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return kExitEval;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEval;
    }
    return code;
}
