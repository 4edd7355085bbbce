#pragma once

#include <string>
#include <vector>

#include "factorlab/module.hpp"
#include "factorlab/satset.hpp"

namespace factorlab {

/// Expression AST for the workbench surface language.
///
/// Ring expressions:   zmod(n), gf(q), gfquot(p, [c0,...]), product(r, r),
///                     axb(r, r, deg=d), laurent(r, deg=d), localize(r, set)
/// Module expressions: regular, zmod_over(m), quotient(mod, [elems]),
///                     product(mod, mod)
/// Set expressions:    units, all, sat(gens...), members(elems...), satx
/// Binding:            set-or-module @ ring
struct ExprAst {
    std::string head;
    std::vector<long long> nums;              // plain numeric arguments
    std::vector<std::vector<long long>> lists;  // bracketed lists
    std::vector<ExprAst> args;                 // sub-expressions

    bool operator==(const ExprAst& o) const {
        return head == o.head && nums == o.nums && lists == o.lists &&
               args == o.args;
    }
};

enum class ExprCat { ring, module, satset, bound };
ExprCat category(const ExprAst& ast);

/// Whitespace-insensitive LL parse. Throws Error("syntax", ...) with the
/// byte offset and the expected tokens, or Error("type", ...) when an
/// argument has the wrong category.
ExprAst parse_expr(const std::string& text);

/// Canonical text; parse_expr(render(ast)) == ast.
std::string render(const ExprAst& ast);

nlohmann::json ast_json(const ExprAst& ast);

/// Table-backed evaluation. axb/laurent nodes are fragments, not table
/// rings, and raise Error("type", ...) here; the CLI routes them to the
/// dedicated checkers.
RingPtr eval_ring(const ExprAst& ast);
ModulePtr eval_module(const ExprAst& ast, const RingPtr& ring);
SatSet eval_satset(const ExprAst& ast, const RingPtr& ring);

}  // namespace factorlab
