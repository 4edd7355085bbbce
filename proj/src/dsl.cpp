#include "factorlab/dsl.hpp"

#include <cctype>
#include <map>

#include "factorlab/localize.hpp"

namespace factorlab {

namespace {

struct Token {
    enum Kind { ident, number, lparen, rparen, lbrack, rbrack, comma, at,
                equals, end } kind;
    std::string text;
    long long value = 0;
    std::size_t offset = 0;
};

const char* token_name(Token::Kind k) {
    switch (k) {
        case Token::ident: return "identifier";
        case Token::number: return "integer";
        case Token::lparen: return "'('";
        case Token::rparen: return "')'";
        case Token::lbrack: return "'['";
        case Token::rbrack: return "']'";
        case Token::comma: return "','";
        case Token::at: return "'@'";
        case Token::equals: return "'='";
        case Token::end: return "end of input";
    }
    return "?";
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace((unsigned char)c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string word;
            while (i < text.size() &&
                   (std::isalnum((unsigned char)text[i]) || text[i] == '_'))
                word += (char)std::tolower((unsigned char)text[i++]);
            out.push_back({Token::ident, word, 0, start});
            continue;
        }
        if (std::isdigit((unsigned char)c) ||
            (c == '-' && i + 1 < text.size() &&
             std::isdigit((unsigned char)text[i + 1]))) {
            std::size_t j = i + (c == '-' ? 1 : 0);
            while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
            out.push_back({Token::number, text.substr(i, j - i),
                           std::stoll(text.substr(i, j - i)), start});
            i = j;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '(': k = Token::lparen; break;
            case ')': k = Token::rparen; break;
            case '[': k = Token::lbrack; break;
            case ']': k = Token::rbrack; break;
            case ',': k = Token::comma; break;
            case '@': k = Token::at; break;
            case '=': k = Token::equals; break;
            default:
                throw Error("syntax", "byte " + std::to_string(start) +
                                          ": unexpected character '" +
                                          std::string(1, c) + "'");
        }
        out.push_back({k, std::string(1, c), 0, start});
        ++i;
    }
    out.push_back({Token::end, "", 0, text.size()});
    return out;
}

struct Parser {
    std::vector<Token> toks;
    std::size_t pos = 0;

    const Token& peek() const { return toks[pos]; }
    Token take(Token::Kind k) {
        if (toks[pos].kind != k)
            throw Error("syntax",
                        "byte " + std::to_string(toks[pos].offset) +
                            ": expected " + token_name(k) + ", found " +
                            token_name(toks[pos].kind));
        return toks[pos++];
    }

    ExprAst expr() {
        ExprAst left = primary();
        if (peek().kind == Token::at) {
            take(Token::at);
            ExprAst right = primary();
            ExprAst bound;
            bound.head = "@";
            bound.args = {std::move(left), std::move(right)};
            check(bound, toks[pos - 1].offset);
            return bound;
        }
        return left;
    }

    ExprAst primary() {
        Token head = take(Token::ident);
        ExprAst ast;
        ast.head = head.text;
        if (peek().kind == Token::lparen) {
            take(Token::lparen);
            if (peek().kind != Token::rparen) {
                argument(ast);
                while (peek().kind == Token::comma) {
                    take(Token::comma);
                    argument(ast);
                }
            }
            take(Token::rparen);
        }
        check(ast, head.offset);
        return ast;
    }

    void argument(ExprAst& ast) {
        const Token& t = peek();
        if (t.kind == Token::number) {
            ast.nums.push_back(take(Token::number).value);
        } else if (t.kind == Token::lbrack) {
            take(Token::lbrack);
            std::vector<long long> list;
            if (peek().kind != Token::rbrack) {
                list.push_back(take(Token::number).value);
                while (peek().kind == Token::comma) {
                    take(Token::comma);
                    list.push_back(take(Token::number).value);
                }
            }
            take(Token::rbrack);
            ast.lists.push_back(std::move(list));
        } else if (t.kind == Token::ident && toks[pos + 1].kind == Token::equals) {
            // named numeric argument, e.g. deg=4
            Token name = take(Token::ident);
            if (name.text != "deg")
                throw Error("syntax", "byte " + std::to_string(name.offset) +
                                          ": unknown named argument '" +
                                          name.text + "'");
            take(Token::equals);
            ast.nums.push_back(take(Token::number).value);
        } else if (t.kind == Token::ident) {
            ast.args.push_back(expr());
        } else {
            throw Error("syntax", "byte " + std::to_string(t.offset) +
                                      ": expected integer, '[', or identifier");
        }
    }

    /// Arity and category checks, with the node's byte offset on failure.
    void check(const ExprAst& a, std::size_t off) {
        auto fail = [&](const std::string& what, const char* code = "syntax") {
            throw Error(code, "byte " + std::to_string(off) + ": " + a.head +
                                  " " + what);
        };
        auto shape = [&](std::size_t nums, std::size_t lists,
                         std::size_t args) {
            if (a.nums.size() != nums || a.lists.size() != lists ||
                a.args.size() != args)
                fail("has the wrong arguments");
        };
        auto child = [&](std::size_t i, ExprCat want, const char* what) {
            if (category(a.args[i]) != want) fail(what, "type");
        };
        if (a.head == "zmod" || a.head == "gf" || a.head == "zmod_over") {
            shape(1, 0, 0);
        } else if (a.head == "gfquot") {
            shape(1, 1, 0);
        } else if (a.head == "product") {
            shape(0, 0, 2);
            if (category(a.args[0]) != category(a.args[1]) ||
                category(a.args[0]) == ExprCat::satset ||
                category(a.args[0]) == ExprCat::bound)
                fail("needs two ring or two module factors", "type");
        } else if (a.head == "axb") {
            shape(1, 0, 2);
            child(0, ExprCat::ring, "needs ring arguments");
            child(1, ExprCat::ring, "needs ring arguments");
        } else if (a.head == "laurent") {
            shape(1, 0, 1);
            child(0, ExprCat::ring, "needs a ring argument");
        } else if (a.head == "localize") {
            shape(0, 0, 2);
            child(0, ExprCat::ring, "needs a ring first");
            child(1, ExprCat::satset, "needs a set second");
        } else if (a.head == "regular" || a.head == "units" || a.head == "all" ||
                   a.head == "satx") {
            shape(0, 0, 0);
        } else if (a.head == "quotient") {
            shape(0, 1, 1);
            child(0, ExprCat::module, "needs a module argument");
        } else if (a.head == "sat" || a.head == "members") {
            if (!a.lists.empty() || !a.args.empty())
                fail("takes plain integers");
        } else if (a.head == "@") {
            ExprCat l = category(a.args[0]);
            if (category(a.args[1]) != ExprCat::ring)
                fail("must bind to a ring", "type");
            if (l != ExprCat::satset && l != ExprCat::module)
                fail("binds a set or module to a ring", "type");
        } else {
            fail("is not a known expression head");
        }
    }
};

}  // namespace

ExprCat category(const ExprAst& a) {
    if (a.head == "zmod" || a.head == "gf" || a.head == "gfquot" ||
        a.head == "axb" || a.head == "laurent" || a.head == "localize")
        return ExprCat::ring;
    if (a.head == "regular" || a.head == "zmod_over" || a.head == "quotient")
        return ExprCat::module;
    if (a.head == "units" || a.head == "all" || a.head == "sat" ||
        a.head == "members" || a.head == "satx")
        return ExprCat::satset;
    if (a.head == "product")
        return a.args.empty() ? ExprCat::ring : category(a.args[0]);
    if (a.head == "@") return ExprCat::bound;
    throw Error("syntax", a.head + " is not a known expression head");
}

ExprAst parse_expr(const std::string& text) {
    Parser p{tokenize(text)};
    ExprAst ast = p.expr();
    if (p.peek().kind != Token::end)
        throw Error("syntax", "byte " + std::to_string(p.peek().offset) +
                                  ": trailing input");
    return ast;
}

std::string render(const ExprAst& a) {
    if (a.head == "@")
        return render(a.args[0]) + " @ " + render(a.args[1]);
    std::string out = a.head;
    std::vector<std::string> parts;
    if (a.head == "axb") {
        // canonical order: axb(A, B, deg=d)
        parts = {render(a.args[0]), render(a.args[1]),
                 "deg=" + std::to_string(a.nums[0])};
    } else if (a.head == "laurent") {
        parts = {render(a.args[0]), "deg=" + std::to_string(a.nums[0])};
    } else if (a.head == "gfquot") {
        std::string list = "[";
        for (std::size_t i = 0; i < a.lists[0].size(); ++i)
            list += (i ? "," : "") + std::to_string(a.lists[0][i]);
        parts = {std::to_string(a.nums[0]), list + "]"};
    } else if (a.head == "quotient") {
        std::string list = "[";
        for (std::size_t i = 0; i < a.lists[0].size(); ++i)
            list += (i ? "," : "") + std::to_string(a.lists[0][i]);
        parts = {render(a.args[0]), list + "]"};
    } else {
        for (long long n : a.nums) parts.push_back(std::to_string(n));
        for (const auto& e : a.args) parts.push_back(render(e));
    }
    if (parts.empty() && (a.head == "sat" || a.head == "members")) out += "()";
    if (!parts.empty()) {
        out += "(";
        for (std::size_t i = 0; i < parts.size(); ++i)
            out += (i ? ", " : "") + parts[i];
        out += ")";
    }
    return out;
}

nlohmann::json ast_json(const ExprAst& a) {
    nlohmann::json j{{"head", a.head}};
    if (!a.nums.empty()) j["nums"] = a.nums;
    if (!a.lists.empty()) j["lists"] = a.lists;
    if (!a.args.empty()) {
        j["args"] = nlohmann::json::array();
        for (const auto& e : a.args) j["args"].push_back(ast_json(e));
    }
    j["category"] = [&] {
        switch (category(a)) {
            case ExprCat::ring: return "ring";
            case ExprCat::module: return "module";
            case ExprCat::satset: return "satset";
            case ExprCat::bound: return "bound";
        }
        return "?";
    }();
    return j;
}

RingPtr eval_ring(const ExprAst& a) {
    if (category(a) != ExprCat::ring)
        throw Error("type", a.head + " is not a ring expression");
    if (a.head == "zmod") return Ring::zmod((int)a.nums[0]);
    if (a.head == "gf") {
        long long q = a.nums[0];
        if (q == 4) return Ring::gf_quotient(2, {1, 1, 1});
        if (q == 8) return Ring::gf_quotient(2, {1, 1, 0, 1});
        if (q == 9) return Ring::gf_quotient(3, {1, 0, 1});
        for (long long d = 2; d * d <= q; ++d)
            if (q % d == 0)
                throw Error("eval", "gf(" + std::to_string(q) +
                                        "): no built-in field of that order");
        return Ring::zmod((int)q);  // prime order
    }
    if (a.head == "gfquot") {
        std::vector<int> f(a.lists[0].begin(), a.lists[0].end());
        return Ring::gf_quotient((int)a.nums[0], f);
    }
    if (a.head == "product")
        return Ring::product(eval_ring(a.args[0]), eval_ring(a.args[1]));
    if (a.head == "localize") {
        auto base = eval_ring(a.args[0]);
        return LocalizedRing::build(base, eval_satset(a.args[1], base)).ring();
    }
    throw Error("type", a.head + " is a fragment, not a table-backed ring");
}

ModulePtr eval_module(const ExprAst& a, const RingPtr& ring) {
    if (category(a) != ExprCat::module)
        throw Error("type", a.head + " is not a module expression");
    if (a.head == "regular") return Module::regular(ring);
    if (a.head == "zmod_over") return Module::zmod_over((int)a.nums[0], ring);
    if (a.head == "quotient") {
        auto base = eval_module(a.args[0], ring);
        std::vector<Elem> sub(a.lists[0].begin(), a.lists[0].end());
        return Module::quotient(base, sub);
    }
    // product: direct sum of two modules over the same ring
    return Module::product(eval_module(a.args[0], ring),
                           eval_module(a.args[1], ring));
}

SatSet eval_satset(const ExprAst& a, const RingPtr& ring) {
    if (category(a) != ExprCat::satset)
        throw Error("type", a.head + " is not a set expression");
    if (a.head == "units") return SatSet::units(ring);
    if (a.head == "all") return SatSet::full(ring);
    if (a.head == "sat")
        return SatSet::saturate(ring,
                                std::vector<Elem>(a.nums.begin(), a.nums.end()));
    if (a.head == "members")
        return SatSet::from_members(
            ring, std::vector<Elem>(a.nums.begin(), a.nums.end()));
    throw Error("type", "satx only applies to axb fragments");
}

}  // namespace factorlab
