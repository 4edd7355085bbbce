#include "factorlab/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <set>
#include <thread>

namespace factorlab {

namespace {

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

void stamp_id(CheckReport& rep) {
    rep.instance["id"] = fnv1a_hex(rep.instance.dump());
}

constexpr Property kProperties[] = {
    Property::presimplifiable,      Property::atomic,
    Property::bounded,              Property::half_factorial,
    Property::finite_factorization, Property::unique_factorization};

}  // namespace

std::vector<RingPtr> catalog_rings(int max_ring) {
    std::vector<RingPtr> out;
    for (int n = 2; n <= max_ring; ++n) out.push_back(Ring::zmod(n));
    if (max_ring >= 4) out.push_back(Ring::gf_quotient(2, {1, 1, 1}));
    if (max_ring >= 8) out.push_back(Ring::gf_quotient(2, {1, 1, 0, 1}));
    if (max_ring >= 9) out.push_back(Ring::gf_quotient(3, {1, 0, 1}));
    for (int a = 2; a <= max_ring; ++a)
        for (int b = a; a * b <= max_ring; ++b)
            out.push_back(Ring::product(Ring::zmod(a), Ring::zmod(b)));
    return out;
}

std::vector<ModulePtr> catalog_modules(const RingPtr& ring, int max_module) {
    std::vector<ModulePtr> out;
    if (ring->size() <= max_module) out.push_back(Module::regular(ring));
    const auto& cons = ring->construction();
    if (cons.value("kind", "") == "zmod") {
        int n = cons["n"].get<int>();
        for (int d = 2; d < n; ++d)
            if (n % d == 0 && d <= max_module)
                out.push_back(Module::zmod_over(d, ring));
    } else {
        // quotients of the regular module by principal submodules
        auto reg = Module::regular(ring);
        std::set<std::vector<Elem>> seen;
        for (Elem r = 0; r < ring->size(); ++r) {
            std::set<Elem> sub;
            for (Elem x = 0; x < ring->size(); ++x) sub.insert(ring->mul(r, x));
            std::vector<Elem> subv(sub.begin(), sub.end());
            if ((int)subv.size() <= 1 || (int)subv.size() == ring->size())
                continue;
            if (!seen.insert(subv).second) continue;
            int qsize = ring->size() / (int)subv.size();
            if (qsize < 2 || qsize > max_module) continue;
            out.push_back(Module::quotient(reg, subv));
        }
    }
    return out;
}

const std::vector<std::string>& verify_theorems() {
    static const std::vector<std::string> names = {
        "prop_semi_elem", "thm_SX",    "cor_split_pre",
        "prop_M_split",   "prop_irr",  "prop_prim",
        "lemmas",         "thm_atomic", "transfer"};
    return names;
}

int VerifyResult::violations() const {
    int v = 0;
    for (const auto& [name, counts] : per_theorem) v += counts[2];
    return v;
}

nlohmann::json VerifyResult::summary_json() const {
    nlohmann::json per = nlohmann::json::object();
    for (const auto& [name, c] : per_theorem)
        per[name] = {{"holds", c[0]}, {"vacuous", c[1]}, {"violations", c[2]}};
    return {{"schema_version", 1},
            {"instances", instances},
            {"pairs", pairs},
            {"per_theorem", per},
            {"coverage_warnings", coverage_warnings},
            {"violations", violations()}};
}

VerifyResult run_verify(const CatalogBounds& bounds,
                        std::vector<std::string> theorems, int workers) {
    if (theorems.empty()) theorems = verify_theorems();
    for (const auto& t : theorems)
        if (std::find(verify_theorems().begin(), verify_theorems().end(), t) ==
            verify_theorems().end())
            throw Error("unknown_theorem", t);
    auto want = [&](const std::string& t) {
        return std::find(theorems.begin(), theorems.end(), t) != theorems.end();
    };

    struct Task {
        ModulePtr mod;
        SatSet S;
        std::vector<SatSet> sups;  // S' with S in S'
    };
    std::vector<Task> tasks;
    for (const auto& ring : catalog_rings(bounds.max_ring)) {
        auto sats = all_satsets(ring);
        for (const auto& mod : catalog_modules(ring, bounds.max_module))
            for (const auto& S : sats) {
                Task t{mod, S, {}};
                for (const auto& Sp : sats)
                    if (S.is_subset_of(Sp)) t.sups.push_back(Sp);
                tasks.push_back(std::move(t));
            }
    }

    struct TaskOut {
        std::vector<CheckReport> reports;
        int instances = 0;
    };
    std::vector<TaskOut> outs(tasks.size());

    auto run_task = [&](const Task& t, TaskOut& out) {
        const Module& M = *t.mod;
        auto push = [&](CheckReport rep) {
            stamp_id(rep);
            out.reports.push_back(std::move(rep));
        };
        if (want("prop_semi_elem")) push(check_prop_semi_elem(M, t.S));
        if (want("thm_SX"))
            for (Property p : kProperties) push(check_thm_SX(M, t.S, p));
        if (want("cor_split_pre")) push(check_cor_split_pre(M, t.S));
        for (const auto& Sp : t.sups) {
            if (want("prop_M_split")) push(check_prop_M_split(M, t.S, Sp));
            auto inst = TransferInstance::build(t.mod, t.S, Sp);
            ++out.instances;
            if (want("prop_irr")) push(check_prop_irr_all(inst));
            if (want("prop_prim")) push(check_prop_prim_all(inst));
            if (want("lemmas")) push(check_lemmas(inst));
            if (want("thm_atomic"))
                for (IrrKind a : kIrrKinds)
                    for (PrimKind b : kPrimKinds)
                        push(check_thm_atomic(inst, a, b));
            if (want("transfer"))
                for (Property p : kProperties) push(check_transfer(inst, p));
        }
    };

    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            run_task(tasks[i], outs[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                run_task(tasks[i], outs[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    VerifyResult res;
    res.pairs = (int)tasks.size();
    for (const auto& t : theorems) res.per_theorem[t] = {0, 0, 0};
    for (auto& out : outs) {
        res.instances += out.instances;
        for (auto& rep : out.reports) {
            auto& c = res.per_theorem[rep.name];
            if (rep.status == CheckStatus::holds) ++c[0];
            else if (rep.status == CheckStatus::vacuous) ++c[1];
            else ++c[2];
            res.reports.push_back(std::move(rep));
        }
    }
    for (const auto& [name, c] : res.per_theorem)
        if (c[0] == 0)
            res.coverage_warnings.push_back(
                name + ": every catalog instance is vacuous");
    return res;
}

// ---------------------------------------------------------------------------
// predicate parsing

namespace {

const std::set<std::string>& known_atoms() {
    static const std::set<std::string> atoms = {
        "presimplifiable", "atomic",          "bfm",
        "ffm",             "hfm",             "ufm",
        "compactly_atomic", "semi_factorable", "factorable",
        "splits",          "s_meets_zm",      "s_avoids_zm",
        "s_meets_zr",      "s_avoids_zr",     "s_is_units",
        "s_is_full"};
    return atoms;
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> toks;
    std::size_t i = 0;
    auto match = [&](const char* lit) {
        std::size_t n = std::strlen(lit);
        if (text.compare(i, n, lit) == 0) {
            i += n;
            return true;
        }
        return false;
    };
    while (i < text.size()) {
        unsigned char c = text[i];
        if (std::isspace(c)) {
            ++i;
        } else if (c == '(' || c == ')') {
            toks.push_back(std::string(1, (char)c));
            ++i;
        } else if (match("&&") || match("&") || match("\xe2\x88\xa7")) {
            toks.push_back("&");
        } else if (match("||") || match("|") || match("\xe2\x88\xa8")) {
            toks.push_back("|");
        } else if (match("!") || match("\xc2\xac")) {
            toks.push_back("!");
        } else if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum((unsigned char)text[j]) || text[j] == '_'))
                ++j;
            std::string word = text.substr(i, j - i);
            std::transform(word.begin(), word.end(), word.begin(),
                           [](unsigned char ch) { return std::tolower(ch); });
            if (word == "and") toks.push_back("&");
            else if (word == "or") toks.push_back("|");
            else if (word == "not") toks.push_back("!");
            else toks.push_back("id:" + word);
            i = j;
        } else {
            throw Error("syntax", "unexpected character at offset " +
                                      std::to_string(i));
        }
    }
    return toks;
}

}  // namespace

Predicate Predicate::parse(const std::string& text) {
    Predicate p;
    p.text_ = text;
    auto toks = tokenize(text);
    std::size_t pos = 0;
    auto peek = [&]() -> std::string {
        return pos < toks.size() ? toks[pos] : std::string();
    };
    std::function<int()> expr, term, fact;
    fact = [&]() -> int {
        std::string t = peek();
        if (t == "!") {
            ++pos;
            int a = fact();
            p.nodes_.push_back({Node::negation, "", a, -1});
            return (int)p.nodes_.size() - 1;
        }
        if (t == "(") {
            ++pos;
            int a = expr();
            if (peek() != ")") throw Error("syntax", "expected ')'");
            ++pos;
            return a;
        }
        if (t.rfind("id:", 0) == 0) {
            ++pos;
            std::string name = t.substr(3);
            if (!known_atoms().count(name))
                throw Error("unknown_atom", name);
            p.nodes_.push_back({Node::atom, name, -1, -1});
            return (int)p.nodes_.size() - 1;
        }
        throw Error("syntax", "expected atom, '!' or '('");
    };
    term = [&]() -> int {
        int a = fact();
        while (peek() == "&") {
            ++pos;
            int b = fact();
            p.nodes_.push_back({Node::conjunction, "", a, b});
            a = (int)p.nodes_.size() - 1;
        }
        return a;
    };
    expr = [&]() -> int {
        int a = term();
        while (peek() == "|") {
            ++pos;
            int b = term();
            p.nodes_.push_back({Node::disjunction, "", a, b});
            a = (int)p.nodes_.size() - 1;
        }
        return a;
    };
    p.root_ = expr();
    if (pos != toks.size()) throw Error("syntax", "trailing tokens");
    return p;
}

bool Predicate::eval(
    const std::function<bool(const std::string&)>& atom) const {
    std::function<bool(int)> go = [&](int idx) -> bool {
        const Node& n = nodes_[idx];
        switch (n.kind) {
            case Node::atom: return atom(n.name);
            case Node::negation: return !go(n.a);
            case Node::conjunction: return go(n.a) && go(n.b);
            case Node::disjunction: return go(n.a) || go(n.b);
        }
        return false;
    };
    return go(root_);
}

std::vector<std::string> Predicate::atoms() const {
    std::set<std::string> s;
    for (const auto& n : nodes_)
        if (n.kind == Node::atom) s.insert(n.name);
    return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------
// hunter

nlohmann::json HuntResult::to_json() const {
    return {{"schema_version", 1},
            {"witnesses", witnesses},
            {"scanned", scanned},
            {"cursor", cursor},
            {"exhausted", exhausted}};
}

namespace {

nlohmann::json checkpoint_json(const HuntSpec& spec, const HuntResult& res) {
    return {{"schema_version", 1},
            {"predicate", spec.predicate},
            {"max_ring", spec.max_ring},
            {"max_module", spec.max_module},
            {"cursor", res.cursor},
            {"scanned", res.scanned},
            {"witnesses", res.witnesses}};
}

}  // namespace

HuntResult hunt(const HuntSpec& spec, const std::string& checkpoint_path) {
    auto pred = Predicate::parse(spec.predicate);
    HuntResult res;

    if (!checkpoint_path.empty()) {
        std::ifstream in(checkpoint_path);
        if (in.good()) {
            nlohmann::json j;
            try {
                in >> j;
            } catch (const std::exception&) {
                throw Error("checkpoint_mismatch", "unreadable checkpoint");
            }
            if (j.value("predicate", "") != spec.predicate ||
                j.value("max_ring", -1) != spec.max_ring ||
                j.value("max_module", -1) != spec.max_module)
                throw Error("checkpoint_mismatch",
                            "checkpoint written for different parameters");
            res.cursor = j.value("cursor", 0l);
            res.scanned = j.value("scanned", 0l);
            if (j.contains("witnesses"))
                for (const auto& w : j["witnesses"]) res.witnesses.push_back(w);
        }
    }
    auto save = [&]() {
        if (checkpoint_path.empty()) return;
        std::ofstream out(checkpoint_path, std::ios::trunc);
        out << checkpoint_json(spec, res).dump() << "\n";
    };

    long index = 0;
    bool stopped = false;
    for (const auto& ring : catalog_rings(spec.max_ring)) {
        if (stopped) break;
        auto sats = all_satsets(ring);
        for (const auto& mod : catalog_modules(ring, spec.max_module)) {
            if (stopped) break;
            for (const auto& S : sats) {
                long my = index++;
                if (my < res.cursor) continue;
                if (stopped) break;

                // lazy per-instance atom evaluation
                const Module& M = *mod;
                std::shared_ptr<ClassReport> cls;
                std::shared_ptr<SplitVerdict> verdict;
                auto classified = [&]() -> const ClassReport& {
                    if (!cls) cls = std::make_shared<ClassReport>(classify(M, S));
                    return *cls;
                };
                auto analyzed = [&]() -> const SplitVerdict& {
                    if (!verdict)
                        verdict = std::make_shared<SplitVerdict>(
                            analyze_subset(M, S, M.carrier()));
                    return *verdict;
                };
                auto meets = [&](const std::vector<Elem>& zs) {
                    for (Elem a : S.elements())
                        if (std::find(zs.begin(), zs.end(), a) != zs.end())
                            return true;
                    return false;
                };
                std::map<std::string, bool> memo;
                std::function<bool(const std::string&)> atom =
                    [&](const std::string& name) -> bool {
                    auto it = memo.find(name);
                    if (it != memo.end()) return it->second;
                    bool v = false;
                    if (name == "presimplifiable") v = classified().presimplifiable;
                    else if (name == "atomic") v = classified().is_atomic();
                    else if (name == "bfm") v = classified().bfm;
                    else if (name == "ffm") v = classified().ffm;
                    else if (name == "hfm") v = classified().hfm;
                    else if (name == "ufm") v = classified().ufm;
                    else if (name == "compactly_atomic") v = analyzed().compactly_atomic;
                    else if (name == "semi_factorable") v = analyzed().semi_factorable;
                    else if (name == "factorable") v = analyzed().factorable;
                    else if (name == "splits") v = analyzed().splits;
                    else if (name == "s_meets_zm")
                        v = meets(M.zero_divisors(M.carrier()));
                    else if (name == "s_avoids_zm")
                        v = !meets(M.zero_divisors(M.carrier()));
                    else if (name == "s_meets_zr") {
                        auto reg = Module::regular(M.ring());
                        v = meets(reg->zero_divisors(reg->carrier()));
                    } else if (name == "s_avoids_zr") {
                        auto reg = Module::regular(M.ring());
                        v = !meets(reg->zero_divisors(reg->carrier()));
                    } else if (name == "s_is_units")
                        v = S == SatSet::units(M.ring());
                    else if (name == "s_is_full")
                        v = S.is_full();
                    memo[name] = v;
                    return v;
                };
                ++res.scanned;
                if (pred.eval(atom)) {
                    nlohmann::json flags = nlohmann::json::object();
                    for (const auto& a : pred.atoms()) flags[a] = atom(a);
                    nlohmann::json w = {{"index", my},
                                        {"ring", M.ring()->to_json()},
                                        {"module", M.to_json()},
                                        {"S", S.to_json()},
                                        {"flags", flags}};
                    w["id"] = fnv1a_hex(w.dump());
                    res.witnesses.push_back(std::move(w));
                    if (spec.stop_after >= 0 &&
                        (long)res.witnesses.size() >= spec.stop_after)
                        stopped = true;
                }
                res.cursor = my + 1;
                if (res.cursor % 32 == 0) save();
            }
        }
    }
    res.exhausted = !stopped;
    save();
    return res;
}

}  // namespace factorlab
