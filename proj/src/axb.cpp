#include "factorlab/axb.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "factorlab/module.hpp"
#include "factorlab/split.hpp"

namespace factorlab {

namespace {

int characteristic(const RingPtr& R) {
    const auto& c = R->construction();
    std::string kind = c.value("kind", "");
    if (kind == "zmod") return c["n"].get<int>();
    if (kind == "gfquot") return c["p"].get<int>();
    throw Error("unsupported_pair", "coefficient ring must be zmod or gfquot");
}

}  // namespace

struct AxB::Cache {
    bool irr_built = false;
    std::vector<AxB::Poly> irrs;  // irreducibles of degree >= 1
    std::map<AxB::Poly, std::set<std::vector<AxB::Poly>>> facts;
};

AxB::AxB(RingPtr B, int a, int d)
    : B_(std::move(B)), a_(a), d_(d), cache_(std::make_shared<Cache>()) {}

AxB AxB::make(const RingPtr& A, const RingPtr& B, int degree_bound) {
    if (degree_bound < 1) throw Error("bad_element", "degree bound must be >= 1");
    if (!B->is_domain()) throw Error("unsupported_pair", "B must be a field");
    int p = characteristic(B);
    if (A->size() == B->size()) {
        if (A->construction() != B->construction())
            throw Error("unsupported_pair", "A = B requires the same construction");
    } else {
        if (!A->is_domain() || A->size() != p)
            throw Error("unsupported_pair",
                        "A must be the prime subfield of B (size = char B)");
    }
    return AxB(B, A->size(), degree_bound);
}

AxB::Poly AxB::constant(Elem a) const {
    if (a < 0 || a >= a_) throw Error("bad_element", "constant outside A");
    Poly f = zero();
    f[0] = a;
    return f;
}

AxB::Poly AxB::monomial(Elem u, int n) const {
    if (n < 0 || n > d_ || u < 0 || u >= B_->size())
        throw Error("bad_element", "monomial outside the fragment");
    if (n == 0 && u >= a_) throw Error("bad_element", "constant outside A");
    Poly f = zero();
    f[n] = u;
    return f;
}

bool AxB::in_fragment(const Poly& f) const {
    if ((int)f.size() != d_ + 1) return false;
    for (Elem c : f)
        if (c < 0 || c >= B_->size()) return false;
    return f[0] < a_;
}

int AxB::deg(const Poly& f) const {
    for (int i = d_; i >= 0; --i)
        if (f[i] != B_->zero()) return i;
    return -1;
}

std::string AxB::name(const Poly& f) const {
    if (deg(f) < 0) return "0";
    std::string out;
    for (int i = 0; i <= d_; ++i) {
        if (f[i] == B_->zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += B_->element_name(f[i]);
        } else {
            if (f[i] != B_->one()) out += B_->element_name(f[i]) + "*";
            out += i == 1 ? "X" : "X^" + std::to_string(i);
        }
    }
    return out;
}

AxB::Poly AxB::add(const Poly& f, const Poly& g) const {
    Poly h = zero();
    for (int i = 0; i <= d_; ++i) h[i] = B_->add(f[i], g[i]);
    return h;
}

std::optional<AxB::Poly> AxB::mul(const Poly& f, const Poly& g) const {
    int df = deg(f), dg = deg(g);
    if (df < 0 || dg < 0) return zero();
    if (df + dg > d_) return std::nullopt;
    Poly h = zero();
    for (int i = 0; i <= df; ++i)
        for (int j = 0; j <= dg; ++j)
            h[i + j] = B_->add(h[i + j], B_->mul(f[i], g[j]));
    if (!in_fragment(h)) return std::nullopt;
    return h;
}

std::optional<AxB::Poly> AxB::div(const Poly& f, const Poly& g) const {
    int dg = deg(g);
    if (dg < 0) return std::nullopt;
    if (deg(f) < 0) return zero();
    Poly r = f, q = zero();
    auto lg_inv = B_->inverse(g[dg]);
    while (true) {
        int dr = deg(r);
        if (dr < dg) break;
        Elem c = B_->mul(r[dr], *lg_inv);
        q[dr - dg] = c;
        for (int j = 0; j <= dg; ++j)
            r[dr - dg + j] =
                B_->sub(r[dr - dg + j], B_->mul(c, g[j]));
    }
    if (deg(r) >= 0) return std::nullopt;
    if (!in_fragment(q)) return std::nullopt;
    return q;
}

bool AxB::is_unit(const Poly& f) const {
    return deg(f) == 0 && f[0] < a_;
}

bool AxB::in_S(const Poly& f) const {
    int df = deg(f);
    if (df < 0) return false;
    if (df == 0) return f[0] < a_;  // U(B) cap A = U(A)
    for (int i = 0; i < df; ++i)
        if (f[i] != B_->zero()) return false;
    return true;  // u X^n with u in U(B)
}

std::vector<AxB::Poly> AxB::s_elements() const {
    std::vector<Poly> out;
    for (Elem a = 1; a < a_; ++a) out.push_back(constant(a));
    for (int n = 1; n <= d_; ++n)
        for (Elem u = 1; u < B_->size(); ++u) out.push_back(monomial(u, n));
    return out;
}

bool AxB::associated(const Poly& f, const Poly& g) const {
    for (Elem u = 1; u < a_; ++u) {
        Poly h = zero();
        for (int i = 0; i <= d_; ++i) h[i] = B_->mul(u, g[i]);
        if (h == f) return true;
    }
    return false;
}

bool AxB::s_assoc(const Poly& f, const Poly& g) const {
    auto one_way = [&](const Poly& x, const Poly& y) {  // x = s y
        for (const auto& s : s_elements()) {
            auto h = mul(s, y);
            if (h && *h == x) return true;
        }
        return false;
    };
    return one_way(f, g) && one_way(g, f);
}

bool AxB::is_S_primitive(const Poly& f) const {
    return deg(f) >= 0 && f[0] != B_->zero();
}

bool AxB::is_S_primitive_scan(const Poly& f) const {
    if (deg(f) < 0) return false;
    for (const auto& s : s_elements()) {
        auto g = div(f, s);
        if (!g) continue;
        auto back = mul(s, *g);
        if (!back || *back != f) continue;
        if (!s_assoc(*g, f)) return false;
    }
    return true;
}

std::pair<AxB::Poly, AxB::Poly> AxB::compact_factor(const Poly& f) const {
    if (deg(f) < 0) throw Error("bad_element", "zero has no compact factorization");
    int k = 0;
    while (f[k] == B_->zero()) ++k;
    if (k == 0) return {constant(B_->one()), f};
    Elem u = f[k];
    Poly s = monomial(u, k);
    Poly g = zero();
    auto u_inv = B_->inverse(u);
    for (int i = k; i <= d_; ++i) g[i - k] = B_->mul(*u_inv, f[i]);
    return {s, g};
}

std::vector<std::pair<AxB::Poly, AxB::Poly>> AxB::compact_factorizations(
    const Poly& f) const {
    std::vector<std::pair<Poly, Poly>> out;
    if (deg(f) < 0) throw Error("bad_element", "zero has no compact factorization");
    for (const auto& s : s_elements()) {
        auto g = div(f, s);
        if (!g) continue;
        auto back = mul(s, *g);
        if (!back || *back != f) continue;
        if (is_S_primitive(*g)) out.push_back({s, *g});
    }
    return out;
}

bool AxB::irreducible(const Poly& f) const {
    int df = deg(f);
    if (df < 0 || is_unit(f)) return false;
    for (const auto& g : fragment()) {
        int dg = deg(g);
        if (dg < 1 || dg >= df) continue;
        auto h = div(f, g);
        if (!h) continue;
        auto back = mul(g, *h);
        if (back && *back == f && !is_unit(*h) && deg(*h) >= 0) return false;
    }
    return true;
}

std::vector<AxB::Poly> AxB::fragment() const {
    std::vector<Poly> out;
    Poly f = zero();
    // odometer over coefficients: constant term in A, the rest in B
    while (true) {
        out.push_back(f);
        int i = 0;
        for (; i <= d_; ++i) {
            int cap = i == 0 ? a_ : B_->size();
            if (f[i] + 1 < cap) {
                ++f[i];
                break;
            }
            f[i] = 0;
        }
        if (i > d_) break;
    }
    return out;
}

std::vector<std::vector<AxB::Poly>> AxB::atomic_factorizations(
    const Poly& f) const {
    // memoized recursion; terminates because factor degrees strictly drop
    if (!cache_->irr_built) {
        for (const auto& g : fragment())
            if (deg(g) >= 1 && irreducible(g)) cache_->irrs.push_back(g);
        cache_->irr_built = true;
    }
    const auto& irrs = cache_->irrs;
    auto& memo = cache_->facts;
    std::function<const std::set<std::vector<Poly>>&(const Poly&)> go =
        [&](const Poly& x) -> const std::set<std::vector<Poly>>& {
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        std::set<std::vector<Poly>> res;
        if (irreducible(x)) res.insert({x});
        for (const auto& g : irrs) {
            auto h = div(x, g);
            if (!h) continue;
            auto back = mul(g, *h);
            if (!back || *back != x) continue;
            if (deg(*h) < 0 || is_unit(*h)) continue;
            for (const auto& rest : go(*h)) {
                std::vector<Poly> fact = rest;
                fact.push_back(g);
                std::sort(fact.begin(), fact.end());
                res.insert(std::move(fact));
            }
        }
        return memo[x] = std::move(res);
    };
    const auto& s = go(f);
    return {s.begin(), s.end()};
}

int AxB::iso_classes(const std::vector<std::vector<Poly>>& fs) const {
    auto rep = [&](const Poly& g) {
        Poly best = g;
        for (Elem u = 1; u < a_; ++u) {
            Poly h = zero();
            for (int i = 0; i <= d_; ++i) h[i] = B_->mul(u, g[i]);
            best = std::min(best, h);
        }
        return best;
    };
    std::set<std::vector<Poly>> classes;
    for (const auto& fact : fs) {
        std::vector<Poly> canon;
        for (const auto& g : fact) canon.push_back(rep(g));
        std::sort(canon.begin(), canon.end());
        classes.insert(canon);
    }
    return (int)classes.size();
}

// ---------------------------------------------------------------------------
// splitting criterion

namespace {

nlohmann::json axb_instance(const RingPtr& A, const RingPtr& B, int d) {
    return {{"kind", "axb"},
            {"A", A->to_json()},
            {"B", B->to_json()},
            {"degree_bound", d}};
}

/// Generic in-fragment splitting decider: semi-factorability of the fragment
/// plus primitivity of in-fragment products of primitives.
bool generic_splits(const AxB& ax, nlohmann::json* witness) {
    auto frag = ax.fragment();
    for (const auto& f : frag) {
        if (ax.deg(f) < 0) continue;
        auto pairs = ax.compact_factorizations(f);
        if (pairs.empty()) {
            if (witness) *witness = {{"no_compact", ax.name(f)}};
            return false;
        }
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                if (!ax.associated(pairs[i].first, pairs[j].first)) {
                    if (witness)
                        *witness = {{"semi_clash", ax.name(f)},
                                    {"s1", ax.name(pairs[i].first)},
                                    {"s2", ax.name(pairs[j].first)}};
                    return false;
                }
                if (!ax.s_assoc(pairs[i].second, pairs[j].second)) {
                    if (witness)
                        *witness = {{"tail_clash", ax.name(f)},
                                    {"n1", ax.name(pairs[i].second)},
                                    {"n2", ax.name(pairs[j].second)}};
                    return false;
                }
            }
    }
    for (const auto& f : frag) {
        if (!ax.is_S_primitive(f)) continue;
        for (const auto& g : frag) {
            if (!ax.is_S_primitive(g)) continue;
            auto h = ax.mul(f, g);
            if (!h || ax.deg(*h) < 0) continue;
            if (!ax.is_S_primitive(*h)) {
                if (witness)
                    *witness = {{"primitive_product_clash",
                                 ax.name(f) + " * " + ax.name(g)}};
                return false;
            }
        }
    }
    return true;
}

}  // namespace

CheckReport check_ex_splits(const RingPtr& A, const RingPtr& B,
                            int degree_bound) {
    auto ax = AxB::make(A, B, degree_bound);
    CheckReport rep;
    rep.name = "ex_splits";
    rep.instance = axb_instance(A, B, degree_bound);

    // (1) S_0 = U(A) splits A (A is a field; decided by the generic decider)
    auto regA = Module::regular(A);
    bool cond1 =
        analyze_subset(*regA, SatSet::units(A), regA->carrier()).splits;

    // (2) every b in B is u a with u in U(B), a in A
    bool cond2 = true;
    for (Elem b = 0; b < B->size() && cond2; ++b) {
        bool found = false;
        for (Elem u : B->units()) {
            for (Elem a = 0; a < ax.a_size() && !found; ++a)
                if (B->mul(u, a) == b) found = true;
            if (found) break;
        }
        if (!found) {
            cond2 = false;
            rep.witnesses.push_back({{"condition2_fails_at", B->element_name(b)}});
        }
    }

    // (3) U(B) cap K lies in A_{S_0}; K = A here and A_{S_0} = A, so the
    // scan checks that every unit of B that lies in A has an id below |A|
    bool cond3 = true;
    for (Elem u : B->units())
        if (u < ax.a_size() && !A->is_unit(u)) cond3 = false;

    nlohmann::json w;
    bool generic = generic_splits(ax, &w);
    if (!generic) rep.witnesses.push_back(w);

    rep.conclusions = {{"condition1", cond1},
                       {"condition2", cond2},
                       {"condition3", cond3},
                       {"generic_agrees", (cond1 && cond2 && cond3) == generic}};
    rep.settle();
    return rep;
}

CheckReport check_ex_splits_zq() {
    CheckReport rep;
    rep.name = "ex_splits_zq";
    rep.instance = {{"kind", "axb"}, {"A", "Z"}, {"B", "Q"}};

    // (1) S_0 = U(Q) cap Z = {1, -1} = U(Z): S_0 is the unit set, which
    // splits any domain trivially
    rep.conclusions.push_back({"condition1", true});

    // (2) b = u a with u = b, a = 1 — exact check on sample rationals
    bool cond2 = true;
    for (Rat b : {Rat(1, 2), Rat(3, 4), Rat(-7, 5), Rat(22, 7)})
        if (b * Rat(1) != b) cond2 = false;
    rep.conclusions.push_back({"condition2_on_samples", cond2});

    // (3) fails: 1/2 is a unit of Q inside K = Q but not in Z_{S_0} = Z
    Rat u(1, 2);
    bool unit_of_q = u != Rat(0);
    bool not_in_z = u.denominator() != 1;
    rep.conclusions.push_back({"condition3_fails", unit_of_q && not_in_z});
    rep.conclusions.push_back({"not_splits", unit_of_q && not_in_z});
    rep.witnesses.push_back({{"u", "1/2"}});
    rep.settle();
    return rep;
}

// ---------------------------------------------------------------------------
// Laurent fragment

namespace {

/// B[X, X^-1] restricted to exponents -d..d: coefficient vectors of length
/// 2d+1, index i = coefficient of X^(i-d). Units are the nonzero monomials.
struct Laurent {
    RingPtr B;
    int d;
    using LPoly = std::vector<Elem>;

    LPoly zero() const { return LPoly(2 * d + 1, B->zero()); }
    int lo(const LPoly& f) const {
        for (int i = 0; i < (int)f.size(); ++i)
            if (f[i] != B->zero()) return i - d;
        return d + 1;  // zero
    }
    int hi(const LPoly& f) const {
        for (int i = (int)f.size() - 1; i >= 0; --i)
            if (f[i] != B->zero()) return i - d;
        return -d - 1;
    }
    bool is_zero(const LPoly& f) const { return lo(f) > d; }
    bool is_unit(const LPoly& f) const {
        return !is_zero(f) && lo(f) == hi(f);
    }
    std::optional<LPoly> mul(const LPoly& f, const LPoly& g) const {
        if (is_zero(f) || is_zero(g)) return zero();
        if (lo(f) + lo(g) < -d || hi(f) + hi(g) > d) return std::nullopt;
        LPoly h = zero();
        for (int i = 0; i < 2 * d + 1; ++i)
            for (int j = 0; j < 2 * d + 1; ++j) {
                if (f[i] == B->zero() || g[j] == B->zero()) continue;
                int e = (i - d) + (j - d);
                h[e + d] = B->add(h[e + d], B->mul(f[i], g[j]));
            }
        return h;
    }
    std::optional<LPoly> div(const LPoly& f, const LPoly& g) const {
        if (is_zero(g)) return std::nullopt;
        if (is_zero(f)) return zero();
        // divide the underlying polynomials, then reattach the exponent shift
        int lf = lo(f), lg = lo(g);
        std::vector<Elem> pf, pg;
        for (int e = lf; e <= hi(f); ++e) pf.push_back(f[e + d]);
        for (int e = lg; e <= hi(g); ++e) pg.push_back(g[e + d]);
        // long division of pf by pg over the field B
        std::vector<Elem> q(pf.size(), B->zero());
        auto degv = [&](const std::vector<Elem>& v) {
            for (int i = (int)v.size() - 1; i >= 0; --i)
                if (v[i] != B->zero()) return i;
            return -1;
        };
        int dg = degv(pg);
        auto inv = B->inverse(pg[dg]);
        std::vector<Elem> r = pf;
        while (degv(r) >= dg) {
            int dr = degv(r);
            Elem c = B->mul(r[dr], *inv);
            q[dr - dg] = c;
            for (int j = 0; j <= dg; ++j)
                r[dr - dg + j] = B->sub(r[dr - dg + j], B->mul(c, pg[j]));
        }
        if (degv(r) >= 0) return std::nullopt;
        int shift = lf - lg;
        if (shift < -d || shift + degv(q) > d) return std::nullopt;
        LPoly out = zero();
        for (int i = 0; i <= degv(q); ++i) out[shift + i + d] = q[i];
        return out;
    }
    bool irreducible(const LPoly& f) const {
        if (is_zero(f) || is_unit(f)) return false;
        for (const auto& g : fragment()) {
            if (is_zero(g) || is_unit(g)) continue;
            auto h = div(f, g);
            if (!h) continue;
            auto back = mul(g, *h);
            if (!back || *back != f) continue;
            if (!is_zero(*h) && !is_unit(*h)) return false;
        }
        return true;
    }
    const std::vector<LPoly>& fragment() const {
        if (frag_.empty()) {
            LPoly f = zero();
            while (true) {
                frag_.push_back(f);
                std::size_t i = 0;
                for (; i < f.size(); ++i) {
                    if (f[i] + 1 < B->size()) {
                        ++f[i];
                        break;
                    }
                    f[i] = 0;
                }
                if (i == f.size()) break;
            }
        }
        return frag_;
    }
    std::set<std::vector<LPoly>> facts(const LPoly& f) const {
        auto it = memo_.find(f);
        if (it != memo_.end()) return it->second;
        std::set<std::vector<LPoly>> res;
        if (irreducible(f)) res.insert({f});
        for (const auto& g : fragment()) {
            if (!irreducible(g)) continue;
            auto h = div(f, g);
            if (!h) continue;
            auto back = mul(g, *h);
            if (!back || *back != f) continue;
            if (is_zero(*h) || is_unit(*h)) continue;
            for (const auto& rest : facts(*h)) {
                std::vector<LPoly> fact = rest;
                fact.push_back(g);
                std::sort(fact.begin(), fact.end());
                res.insert(std::move(fact));
            }
        }
        return memo_[f] = std::move(res);
    }
    /// canonical associate-class representative: shift the lowest exponent
    /// to 0 and normalize the leading coefficient to 1
    LPoly rep(const LPoly& f) const {
        if (is_zero(f)) return f;
        int l = lo(f), h = hi(f);
        auto inv = B->inverse(f[h + d]);
        LPoly out = zero();
        for (int e = l; e <= h; ++e)
            out[e - l + d] = B->mul(*inv, f[e + d]);
        return out;
    }
    int iso_classes(const std::set<std::vector<LPoly>>& fs) const {
        std::set<std::vector<LPoly>> classes;
        for (const auto& fact : fs) {
            std::vector<LPoly> canon;
            for (const auto& g : fact) canon.push_back(rep(g));
            std::sort(canon.begin(), canon.end());
            classes.insert(canon);
        }
        return (int)classes.size();
    }

    mutable std::vector<LPoly> frag_;
    mutable std::map<LPoly, std::set<std::vector<LPoly>>> memo_;
};

}  // namespace

CheckReport check_laurent_transfer(const RingPtr& B, int d, Property p) {
    if (!B->is_domain()) throw Error("unsupported_pair", "B must be a field");
    CheckReport rep;
    rep.name = "laurent_transfer";
    rep.instance = {{"kind", "laurent"},
                    {"B", B->to_json()},
                    {"degree_bound", d},
                    {"property", to_string(p)}};

    auto poly = AxB::make(B, B, d);  // B[X], degree <= d
    Laurent lau{B, d, {}, {}};

    bool poly_atomic = true, poly_hf = true, poly_uf = true;
    std::map<std::vector<Elem>, std::set<int>> poly_lengths;
    for (const auto& f : poly.fragment()) {
        if (poly.deg(f) < 0) continue;
        if (poly.is_unit(f)) {
            poly_lengths[f] = {0};
            continue;
        }
        auto fs = poly.atomic_factorizations(f);
        if (fs.empty()) poly_atomic = false;
        std::set<int> lens;
        for (const auto& fact : fs) lens.insert((int)fact.size());
        if (lens.size() > 1) poly_hf = false;
        if (poly.iso_classes(fs) != 1) poly_uf = false;
        poly_lengths[f] = lens;
    }

    bool lau_atomic = true, lau_hf = true, lau_uf = true;
    for (const auto& f : lau.fragment()) {
        if (lau.is_zero(f) || lau.is_unit(f)) continue;
        auto fs = lau.facts(f);
        if (fs.empty()) lau_atomic = false;
        std::set<int> lens;
        for (const auto& fact : fs) lens.insert((int)fact.size());
        if (lens.size() > 1) lau_hf = false;
        if (lau.iso_classes(fs) != 1) lau_uf = false;
    }

    // lengths in the Laurent ring drop by the order of vanishing at 0,
    // because X becomes a unit there
    bool lengths_ok = true;
    for (const auto& [f, lens] : poly_lengths) {
        int ord = 0;
        while (f[ord] == B->zero()) ++ord;
        Laurent::LPoly img = lau.zero();
        for (int i = 0; i <= d; ++i) img[i + d] = f[i];
        std::set<int> expect;
        for (int l : lens) expect.insert(l - ord);
        std::set<int> got;
        if (lau.is_unit(img)) {
            got = {0};
        } else {
            for (const auto& fact : lau.facts(img)) got.insert((int)fact.size());
        }
        if (got != expect) {
            lengths_ok = false;
            rep.witnesses.push_back({{"f", poly.name(f)},
                                     {"poly_lengths", lens},
                                     {"laurent_lengths", got},
                                     {"ord", ord}});
        }
    }

    auto side = [&](bool atomic, bool hf, bool uf) {
        switch (p) {
            case Property::atomic: return atomic;
            case Property::bounded: return atomic;  // finite fragment
            case Property::half_factorial: return atomic && hf;
            case Property::finite_factorization: return atomic;  // finite sets
            case Property::unique_factorization: return atomic && uf;
            default: return true;
        }
    };
    bool lhs = side(poly_atomic, poly_hf, poly_uf);
    bool rhs = side(lau_atomic, lau_hf, lau_uf);
    rep.conclusions = {{"equivalence", lhs == rhs},
                       {"lengths_relation", lengths_ok}};
    rep.settle();
    return rep;
}

// ---------------------------------------------------------------------------
// main example theorem, degree-bounded consequences

CheckReport check_ex_main(const RingPtr& A, const RingPtr& B, int d) {
    auto ax = AxB::make(A, B, d);
    CheckReport rep;
    rep.name = "ex_main";
    rep.instance = axb_instance(A, B, d);
    int unit_index = (B->size() - 1) / (ax.a_size() - 1);
    rep.instance["unit_index"] = unit_index;

    bool atomic = true, hf = true;
    int max_classes = 0;
    nlohmann::json non_ufd;
    for (const auto& f : ax.fragment()) {
        if (ax.deg(f) < 0 || ax.is_unit(f)) continue;
        auto fs = ax.atomic_factorizations(f);
        if (fs.empty()) {
            atomic = false;
            rep.witnesses.push_back({{"no_factorization", ax.name(f)}});
            continue;
        }
        std::set<int> lens;
        for (const auto& fact : fs) lens.insert((int)fact.size());
        if (lens.size() > 1) {
            hf = false;
            rep.witnesses.push_back({{"length_clash", ax.name(f)}});
        }
        int classes = ax.iso_classes(fs);
        max_classes = std::max(max_classes, classes);
        if (classes > 1 && non_ufd.is_null())
            non_ufd = {{"element", ax.name(f)}, {"iso_classes", classes}};
    }
    rep.instance["max_iso_classes"] = max_classes;

    rep.conclusions.push_back({"atomic_within_degree", atomic});
    rep.conclusions.push_back({"half_factorial_within_degree", hf});
    rep.conclusions.push_back({"finite_iso_classes", max_classes >= 1});
    if (unit_index > 1) {
        rep.conclusions.push_back({"non_ufd_witness", !non_ufd.is_null()});
        if (!non_ufd.is_null()) rep.witnesses.push_back(non_ufd);
    } else {
        rep.conclusions.push_back({"ufd_within_degree", max_classes == 1});
    }
    if (d >= 2) {
        auto x2 = ax.mul(ax.monomial(B->one(), 1), ax.monomial(B->one(), 1));
        int x2_classes = ax.iso_classes(ax.atomic_factorizations(*x2));
        rep.instance["x2_iso_classes"] = x2_classes;
    }
    rep.settle();
    return rep;
}

// ---------------------------------------------------------------------------
// (Z, Q) negative witness

bool NonBfdWitness::validate() const {
    if ((int)scalars.size() != k) return false;
    Rat prod(1);
    for (const Rat& s : scalars) {
        if (s.denominator() != 1 || s == Rat(1) || s == Rat(-1) || s == Rat(0))
            return false;  // scalar must be a nonunit nonzero integer
        prod *= s;
    }
    // tail must lie in Z + X Q[X]
    if (tail.empty() || tail[0].denominator() != 1) return false;
    // product scalars * tail must equal X
    for (std::size_t i = 0; i < tail.size(); ++i) {
        Rat c = prod * tail[i];
        if (i == 1 ? c != Rat(1) : c != Rat(0)) return false;
    }
    return tail.size() >= 2;
}

nlohmann::json NonBfdWitness::to_json() const {
    auto str = [](const Rat& r) {
        return std::to_string(r.numerator()) +
               (r.denominator() == 1 ? ""
                                     : "/" + std::to_string(r.denominator()));
    };
    nlohmann::json sc = nlohmann::json::array(),
                   tl = nlohmann::json::array();
    for (const Rat& s : scalars) sc.push_back(str(s));
    for (const Rat& c : tail) tl.push_back(str(c));
    return {{"k", k}, {"scalars", sc}, {"tail", tl}, {"target", "X"}};
}

NonBfdWitness axb_nonbfd_witness(int k, long long height_bound) {
    if (k < 1) throw Error("bad_element", "k must be >= 1");
    long long den = 1;
    for (int i = 0; i < k; ++i) {
        if (den > height_bound / 2)
            throw Error("height_overflow", "2^k exceeds the height bound");
        den *= 2;
    }
    NonBfdWitness w;
    w.k = k;
    w.scalars.assign(k, Rat(2));
    w.tail = {Rat(0), Rat(1, den)};
    return w;
}

}  // namespace factorlab
