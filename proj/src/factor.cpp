#include "factorlab/factor.hpp"

#include <algorithm>
#include <functional>

namespace factorlab {

const char* to_string(AssocKind k) {
    switch (k) {
        case AssocKind::assoc: return "assoc";
        case AssocKind::strong: return "strong";
        case AssocKind::very_strong: return "very_strong";
    }
    return "?";
}

const char* to_string(PrimKind k) {
    switch (k) {
        case PrimKind::primitive: return "primitive";
        case PrimKind::strongly_primitive: return "strongly_primitive";
        case PrimKind::very_strongly_primitive: return "very_strongly_primitive";
    }
    return "?";
}

const char* to_string(IrrKind k) {
    switch (k) {
        case IrrKind::irreducible: return "irreducible";
        case IrrKind::strongly_irreducible: return "strongly_irreducible";
        case IrrKind::very_strongly_irreducible: return "very_strongly_irreducible";
    }
    return "?";
}

const char* to_string(Property p) {
    switch (p) {
        case Property::presimplifiable: return "presimplifiable";
        case Property::atomic: return "atomic";
        case Property::bounded: return "bounded";
        case Property::half_factorial: return "half_factorial";
        case Property::finite_factorization: return "finite_factorization";
        case Property::unique_factorization: return "unique_factorization";
    }
    return "?";
}

bool associates(const Module& M, const SatSet& S, Elem m, Elem n, AssocKind kind) {
    const Ring& R = *M.ring();
    auto exists_scalar = [&](Elem from, Elem to) {
        for (Elem s : S.elements())
            if (M.act(s, to) == from) return true;
        return false;
    };
    switch (kind) {
        case AssocKind::assoc:
            return exists_scalar(m, n) && exists_scalar(n, m);
        case AssocKind::strong:
            for (Elem u : R.units())
                if (S.contains(u) && M.act(u, n) == m) return true;
            return false;
        case AssocKind::very_strong: {
            if (!associates(M, S, m, n, AssocKind::assoc)) return false;
            if (m == M.zero() && n == M.zero()) return true;
            for (Elem s : S.elements())
                if (M.act(s, n) == m && !R.is_unit(s)) return false;
            return true;
        }
    }
    return false;
}

bool ring_associated(const Ring& R, Elem a, Elem b, AssocKind kind) {
    switch (kind) {
        case AssocKind::assoc:
            return R.associated(a, b);
        case AssocKind::strong:
            for (Elem u : R.units())
                if (R.mul(u, b) == a) return true;
            return false;
        case AssocKind::very_strong: {
            if (!R.associated(a, b)) return false;
            if (a == R.zero() && b == R.zero()) return true;
            for (Elem r = 0; r < R.size(); ++r)
                if (R.mul(r, b) == a && !R.is_unit(r)) return false;
            return true;
        }
    }
    return false;
}

bool is_primitive(const Module& M, const SatSet& S, Elem m, PrimKind kind) {
    const Ring& R = *M.ring();
    if (kind == PrimKind::very_strongly_primitive) {
        // m = s m' forces s a unit
        for (Elem s : S.elements()) {
            if (R.is_unit(s)) continue;
            for (Elem n = 0; n < M.size(); ++n)
                if (M.act(s, n) == m) return false;
        }
        return true;
    }
    AssocKind rel = kind == PrimKind::primitive ? AssocKind::assoc
                                                : AssocKind::strong;
    for (Elem s : S.elements())
        for (Elem n = 0; n < M.size(); ++n)
            if (M.act(s, n) == m && !associates(M, S, n, m, rel)) return false;
    return true;
}

bool is_irreducible(const Ring& R, Elem a, IrrKind kind) {
    if (R.is_unit(a)) throw Error("unit_input", "irreducibility of a unit");
    AssocKind rel;
    switch (kind) {
        case IrrKind::irreducible: rel = AssocKind::assoc; break;
        case IrrKind::strongly_irreducible: rel = AssocKind::strong; break;
        default: rel = AssocKind::very_strong; break;
    }
    for (Elem b = 0; b < R.size(); ++b)
        for (Elem c = 0; c < R.size(); ++c)
            if (R.mul(b, c) == a && !ring_associated(R, a, b, rel) &&
                !ring_associated(R, a, c, rel))
                return false;
    return true;
}

FactorGraph FactorGraph::build(const Module& M, const SatSet& S) {
    FactorGraph g;
    g.adj.resize(M.size());
    const Ring& R = *M.ring();
    for (Elem s : S.elements()) {
        if (R.is_unit(s)) continue;
        for (Elem n = 0; n < M.size(); ++n) {
            Elem m = M.act(s, n);
            if (m != M.zero()) g.adj[m].push_back({s, n});
        }
    }
    return g;
}

namespace {

// reach[v][w]: w reachable from v in >= 1 step.
std::vector<std::vector<char>> positive_reachability(
    const std::vector<std::vector<FactorGraph::Edge>>& adj,
    const std::vector<char>& keep) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) {
        if (!keep[v]) continue;
        for (const auto& e : adj[v])
            if (keep[e.to]) reach[v][e.to] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (reach[i][k])
                for (int j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = 1;
    return reach;
}

std::vector<char> cycle_reachers(
    const std::vector<std::vector<FactorGraph::Edge>>& adj,
    const std::vector<char>& keep) {
    const int n = static_cast<int>(adj.size());
    auto reach = positive_reachability(adj, keep);
    std::vector<char> out(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!keep[v]) continue;
        if (reach[v][v]) out[v] = 1;
        for (int w = 0; w < n && !out[v]; ++w)
            if (reach[v][w] && reach[w][w]) out[v] = 1;
    }
    return out;
}

// Shortest node path v ->+ target using edges among kept nodes.
std::vector<Elem> bfs_path(const std::vector<std::vector<FactorGraph::Edge>>& adj,
                           const std::vector<char>& keep, Elem from, Elem to) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> prev(n, -2);
    std::vector<Elem> queue;
    for (const auto& e : adj[from])
        if (keep[e.to] && prev[e.to] == -2) {
            prev[e.to] = from == e.to ? -1 : from;
            queue.push_back(e.to);
        }
    if (prev[to] != -2) {
        // direct edge
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Elem v = queue[qi];
        if (v == to) break;
        for (const auto& e : adj[v])
            if (keep[e.to] && prev[e.to] == -2) {
                prev[e.to] = v;
                queue.push_back(e.to);
            }
    }
    std::vector<Elem> path;
    if (prev[to] == -2) return path;
    Elem cur = to;
    path.push_back(cur);
    while (true) {
        int p = prev[cur];
        if (p == -1 || p == from) {
            path.push_back(from);
            break;
        }
        path.push_back(p);
        cur = p;
        if (path.size() > adj.size() + 2) break;  // defensive
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

FactorAnalysis::FactorAnalysis(const Module& M, SatSet S)
    : mod_(&M), S_(std::move(S)) {
    const Module& Mm = *mod_;
    const Ring& R = *Mm.ring();
    graph_ = FactorGraph::build(Mm, S_);

    for (int i = 0; i < 3; ++i) {
        irr_[i].assign(R.size(), 0);
        for (Elem a = 0; a < R.size(); ++a)
            if (!R.is_unit(a)) irr_[i][a] = is_irreducible(R, a, kIrrKinds[i]);
        prim_[i].assign(Mm.size(), 0);
        for (Elem m = 0; m < Mm.size(); ++m)
            prim_[i][m] = is_primitive(Mm, S_, m, kPrimKinds[i]);
    }

    s_rep_.assign(Mm.size(), -1);
    for (Elem m = 0; m < Mm.size(); ++m)
        for (Elem n = 0; n <= m; ++n)
            if (associates(Mm, S_, m, n, AssocKind::assoc)) {
                s_rep_[m] = n;
                break;
            }

    std::vector<char> nonzero(Mm.size(), 1);
    nonzero[Mm.zero()] = 0;
    all_cyclic_ = cycle_reachers(graph_.adj, nonzero);
}

bool FactorAnalysis::bounded(Elem m) const { return !all_cyclic_[m]; }

std::vector<Elem> FactorAnalysis::cycle_from(Elem m) const {
    if (!all_cyclic_[m]) return {};
    const Module& Mm = *mod_;
    std::vector<char> nonzero(Mm.size(), 1);
    nonzero[Mm.zero()] = 0;
    auto reach = positive_reachability(graph_.adj, nonzero);
    for (Elem w = 0; w < Mm.size(); ++w) {
        if (!nonzero[w] || !reach[w][w]) continue;
        if (w != m && !reach[m][w]) continue;
        auto cyc = bfs_path(graph_.adj, nonzero, w, w);
        if (!cyc.empty()) return cyc;
    }
    return {};
}

const FactorAnalysis::PairInfo& FactorAnalysis::pair_info(IrrKind alpha,
                                                          PrimKind beta) const {
    auto key = std::make_pair(static_cast<int>(alpha), static_cast<int>(beta));
    auto it = pair_cache_.find(key);
    if (it != pair_cache_.end()) return it->second;

    const Module& Mm = *mod_;
    const int k = Mm.size();
    const auto& irr = irr_[static_cast<int>(alpha)];
    const auto& prim = prim_[static_cast<int>(beta)];

    // alpha-labeled subgraph on nonzero nodes
    std::vector<std::vector<FactorGraph::Edge>> adj(k);
    for (Elem m = 0; m < k; ++m) {
        if (m == Mm.zero()) continue;
        for (const auto& e : graph_.adj[m])
            if (irr[e.label]) adj[m].push_back(e);
    }

    PairInfo info;
    info.live.assign(k, 0);
    for (Elem m = 0; m < k; ++m)
        if (m != Mm.zero() && prim[m]) info.live[m] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Elem m = 0; m < k; ++m) {
            if (info.live[m] || m == Mm.zero()) continue;
            for (const auto& e : adj[m])
                if (info.live[e.to]) {
                    info.live[m] = 1;
                    changed = true;
                    break;
                }
        }
    }

    info.cyclic = cycle_reachers(adj, info.live);

    info.lengths.assign(k, std::nullopt);
    std::vector<char> done(k, 0);
    std::function<void(Elem)> compute = [&](Elem v) {
        if (done[v]) return;
        done[v] = 1;
        if (!info.live[v] || info.cyclic[v]) return;  // lengths stay nullopt
        std::set<int> ls;
        if (prim[v]) ls.insert(0);
        for (const auto& e : adj[v]) {
            if (!info.live[e.to]) continue;
            compute(e.to);
            for (int l : *info.lengths[e.to]) ls.insert(l + 1);
        }
        info.lengths[v] = std::move(ls);
    };
    for (Elem v = 0; v < k; ++v)
        if (v != Mm.zero()) compute(v);

    return pair_cache_.emplace(key, std::move(info)).first->second;
}

bool FactorAnalysis::atomic(Elem m, IrrKind alpha, PrimKind beta) const {
    return pair_info(alpha, beta).live[m] != 0;
}

std::optional<std::vector<int>> FactorAnalysis::atomic_lengths(
    Elem m, IrrKind alpha, PrimKind beta) const {
    const auto& info = pair_info(alpha, beta);
    if (!info.live[m]) return std::vector<int>{};
    if (info.cyclic[m]) return std::nullopt;
    return std::vector<int>(info.lengths[m]->begin(), info.lengths[m]->end());
}

std::vector<Factorization> FactorAnalysis::atomic_factorizations(
    Elem m, std::size_t cap) const {
    const auto& info = pair_info(IrrKind::irreducible, PrimKind::primitive);
    std::vector<Factorization> out;
    if (!info.live[m] || info.cyclic[m]) return out;
    const auto& prim = prim_[0];
    std::vector<Elem> scalars;
    std::function<void(Elem)> dfs = [&](Elem v) {
        if (out.size() >= cap) return;
        if (prim[v])
            out.push_back({m, scalars, v});
        for (const auto& e : graph_.adj[v]) {
            if (!irr_[0][e.label] || !info.live[e.to]) continue;
            scalars.push_back(e.label);
            dfs(e.to);
            scalars.pop_back();
        }
    };
    dfs(m);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<int> FactorAnalysis::iso_class_count(Elem m, int cap) const {
    const auto& info = pair_info(IrrKind::irreducible, PrimKind::primitive);
    if (!info.live[m]) return 0;
    if (info.cyclic[m]) return std::nullopt;

    auto fs = atomic_factorizations(m, 100000);
    auto groups = group_up_to_iso(fs, *mod_, S_);
    int n = static_cast<int>(groups.size());
    return std::min(n, cap);
}

bool FactorAnalysis::element_has_property(Elem m, Property p) const {
    switch (p) {
        case Property::presimplifiable:
            return element_presimplifiable(*mod_, S_, m);
        case Property::bounded:
            return bounded(m);
        case Property::atomic:
            return atomic(m, IrrKind::irreducible, PrimKind::primitive);
        case Property::half_factorial: {
            auto ls = atomic_lengths(m, IrrKind::irreducible, PrimKind::primitive);
            return ls.has_value() && ls->size() == 1;
        }
        case Property::finite_factorization: {
            if (!atomic(m, IrrKind::irreducible, PrimKind::primitive))
                return false;
            return iso_class_count(m).has_value();
        }
        case Property::unique_factorization: {
            if (!atomic(m, IrrKind::irreducible, PrimKind::primitive))
                return false;
            auto c = iso_class_count(m);
            return c.has_value() && *c == 1;
        }
    }
    return false;
}

EnumResult enumerate_factorizations(const Module& M, const SatSet& S, Elem m,
                                    EnumMode mode, int max_len,
                                    std::size_t max_items) {
    const Ring& R = *M.ring();
    EnumResult res;

    if (mode.kind == EnumMode::compact) {
        for (Elem s : S.elements())
            for (Elem n = 0; n < M.size(); ++n)
                if (M.act(s, n) == m &&
                    is_primitive(M, S, n, PrimKind::primitive))
                    res.items.push_back({m, {s}, n});
        return res;
    }

    FactorAnalysis fa(M, S);
    const bool atomic_mode = mode.kind == EnumMode::atomic;

    auto label_ok = [&](Elem s) {
        if (R.is_unit(s)) return false;
        return !atomic_mode || fa.irreducible(s, mode.alpha);
    };
    auto tail_ok = [&](Elem n) {
        return !atomic_mode || fa.primitive(n, mode.beta);
    };

    if (m == M.zero()) {
        // 0 = s.0 for every admissible scalar; report the trivial
        // factorization and flag unboundedness via the self loop.
        if (tail_ok(m)) res.items.push_back({m, {}, m});
        for (Elem s : S.elements())
            if (label_ok(s)) {
                res.status = EnumStatus::unbounded;
                res.cycle = {m, m};
                break;
            }
        return res;
    }

    // Mode-restricted view of the graph; in atomic mode only nodes that can
    // still reach a beta-primitive tail stay live.
    std::vector<char> live(M.size(), 0);
    if (atomic_mode) {
        for (Elem v = 0; v < M.size(); ++v)
            if (v != M.zero() && fa.primitive(v, mode.beta)) live[v] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (Elem v = 0; v < M.size(); ++v) {
                if (live[v] || v == M.zero()) continue;
                for (const auto& e : fa.graph().adj[v])
                    if (label_ok(e.label) && live[e.to]) {
                        live[v] = 1;
                        changed = true;
                        break;
                    }
            }
        }
    } else {
        for (Elem v = 0; v < M.size(); ++v) live[v] = v != M.zero();
    }

    std::vector<std::vector<FactorGraph::Edge>> adj(M.size());
    for (Elem v = 0; v < M.size(); ++v) {
        if (!live[v]) continue;
        for (const auto& e : fa.graph().adj[v])
            if (label_ok(e.label) && live[e.to]) adj[v].push_back(e);
    }
    std::vector<char> cyclic = cycle_reachers(adj, live);

    if (live[m] && cyclic[m]) {
        res.status = EnumStatus::unbounded;
        auto reach = positive_reachability(adj, live);
        for (Elem w = 0; w < M.size(); ++w) {
            if (!live[w] || !reach[w][w]) continue;
            if (w != m && !reach[m][w]) continue;
            res.cycle = bfs_path(adj, live, w, w);
            if (!res.cycle.empty()) break;
        }
    }

    if (!live[m]) return res;  // no admissible factorization at all

    // Depth-limited DFS; duplicates by (scalars, tail) removed.
    std::set<Factorization> seen;
    bool hit_item_cap = false;
    std::vector<Elem> scalars;
    std::function<void(Elem)> dfs = [&](Elem v) {
        if (seen.size() >= max_items) {
            hit_item_cap = true;
            return;
        }
        if (tail_ok(v)) seen.insert({m, scalars, v});
        if (static_cast<int>(scalars.size()) >= max_len) return;
        for (const auto& e : adj[v]) {
            scalars.push_back(e.label);
            dfs(e.to);
            scalars.pop_back();
        }
    };
    dfs(m);
    res.items.assign(seen.begin(), seen.end());

    if (res.status != EnumStatus::unbounded) {
        bool longer_exists = false;
        // In the acyclic case walks are bounded by the node count; a walk
        // longer than max_len to a valid tail means the listing is cut off.
        if (max_len < static_cast<int>(M.size())) {
            std::function<bool(Elem, int)> probe = [&](Elem v, int depth) {
                if (depth > max_len && tail_ok(v)) return true;
                if (depth >= static_cast<int>(M.size())) return false;
                for (const auto& e : adj[v])
                    if (probe(e.to, depth + 1)) return true;
                return false;
            };
            longer_exists = probe(m, 0);
        }
        if (hit_item_cap || longer_exists) res.status = EnumStatus::truncated;
    }
    return res;
}

std::vector<std::vector<std::size_t>> group_up_to_iso(
    const std::vector<Factorization>& fs, const Module& M, const SatSet& S) {
    const Ring& R = *M.ring();
    auto s_rep = [&](Elem t) {
        for (Elem n = 0; n <= t; ++n)
            if (associates(M, S, t, n, AssocKind::assoc)) return n;
        return t;
    };
    std::map<std::tuple<int, std::vector<Elem>, Elem>, std::vector<std::size_t>>
        buckets;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        std::vector<Elem> cls;
        cls.reserve(fs[i].scalars.size());
        for (Elem s : fs[i].scalars) cls.push_back(R.assoc_class_rep(s));
        std::sort(cls.begin(), cls.end());
        buckets[{fs[i].length(), std::move(cls), s_rep(fs[i].tail)}].push_back(i);
    }
    std::vector<std::vector<std::size_t>> out;
    out.reserve(buckets.size());
    for (auto& [key, idx] : buckets) out.push_back(std::move(idx));
    return out;
}

std::optional<PresimpWitness> presimp_violation(const Module& M, const SatSet& S) {
    const Ring& R = *M.ring();
    for (Elem s : S.elements()) {
        if (R.is_unit(s)) continue;
        for (Elem m = 0; m < M.size(); ++m)
            if (m != M.zero() && M.act(s, m) == m)
                return PresimpWitness{s, m};
    }
    return std::nullopt;
}

bool element_presimplifiable(const Module& M, const SatSet& S, Elem m) {
    (void)S;
    if (m == M.zero()) return true;
    const Ring& R = *M.ring();
    for (Elem r = 0; r < R.size(); ++r)
        if (M.act(r, m) == m && !R.is_unit(r)) return false;
    return true;
}

bool ClassReport::property(Property p) const {
    switch (p) {
        case Property::presimplifiable: return presimplifiable;
        case Property::atomic: return atomic[0][0];
        case Property::bounded: return bfm;
        case Property::half_factorial: return hfm;
        case Property::finite_factorization: return ffm;
        case Property::unique_factorization: return ufm;
    }
    return false;
}

nlohmann::json ClassReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["presimplifiable"] = presimplifiable;
    if (presimp_witness)
        j["presimplifiable_witness"] = {{"s", presimp_witness->s},
                                        {"m", presimp_witness->m}};
    nlohmann::json at = nlohmann::json::object();
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            std::string key = std::string(to_string(kIrrKinds[a])) + "," +
                              to_string(kPrimKinds[b]);
            at[key] = atomic[a][b];
            if (!atomic[a][b] && atomic_witness[a][b] >= 0)
                at[key + "_witness"] = atomic_witness[a][b];
        }
    j["atomic"] = at;
    j["bfm"] = bfm;
    if (!bfm_cycle.empty()) j["bfm_cycle"] = bfm_cycle;
    j["ffm"] = ffm;
    if (ffm_witness >= 0) j["ffm_witness"] = ffm_witness;
    j["hfm"] = hfm;
    if (hfm_witness >= 0) {
        j["hfm_witness"] = hfm_witness;
        j["hfm_lengths"] = hfm_lengths;
    }
    j["ufm"] = ufm;
    if (ufm_witness >= 0) j["ufm_witness"] = ufm_witness;
    return j;
}

ClassReport classify(const Module& M, const SatSet& S) {
    ClassReport rep;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) rep.atomic_witness[a][b] = -1;

    FactorAnalysis fa(M, S);

    rep.presimp_witness = presimp_violation(M, S);
    rep.presimplifiable = !rep.presimp_witness.has_value();

    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            rep.atomic[a][b] = true;
            for (Elem m = 0; m < M.size(); ++m) {
                if (m == M.zero()) continue;
                if (!fa.atomic(m, kIrrKinds[a], kPrimKinds[b])) {
                    rep.atomic[a][b] = false;
                    rep.atomic_witness[a][b] = m;
                    break;
                }
            }
        }

    rep.bfm = true;
    for (Elem m = 0; m < M.size() && rep.bfm; ++m) {
        if (m == M.zero()) continue;
        if (!fa.bounded(m)) {
            rep.bfm = false;
            rep.bfm_cycle = fa.cycle_from(m);
        }
    }

    const bool atomic_default = rep.atomic[0][0];
    rep.ffm = atomic_default;
    rep.hfm = atomic_default;
    rep.ufm = atomic_default;
    for (Elem m = 0; m < M.size() && atomic_default; ++m) {
        if (m == M.zero()) continue;
        auto lengths =
            fa.atomic_lengths(m, IrrKind::irreducible, PrimKind::primitive);
        if (!lengths) {
            if (rep.ffm) {
                rep.ffm = false;
                rep.ffm_witness = m;
            }
            if (rep.hfm) {
                rep.hfm = false;
                rep.hfm_witness = m;
            }
            if (rep.ufm) {
                rep.ufm = false;
                rep.ufm_witness = m;
            }
            continue;
        }
        if (lengths->size() != 1 && rep.hfm) {
            rep.hfm = false;
            rep.hfm_witness = m;
            rep.hfm_lengths = *lengths;
        }
        if (rep.ufm) {
            auto c = fa.iso_class_count(m);
            if (!c || *c != 1) {
                rep.ufm = false;
                rep.ufm_witness = m;
            }
        }
    }
    return rep;
}

}  // namespace factorlab
