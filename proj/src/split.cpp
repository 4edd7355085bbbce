#include "factorlab/split.hpp"

#include <algorithm>
#include <set>

namespace factorlab {

std::vector<CompactPair> compact_factorizations(const Module& M, const SatSet& S,
                                                Elem m) {
    if (m == M.zero())
        throw Error("invalid_argument",
                    "compact factorizations are defined for nonzero elements");
    std::vector<CompactPair> out;
    for (Elem s : S.elements())
        for (Elem n = 0; n < M.size(); ++n)
            if (M.act(s, n) == m && is_primitive(M, S, n, PrimKind::primitive))
                out.push_back({s, n});
    return out;
}

SplitVerdict analyze_subset(const Module& M, const SatSet& S,
                            const std::vector<Elem>& E) {
    SplitVerdict v;
    std::set<Elem> es;
    for (Elem m : E) {
        if (m < 0 || m >= M.size())
            throw Error("invalid_argument", "subset element out of range");
        es.insert(m);
    }
    v.E.assign(es.begin(), es.end());

    const Ring& R = *M.ring();
    v.compactly_atomic = true;
    v.semi_factorable = true;
    v.factorable = true;
    for (Elem m : v.E) {
        if (m == M.zero()) continue;
        auto pairs = compact_factorizations(M, S, m);
        if (pairs.empty()) {
            v.compactly_atomic = false;
            if (v.no_compact_witness < 0) v.no_compact_witness = m;
            continue;
        }
        for (size_t i = 0; i < pairs.size(); ++i)
            for (size_t j = i + 1; j < pairs.size(); ++j) {
                if (!R.associated(pairs[i].s, pairs[j].s)) {
                    v.semi_factorable = false;
                    if (!v.semi_witness)
                        v.semi_witness = {m, pairs[i], pairs[j]};
                }
                if (!associates(M, S, pairs[i].n, pairs[j].n,
                                AssocKind::assoc)) {
                    v.factorable = false;
                    if (!v.fact_witness)
                        v.fact_witness = {m, pairs[i], pairs[j]};
                }
            }
    }
    v.semi_factorable = v.semi_factorable && v.compactly_atomic;
    v.factorable = v.factorable && v.semi_factorable;

    v.splits = v.semi_factorable;
    if (v.splits) {
        auto reg = Module::regular(M.ring());
        for (Elem r = 0; r < R.size() && v.splits; ++r) {
            if (!is_primitive(*reg, S, r, PrimKind::primitive)) continue;
            for (Elem m = 0; m < M.size(); ++m) {
                if (!is_primitive(M, S, m, PrimKind::primitive)) continue;
                Elem rm = M.act(r, m);
                if (rm == M.zero() || !es.count(rm)) continue;
                if (!is_primitive(M, S, rm, PrimKind::primitive)) {
                    v.splits = false;
                    v.split_witness = SplitVerdict::SplitClash{r, m};
                    break;
                }
            }
        }
    }
    return v;
}

nlohmann::json SplitVerdict::to_json() const {
    nlohmann::json j = {{"schema_version", 1},
                        {"E", E},
                        {"compactly_atomic", compactly_atomic},
                        {"semi_factorable", semi_factorable},
                        {"factorable", factorable},
                        {"splits", splits}};
    if (no_compact_witness >= 0) j["no_compact_witness"] = no_compact_witness;
    auto clash = [](const PairClash& c) {
        return nlohmann::json{{"m", c.m},
                              {"first", {c.a.s, c.a.n}},
                              {"second", {c.b.s, c.b.n}}};
    };
    if (semi_witness) j["semi_witness"] = clash(*semi_witness);
    if (fact_witness) j["fact_witness"] = clash(*fact_witness);
    if (split_witness)
        j["split_witness"] = {{"r", split_witness->r}, {"m", split_witness->m}};
    return j;
}

bool ring_has_property_in(const RingPtr& R, const std::vector<Elem>& E,
                          Property p) {
    auto reg = Module::regular(R);
    auto full = SatSet::full(R);
    FactorAnalysis fa(*reg, full);
    for (Elem a : E) {
        if (a == R->zero() || R->is_unit(a)) continue;
        if (!fa.element_has_property(a, p)) return false;
    }
    return true;
}

namespace {

std::vector<Elem> s_minus(const SatSet& S, const std::set<Elem>& excluded) {
    std::vector<Elem> out;
    for (Elem s : S.elements())
        if (!excluded.count(s)) out.push_back(s);
    return out;
}

std::set<Elem> as_set(const std::vector<Elem>& v) {
    return {v.begin(), v.end()};
}

bool s_avoids(const SatSet& S, const std::set<Elem>& bad) {
    for (Elem s : S.elements())
        if (bad.count(s)) return false;
    return true;
}

}  // namespace

CheckReport check_prop_semi_elem(const Module& M, const SatSet& S) {
    CheckReport rep;
    rep.name = "prop_semi_elem";
    rep.instance = instance_json(M, S);

    auto v = analyze_subset(M, S, M.carrier());
    auto zm = as_set(M.zero_divisors(M.carrier()));
    bool zm_ok = s_avoids(S, zm);
    rep.hypotheses = {{"semi_factorable", v.semi_factorable},
                      {"s_avoids_zm", zm_ok}};
    if (!v.semi_factorable) {
        rep.settle();
        return rep;
    }

    const Ring& R = *M.ring();
    bool c1 = true;
    for (Elem m = 0; m < M.size() && c1; ++m) {
        if (!is_primitive(M, S, m, PrimKind::primitive)) continue;
        if (!associates(M, S, m, m, AssocKind::very_strong) ||
            !is_primitive(M, S, m, PrimKind::very_strongly_primitive)) {
            c1 = false;
            rep.witnesses.push_back({{"claim", "primitive_very_strong"},
                                     {"m", m}});
        }
    }
    rep.conclusions.push_back({"primitive_very_strong", c1});

    if (zm_ok) {
        rep.conclusions.push_back({"factorable", v.factorable});
        if (!v.factorable && v.fact_witness)
            rep.witnesses.push_back({{"claim", "factorable"},
                                     {"m", v.fact_witness->m}});
    }

    auto e = s_minus(S, zm);
    bool pre = true, irr_eq = true, assoc_eq = true;
    for (Elem a : e) {
        for (Elem r = 0; r < R.size() && pre; ++r)
            if (R.mul(r, a) == a && !R.is_unit(r)) {
                pre = false;
                rep.witnesses.push_back(
                    {{"claim", "pre_in_s_minus_zm"}, {"a", a}, {"r", r}});
            }
        if (!R.is_unit(a)) {
            bool i0 = is_irreducible(R, a, IrrKind::irreducible);
            bool i1 = is_irreducible(R, a, IrrKind::strongly_irreducible);
            bool i2 = is_irreducible(R, a, IrrKind::very_strongly_irreducible);
            if (i0 != i1 || i1 != i2) {
                irr_eq = false;
                rep.witnesses.push_back(
                    {{"claim", "irr_flavors_coincide"}, {"a", a}});
            }
        }
        for (Elem b : e) {
            bool a0 = ring_associated(R, a, b, AssocKind::assoc);
            bool a1 = ring_associated(R, a, b, AssocKind::strong);
            bool a2 = ring_associated(R, a, b, AssocKind::very_strong);
            if (a0 != a1 || a1 != a2) {
                assoc_eq = false;
                rep.witnesses.push_back(
                    {{"claim", "assoc_flavors_coincide"}, {"a", a}, {"b", b}});
            }
        }
    }
    rep.conclusions.push_back({"pre_in_s_minus_zm", pre});
    rep.conclusions.push_back({"irr_flavors_coincide", irr_eq});
    rep.conclusions.push_back({"assoc_flavors_coincide", assoc_eq});
    rep.settle();
    return rep;
}

CheckReport check_thm_SX(const Module& M, const SatSet& S, Property p) {
    CheckReport rep;
    rep.name = "thm_SX";
    rep.instance = instance_json(M, S);
    rep.instance["property"] = to_string(p);

    auto v = analyze_subset(M, S, M.carrier());
    auto zm = as_set(M.zero_divisors(M.carrier()));
    bool zm_ok = s_avoids(S, zm);

    auto ann = as_set(M.ann_of_subset(M.carrier()));
    auto e = s_minus(S, ann);

    bool m_side = classify(M, S).property(p);
    bool r_side = ring_has_property_in(M.ring(), e, p);
    bool r_pre_in_e =
        ring_has_property_in(M.ring(), e, Property::presimplifiable);

    rep.hypotheses = {{"semi_factorable", v.semi_factorable},
                      {"s_avoids_zm", zm_ok},
                      {"r_pre_in_E", r_pre_in_e},
                      {"factorable", v.factorable}};

    auto note = [&](const char* claim) {
        rep.witnesses.push_back({{"claim", claim},
                                 {"module_side", m_side},
                                 {"ring_side", r_side}});
    };

    if (v.semi_factorable && zm_ok) {
        rep.conclusions.push_back({"equivalence", m_side == r_side});
        if (m_side != r_side) note("equivalence");
    }

    // Remark weakenings, each under its own hypotheses.
    const bool fwd_unconditional =
        p == Property::bounded || p == Property::presimplifiable;
    if (fwd_unconditional || (v.semi_factorable && r_pre_in_e)) {
        bool ok = !m_side || r_side;
        rep.conclusions.push_back({"module_implies_ring", ok});
        if (!ok) note("module_implies_ring");
    }
    const bool bwd_semi_only =
        p == Property::presimplifiable || p == Property::atomic ||
        p == Property::half_factorial || p == Property::bounded;
    if ((bwd_semi_only && v.semi_factorable) ||
        (!bwd_semi_only && v.factorable)) {
        bool ok = !r_side || m_side;
        rep.conclusions.push_back({"ring_implies_module", ok});
        if (!ok) note("ring_implies_module");
    }
    rep.settle();
    return rep;
}

CheckReport check_cor_split_pre(const Module& M, const SatSet& S) {
    CheckReport rep;
    rep.name = "cor_split_pre";
    rep.instance = instance_json(M, S);

    auto v = analyze_subset(M, S, M.carrier());
    auto zm = as_set(M.zero_divisors(M.carrier()));
    bool zm_ok = s_avoids(S, zm);
    rep.hypotheses = {{"semi_factorable", v.semi_factorable},
                      {"s_avoids_zm", zm_ok}};
    if (v.semi_factorable && zm_ok) {
        bool pre = is_presimplifiable(M, S);
        rep.conclusions.push_back({"s_presimplifiable", pre});
        if (!pre)
            if (auto w = presimp_violation(M, S))
                rep.witnesses.push_back({{"s", w->s}, {"m", w->m}});
    }
    rep.settle();
    return rep;
}

CheckReport check_splitting_equiv_domain(const RingPtr& R, const SatSet& S) {
    if (!R->is_domain())
        throw Error("not_domain", "splitting equivalence requires a domain");

    CheckReport rep;
    rep.name = "thm_R_split_eq_splitting";
    auto reg = Module::regular(R);
    rep.instance = instance_json(*reg, S);

    // Principal-ideal helpers on the finite carrier.
    auto ideal = [&](Elem a) {
        std::set<Elem> out;
        for (Elem x = 0; x < R->size(); ++x) out.insert(R->mul(x, a));
        return out;
    };
    auto star = [&](Elem r, const std::vector<Elem>& ts) {
        for (Elem t : ts) {
            auto ir = ideal(r), it = ideal(t), itr = ideal(R->mul(t, r));
            std::set<Elem> inter;
            std::set_intersection(ir.begin(), ir.end(), it.begin(), it.end(),
                                  std::inserter(inter, inter.begin()));
            if (inter != itr) return false;
        }
        return true;
    };

    std::vector<Elem> all(R->size());
    for (Elem x = 0; x < R->size(); ++x) all[x] = x;

    bool d2 = true;
    for (Elem x = 0; x < R->size() && d2; ++x) {
        bool found = false;
        for (Elem s : S.elements()) {
            for (Elem a = 0; a < R->size(); ++a)
                if (R->mul(a, s) == x && star(a, all)) {
                    found = true;
                    break;
                }
            if (found) break;
        }
        d2 = found;
    }

    bool splits = analyze_subset(*reg, S, reg->carrier()).splits;
    rep.hypotheses = {{"domain", true}, {"d2_split", d2}};
    rep.conclusions.push_back({"equivalence", d2 == splits});

    if (d2 || splits) {
        bool agree = true;
        auto svals = S.elements();
        // 0 satisfies (*) vacuously but is never S-primitive
        for (Elem r = 0; r < R->size() && agree; ++r)
            if (r != R->zero() &&
                is_primitive(*reg, S, r, PrimKind::primitive) !=
                    star(r, svals)) {
                agree = false;
                rep.witnesses.push_back({{"claim", "star_iff_primitive"},
                                         {"r", r}});
            }
        rep.conclusions.push_back({"star_iff_primitive", agree});
    }
    rep.settle();
    return rep;
}

CheckReport check_prop_M_split(const Module& M, const SatSet& S,
                               const SatSet& Sprime) {
    CheckReport rep;
    rep.name = "prop_M_split";
    rep.instance = instance_json(M, S);
    rep.instance["Sprime"] = Sprime.to_json();

    bool splits_m = analyze_subset(M, S, M.carrier()).splits;

    auto ann = M.ann_of_subset(M.carrier());
    auto e = s_minus(Sprime, as_set(ann));
    auto reg = Module::regular(M.ring());
    auto ve = analyze_subset(*reg, S, e);

    rep.hypotheses = {{"s_splits_m", splits_m},
                      {"e_compactly_atomic", ve.compactly_atomic}};
    if (splits_m && ve.compactly_atomic) {
        rep.conclusions.push_back({"s_splits_e", ve.splits});
        if (!ve.splits) rep.witnesses.push_back(ve.to_json());
        if (Sprime.is_full()) {
            auto quot = Module::quotient(reg, ann);
            auto vq = analyze_subset(*quot, S, quot->carrier());
            rep.conclusions.push_back({"s_splits_quotient", vq.splits});
            if (!vq.splits) rep.witnesses.push_back(vq.to_json());
        }
    }
    rep.settle();
    return rep;
}

}  // namespace factorlab
