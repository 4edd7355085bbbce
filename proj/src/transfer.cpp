#include "factorlab/transfer.hpp"

#include <algorithm>
#include <cstdio>

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

bool in_set(const std::vector<Elem>& v, Elem x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

/// Every nonzero element has an (alpha,beta)-atomic factorization.
bool module_atomic(const FactorAnalysis& fa, IrrKind alpha, PrimKind beta,
                   Elem* witness = nullptr) {
    const Module& M = fa.module();
    for (Elem m = 0; m < M.size(); ++m) {
        if (m == M.zero()) continue;
        if (!fa.atomic(m, alpha, beta)) {
            if (witness) *witness = m;
            return false;
        }
    }
    return true;
}

}  // namespace

TransferInstance::TransferInstance(ModulePtr m, SatSet s, SatSet sp)
    : mod(std::move(m)), S(std::move(s)), Sprime(std::move(sp)) {}

TransferInstance TransferInstance::build(const ModulePtr& mod, SatSet S,
                                         SatSet Sprime) {
    if (!S.is_subset_of(Sprime)) throw Error("not_nested", "S must lie in S'");
    TransferInstance inst(mod, std::move(S), std::move(Sprime));
    const auto& R = mod->ring();

    inst.ann = mod->ann_of_subset(mod->carrier());
    for (Elem a : inst.Sprime.elements())
        if (!in_set(inst.ann, a)) inst.E.push_back(a);

    auto vm = analyze_subset(*mod, inst.S, mod->carrier());
    inst.s_splits_m = vm.splits;
    inst.semi_factorable = vm.semi_factorable;

    auto zm = mod->zero_divisors(mod->carrier());
    inst.s_avoids_zm = true;
    for (Elem a : inst.S.elements())
        if (in_set(zm, a)) inst.s_avoids_zm = false;

    auto zr = inst.reg()->zero_divisors(inst.reg()->carrier());
    inst.s_avoids_zr = true;
    for (Elem a : inst.S.elements())
        if (in_set(zr, a)) inst.s_avoids_zr = false;

    auto ve = analyze_subset(*inst.reg(), inst.S, inst.E);
    inst.e_compactly_atomic = ve.compactly_atomic;
    inst.s_splits_e = ve.splits;
    (void)R;
    return inst;
}

const ModulePtr& TransferInstance::reg() const {
    if (!reg_) reg_ = Module::regular(mod->ring());
    return reg_;
}

const LocalizedRing& TransferInstance::RS() const {
    if (!rs_)
        rs_ = std::make_shared<LocalizedRing>(
            LocalizedRing::build(mod->ring(), S));
    return *rs_;
}

const LocalizedModule& TransferInstance::MS() const {
    if (!ms_)
        ms_ = std::make_shared<LocalizedModule>(LocalizedModule::build(mod, RS()));
    return *ms_;
}

const SatSet& TransferInstance::T() const {
    if (!t_) t_ = std::make_shared<SatSet>(induce_T(RS(), Sprime));
    return *t_;
}

const ClassReport& TransferInstance::classify_s() const {
    if (!cls_s_) cls_s_ = std::make_shared<ClassReport>(classify(*mod, S));
    return *cls_s_;
}

const ClassReport& TransferInstance::classify_sprime() const {
    if (!cls_sp_) cls_sp_ = std::make_shared<ClassReport>(classify(*mod, Sprime));
    return *cls_sp_;
}

const ClassReport& TransferInstance::classify_loc() const {
    if (!cls_loc_)
        cls_loc_ = std::make_shared<ClassReport>(classify(*MS().module(), T()));
    return *cls_loc_;
}

const FactorAnalysis& TransferInstance::fa_s() const {
    if (!fa_s_) fa_s_ = std::make_shared<FactorAnalysis>(*mod, S);
    return *fa_s_;
}

const FactorAnalysis& TransferInstance::fa_sprime() const {
    if (!fa_sp_) fa_sp_ = std::make_shared<FactorAnalysis>(*mod, Sprime);
    return *fa_sp_;
}

const FactorAnalysis& TransferInstance::fa_loc() const {
    if (!fa_loc_)
        fa_loc_ = std::make_shared<FactorAnalysis>(*MS().module(), T());
    return *fa_loc_;
}

nlohmann::json TransferInstance::to_json() const {
    return {{"ring", mod->ring()->to_json()},
            {"module", mod->to_json()},
            {"S", S.to_json()},
            {"Sprime", Sprime.to_json()}};
}

std::string TransferInstance::id() const { return fnv1a_hex(to_json().dump()); }

CheckReport check_prop_irr(const TransferInstance& inst, Elem r, IrrKind alpha) {
    const auto& R = inst.mod->ring();
    if (r < 0 || r >= R->size()) throw Error("bad_element", "r out of range");
    CheckReport rep;
    rep.name = "prop_irr";
    rep.instance = inst.to_json();
    rep.instance["r"] = r;
    rep.instance["alpha"] = to_string(alpha);

    bool admissible = in_set(inst.E, r) && !inst.S.contains(r);
    auto pairs = admissible ? compact_factorizations(*inst.reg(), inst.S, r)
                            : std::vector<CompactPair>{};
    rep.hypotheses = {{"s_splits_e", inst.s_splits_e},
                      {"s_avoids_zm", inst.s_avoids_zm},
                      {"s_avoids_zr", inst.s_avoids_zr},
                      {"r_in_e_minus_s", admissible},
                      {"has_compact", !pairs.empty()}};
    bool all = true;
    for (const auto& [k, v] : rep.hypotheses) all = all && v;
    if (all) {
        Elem rbar = inst.RS().map_to(r);
        bool rbar_nonunit = !inst.RS().ring()->is_unit(rbar);
        rep.conclusions.push_back({"rbar_nonunit", rbar_nonunit});
        if (rbar_nonunit) {
            bool lhs = is_irreducible(*inst.RS().ring(), rbar, alpha);
            bool a_nonunit = true, equiv = true;
            for (auto [s, a] : pairs) {
                if (R->is_unit(a)) {
                    a_nonunit = false;
                    rep.witnesses.push_back({{"r", r}, {"s", s}, {"a", a}});
                    continue;
                }
                bool rhs = is_irreducible(*R, a, alpha);
                if (lhs != rhs) {
                    equiv = false;
                    rep.witnesses.push_back({{"r", r},
                                             {"s", s},
                                             {"a", a},
                                             {"rbar_alpha", lhs},
                                             {"a_alpha", rhs}});
                }
            }
            rep.conclusions.push_back({"a_nonunit", a_nonunit});
            rep.conclusions.push_back({"equivalence", equiv});
        } else {
            rep.witnesses.push_back({{"r", r}, {"rbar", rbar}});
        }
    }
    rep.settle();
    return rep;
}

CheckReport check_prop_irr_all(const TransferInstance& inst) {
    CheckReport rep;
    rep.name = "prop_irr";
    rep.instance = inst.to_json();
    rep.hypotheses = {{"s_splits_e", inst.s_splits_e},
                      {"s_avoids_zm", inst.s_avoids_zm},
                      {"s_avoids_zr", inst.s_avoids_zr}};
    bool base = inst.s_splits_e && inst.s_avoids_zm && inst.s_avoids_zr;
    bool any = false;
    if (base) {
        bool ok = true;
        for (Elem r : inst.E) {
            if (inst.S.contains(r)) continue;
            for (IrrKind alpha : kIrrKinds) {
                auto sub = check_prop_irr(inst, r, alpha);
                if (sub.status == CheckStatus::vacuous) continue;
                any = true;
                if (sub.status == CheckStatus::violation) {
                    ok = false;
                    for (auto& w : sub.witnesses) rep.witnesses.push_back(w);
                }
            }
        }
        rep.hypotheses.push_back({"has_admissible_r", any});
        if (any) rep.conclusions.push_back({"equivalence", ok});
    }
    rep.settle();
    return rep;
}

CheckReport check_prop_prim(const TransferInstance& inst, Elem m, PrimKind beta) {
    if (m < 0 || m >= inst.mod->size() || m == inst.mod->zero())
        throw Error("bad_element", "m must be a nonzero module element");
    CheckReport rep;
    rep.name = "prop_prim";
    rep.instance = inst.to_json();
    rep.instance["m"] = m;
    rep.instance["beta"] = to_string(beta);

    auto pairs = compact_factorizations(*inst.mod, inst.S, m);
    rep.hypotheses = {{"s_splits_m", inst.s_splits_m},
                      {"s_avoids_zm", inst.s_avoids_zm},
                      {"e_compactly_atomic", inst.e_compactly_atomic},
                      {"has_compact", !pairs.empty()}};
    bool all = true;
    for (const auto& [k, v] : rep.hypotheses) all = all && v;
    if (all) {
        Elem mbar = inst.MS().map_to(m);
        bool lhs = is_primitive(*inst.MS().module(), inst.T(), mbar, beta);
        bool equiv = true;
        for (auto [s, n] : pairs) {
            bool rhs = is_primitive(*inst.mod, inst.Sprime, n, beta);
            if (lhs != rhs) {
                equiv = false;
                rep.witnesses.push_back({{"m", m},
                                         {"s", s},
                                         {"n", n},
                                         {"mbar_T_beta", lhs},
                                         {"n_Sprime_beta", rhs}});
            }
        }
        rep.conclusions.push_back({"equivalence", equiv});
    }
    rep.settle();
    return rep;
}

CheckReport check_prop_prim_all(const TransferInstance& inst) {
    CheckReport rep;
    rep.name = "prop_prim";
    rep.instance = inst.to_json();
    rep.hypotheses = {{"s_splits_m", inst.s_splits_m},
                      {"s_avoids_zm", inst.s_avoids_zm},
                      {"e_compactly_atomic", inst.e_compactly_atomic}};
    bool base = inst.s_splits_m && inst.s_avoids_zm && inst.e_compactly_atomic;
    if (base) {
        bool ok = true, any = false;
        for (Elem m = 0; m < inst.mod->size(); ++m) {
            if (m == inst.mod->zero()) continue;
            for (PrimKind beta : kPrimKinds) {
                auto sub = check_prop_prim(inst, m, beta);
                if (sub.status == CheckStatus::vacuous) continue;
                any = true;
                if (sub.status == CheckStatus::violation) {
                    ok = false;
                    for (auto& w : sub.witnesses) rep.witnesses.push_back(w);
                }
            }
        }
        rep.hypotheses.push_back({"has_admissible_m", any});
        if (any) rep.conclusions.push_back({"equivalence", ok});
    }
    rep.settle();
    return rep;
}

CheckReport check_lemmas(const TransferInstance& inst) {
    const auto& R = inst.mod->ring();
    const Module& M = *inst.mod;
    CheckReport rep;
    rep.name = "lemmas";
    rep.instance = inst.to_json();

    // elements of S' \ (S u Ann(M)) that are irreducible, and nonzero
    // S'-primitive module elements: the lemma's standing cast
    std::vector<Elem> ys;
    for (Elem y : inst.E)
        if (!inst.S.contains(y) && is_irreducible(*R, y, IrrKind::irreducible))
            ys.push_back(y);
    std::vector<Elem> prims;
    for (Elem m = 0; m < M.size(); ++m)
        if (m != M.zero() && is_primitive(M, inst.Sprime, m, PrimKind::primitive))
            prims.push_back(m);

    rep.hypotheses = {{"semi_factorable", inst.semi_factorable},
                      {"s_splits_m", inst.s_splits_m},
                      {"s_avoids_zm", inst.s_avoids_zm},
                      {"s_avoids_zr", inst.s_avoids_zr},
                      {"e_compactly_atomic", inst.e_compactly_atomic},
                      {"exists_irreducible_sprime", !ys.empty()},
                      {"exists_sprime_primitive", !prims.empty()}};

    bool cast = !ys.empty() && !prims.empty();

    // Lem "primitivity descends", module part: under semi-factorability
    // every nonzero S'-primitive element is S-primitive.
    if (inst.semi_factorable && cast) {
        bool ok = true;
        for (Elem m : prims)
            if (!is_primitive(M, inst.S, m, PrimKind::primitive)) {
                ok = false;
                rep.witnesses.push_back({{"lemma", "prim_descends_m"}, {"m", m}});
            }
        rep.conclusions.push_back({"sprime_primitive_is_s_primitive", ok});
    }
    // ring part: under splitting + compact atomicity of E, every irreducible
    // of S' \ (S u Ann(M)) is S-primitive in R.
    if (inst.s_splits_m && inst.e_compactly_atomic && cast) {
        bool ok = true;
        for (Elem y : ys)
            if (!is_primitive(*inst.reg(), inst.S, y, PrimKind::primitive)) {
                ok = false;
                rep.witnesses.push_back({{"lemma", "prim_descends_y"}, {"y", y}});
            }
        rep.conclusions.push_back({"irreducible_sprime_is_s_primitive", ok});
    }

    // Lem "S'-UF/HF/FF force S-BF" plus its compact-atomicity tail.
    if (inst.semi_factorable && inst.s_avoids_zm) {
        const auto& cp = inst.classify_sprime();
        bool upper = cp.ufm || cp.hfm || cp.ffm;
        rep.hypotheses.push_back({"sprime_uf_hf_ff", upper});
        if (upper) rep.conclusions.push_back({"s_bfm", inst.classify_s().bfm});
        bool sbfm = inst.classify_s().bfm;
        rep.hypotheses.push_back({"s_bfm_hyp", sbfm});
        if (sbfm) {
            std::vector<Elem> full;
            for (Elem a = 0; a < R->size(); ++a)
                if (!in_set(inst.ann, a)) full.push_back(a);
            auto v = analyze_subset(*inst.reg(), inst.S, full);
            rep.conclusions.push_back(
                {"r_minus_ann_compactly_atomic", v.compactly_atomic});
        }
    }

    // Lem "iso": associate classes transfer between the two sides.
    bool iso_hyp = inst.s_splits_m && inst.e_compactly_atomic &&
                   inst.s_avoids_zm && inst.s_avoids_zr;
    if (iso_hyp && !ys.empty()) {
        bool ok = true;
        const auto& RSr = inst.RS();
        for (Elem y1 : ys)
            for (Elem y2 : ys) {
                bool loc = RSr.ring()->associated(RSr.map_to(y1), RSr.map_to(y2));
                bool base_assoc = R->associated(y1, y2);
                if (loc != base_assoc) {
                    ok = false;
                    rep.witnesses.push_back(
                        {{"lemma", "iso_ring"}, {"y1", y1}, {"y2", y2}});
                }
            }
        rep.conclusions.push_back({"ring_assoc_transfer", ok});
    }
    if (iso_hyp && !prims.empty()) {
        bool ok = true;
        const auto& MSm = inst.MS();
        for (Elem m1 : prims)
            for (Elem m2 : prims) {
                bool loc = associates(*MSm.module(), inst.T(), MSm.map_to(m1),
                                      MSm.map_to(m2), AssocKind::assoc);
                bool base_assoc =
                    associates(M, inst.Sprime, m1, m2, AssocKind::assoc);
                if (loc != base_assoc) {
                    ok = false;
                    rep.witnesses.push_back(
                        {{"lemma", "iso_module"}, {"m1", m1}, {"m2", m2}});
                }
            }
        rep.conclusions.push_back({"module_assoc_transfer", ok});
    }

    rep.settle();
    return rep;
}

CheckReport check_thm_atomic(const TransferInstance& inst, IrrKind alpha,
                             PrimKind beta) {
    CheckReport rep;
    rep.name = "thm_atomic";
    rep.instance = inst.to_json();
    rep.instance["alpha"] = to_string(alpha);
    rep.instance["beta"] = to_string(beta);
    rep.hypotheses = {{"s_splits_m", inst.s_splits_m},
                      {"e_compactly_atomic", inst.e_compactly_atomic},
                      {"s_avoids_zm", inst.s_avoids_zm},
                      {"s_avoids_zr", inst.s_avoids_zr}};
    if (inst.s_splits_m && inst.e_compactly_atomic) {
        Elem w = -1;
        bool sprime_atomic = module_atomic(inst.fa_sprime(), alpha, beta);
        rep.hypotheses.push_back({"sprime_atomic", sprime_atomic});
        if (sprime_atomic) {
            bool down = module_atomic(inst.fa_s(), alpha,
                                      PrimKind::very_strongly_primitive, &w);
            if (!down) rep.witnesses.push_back({{"part", 1}, {"m", w}});
            rep.conclusions.push_back({"s_atomic_very_strong", down});
        }
        if (inst.s_avoids_zm && inst.s_avoids_zr) {
            bool s_side =
                module_atomic(inst.fa_s(), alpha, PrimKind::primitive, &w);
            bool loc_side = module_atomic(inst.fa_loc(), alpha, beta, &w);
            bool equiv = sprime_atomic == (s_side && loc_side);
            if (!equiv)
                rep.witnesses.push_back({{"part", 3},
                                         {"sprime_atomic", sprime_atomic},
                                         {"s_atomic", s_side},
                                         {"loc_atomic", loc_side}});
            rep.conclusions.push_back({"part3_equivalence", equiv});
        }
    }
    rep.settle();
    return rep;
}

CheckReport check_transfer(const TransferInstance& inst, Property p) {
    CheckReport rep;
    rep.name = "transfer";
    rep.instance = inst.to_json();
    rep.instance["property"] = to_string(p);
    rep.hypotheses = {{"semi_factorable", inst.semi_factorable},
                      {"s_splits_m", inst.s_splits_m},
                      {"s_avoids_zm", inst.s_avoids_zm},
                      {"s_avoids_zr", inst.s_avoids_zr},
                      {"e_compactly_atomic", inst.e_compactly_atomic}};

    bool p_sprime = inst.classify_sprime().property(p);
    bool p_s = inst.classify_s().property(p);
    rep.hypotheses.push_back({"m_has_p_sprime", p_sprime});

    // Thm "S'-P=>S-P"; presimplifiability and boundedness descend with no
    // side conditions, the rest need semi-factorability and S cap Z(M) empty.
    if (p != Property::atomic) {
        bool guard = (p == Property::presimplifiable || p == Property::bounded)
                         ? true
                         : (inst.semi_factorable && inst.s_avoids_zm);
        if (guard && p_sprime) {
            if (!p_s)
                rep.witnesses.push_back(
                    {{"direction", "sprime_implies_s"}, {"s_side", p_s}});
            rep.conclusions.push_back({"sprime_implies_s", p_s});
        }
    }

    // Main corollary: needs S splitting M and S away from both zero-divisor
    // sets; presimplifiability and atomicity additionally need E compactly
    // S-atomic.
    bool extra = (p == Property::presimplifiable || p == Property::atomic)
                     ? inst.e_compactly_atomic
                     : true;
    if (inst.s_splits_m && inst.s_avoids_zm && inst.s_avoids_zr && extra) {
        bool p_loc = inst.classify_loc().property(p);
        std::vector<Elem> s_minus_ann;
        for (Elem a : inst.S.elements())
            if (!in_set(inst.ann, a)) s_minus_ann.push_back(a);
        bool p_ring = ring_has_property_in(inst.mod->ring(), s_minus_ann, p);

        bool eq12 = p_sprime == (p_s && p_loc);
        bool eq13 = p_sprime == (p_ring && p_loc);
        if (!eq12 || !eq13)
            rep.witnesses.push_back({{"p_sprime", p_sprime},
                                     {"p_s", p_s},
                                     {"p_loc", p_loc},
                                     {"p_ring_in_s", p_ring}});
        rep.conclusions.push_back({"equiv_s_and_localized", eq12});
        rep.conclusions.push_back({"equiv_ring_side", eq13});
    }
    rep.settle();
    return rep;
}

}  // namespace factorlab
