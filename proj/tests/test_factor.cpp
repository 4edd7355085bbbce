#include <doctest.h>

#include <set>

#include "factorlab/factor.hpp"
#include "oracle.hpp"

using namespace factorlab;

namespace {

std::set<Factorization> item_set(const EnumResult& r) {
    return {r.items.begin(), r.items.end()};
}

// The standing example: Z/6 as a module over itself, S = sat{2} = {1,2,4,5}.
struct Z6Sat2 {
    RingPtr ring = Ring::zmod(6);
    ModulePtr mod = Module::regular(ring);
    SatSet S = SatSet::saturate(ring, {2});
};

struct Instance {
    ModulePtr mod;
    SatSet S;
};

std::vector<Instance> small_instances() {
    std::vector<Instance> out;
    auto push_all = [&](const ModulePtr& m) {
        for (const auto& s : all_satsets(m->ring())) out.push_back({m, s});
    };
    auto z6 = Ring::zmod(6);
    push_all(Module::regular(z6));
    push_all(Module::zmod_over(3, z6));
    auto z4 = Ring::zmod(4);
    push_all(Module::regular(z4));
    push_all(Module::zmod_over(2, z4));
    push_all(Module::regular(Ring::gf_quotient(2, {1, 1, 1})));
    return out;
}

}  // namespace

TEST_CASE("associate flavors in Z/6 with S = sat{2}") {
    Z6Sat2 t;
    CHECK(associates(*t.mod, t.S, 2, 4, AssocKind::assoc));
    CHECK(associates(*t.mod, t.S, 2, 4, AssocKind::strong));  // 2 = 5*4
    CHECK_FALSE(associates(*t.mod, t.S, 2, 4, AssocKind::very_strong));
    CHECK(associates(*t.mod, t.S, 1, 5, AssocKind::strong));
    CHECK_FALSE(associates(*t.mod, t.S, 1, 3, AssocKind::assoc));
    for (Elem m = 0; m < 6; ++m)
        CHECK(associates(*t.mod, t.S, m, m, AssocKind::assoc));
}

TEST_CASE("primitivity in Z/6 with S = sat{2}") {
    Z6Sat2 t;
    std::set<Elem> prim;
    for (Elem m = 0; m < 6; ++m)
        if (is_primitive(*t.mod, t.S, m, PrimKind::primitive)) prim.insert(m);
    CHECK(prim == std::set<Elem>{1, 3, 5});
    CHECK(is_primitive(*t.mod, t.S, 3, PrimKind::very_strongly_primitive));
    CHECK_FALSE(is_primitive(*t.mod, t.S, 2, PrimKind::primitive));
    // 0 = 2*3 but 3 is not S-associated to 0
    CHECK_FALSE(is_primitive(*t.mod, t.S, 0, PrimKind::primitive));
}

TEST_CASE("very strong primitivity of 0 is ruled by nonunits in S") {
    // 0 = s.0 for every s, so the unit-scalar characterization makes 0
    // very strongly primitive exactly when S has no nonunit.
    for (const auto& inst : small_instances()) {
        const Module& M = *inst.mod;
        CHECK(is_primitive(M, inst.S, M.zero(),
                           PrimKind::very_strongly_primitive) ==
              !inst.S.has_nonunit());
    }
}

TEST_CASE("irreducibility in Z/6 and Z/4") {
    auto z6 = Ring::zmod(6);
    CHECK(is_irreducible(*z6, 2, IrrKind::irreducible));
    CHECK(is_irreducible(*z6, 3, IrrKind::irreducible));
    CHECK_THROWS_AS(is_irreducible(*z6, 5, IrrKind::irreducible), Error);

    auto z4 = Ring::zmod(4);
    CHECK(is_irreducible(*z4, 2, IrrKind::very_strongly_irreducible));
    CHECK_FALSE(is_irreducible(*z4, 0, IrrKind::very_strongly_irreducible));
}

TEST_CASE("deciders agree with the definitional scans") {
    for (const auto& inst : small_instances()) {
        const Module& M = *inst.mod;
        const Ring& R = *M.ring();
        for (Elem m = 0; m < M.size(); ++m) {
            for (Elem n = 0; n < M.size(); ++n) {
                CHECK(associates(M, inst.S, m, n, AssocKind::assoc) ==
                      oracle::s_assoc(M, inst.S, m, n));
                CHECK(associates(M, inst.S, m, n, AssocKind::strong) ==
                      oracle::s_strong_assoc(M, inst.S, m, n));
                CHECK(associates(M, inst.S, m, n, AssocKind::very_strong) ==
                      oracle::s_very_strong_assoc(M, inst.S, m, n));
            }
            // very strong flavor: unit-scalar shortcut vs the raw definition
            // (they part ways at m = 0, where 0 = s.0 always counts against
            // the shortcut; see the dedicated check below)
            for (auto k : kPrimKinds) {
                if (m == M.zero() && k == PrimKind::very_strongly_primitive)
                    continue;
                CHECK(is_primitive(M, inst.S, m, k) ==
                      oracle::prim(M, inst.S, m, k));
            }
        }
        for (Elem a = 0; a < R.size(); ++a) {
            if (R.is_unit(a)) continue;
            for (auto k : kIrrKinds)
                CHECK(is_irreducible(R, a, k) == oracle::irr(R, a, k));
        }
    }
}

TEST_CASE("the graph has a cycle through {2, 4} in Z/6 with S = sat{2}") {
    Z6Sat2 t;
    FactorAnalysis fa(*t.mod, t.S);
    CHECK_FALSE(fa.bounded(4));
    CHECK_FALSE(fa.bounded(2));
    CHECK(fa.bounded(3));
    CHECK(fa.bounded(1));
    auto cyc = fa.cycle_from(4);
    REQUIRE(cyc.size() >= 2);
    CHECK(cyc.front() == cyc.back());
    // every step of the reported cycle is a genuine edge
    for (size_t i = 0; i + 1 < cyc.size(); ++i) {
        bool edge = false;
        for (Elem s : t.S.elements())
            if (!t.ring->is_unit(s) && t.mod->act(s, cyc[i + 1]) == cyc[i])
                edge = true;
        CHECK(edge);
    }
}

TEST_CASE("enumerate: frozen Z/6 examples") {
    Z6Sat2 t;
    auto r4 = enumerate_factorizations(*t.mod, t.S, 4, EnumMode::All(), 4);
    CHECK(r4.status == EnumStatus::unbounded);
    CHECK_FALSE(r4.cycle.empty());

    auto r3 = enumerate_factorizations(*t.mod, t.S, 3, EnumMode::All(), 6);
    CHECK(r3.status == EnumStatus::complete);
    CHECK(item_set(r3) == std::set<Factorization>{{3, {}, 3}});

    auto rc = enumerate_factorizations(*t.mod, t.S, 4, EnumMode::Compact(), 1);
    CHECK(item_set(rc) ==
          std::set<Factorization>{{4, {4}, 1}, {4, {2}, 5}});
}

TEST_CASE("enumerate matches the recursive expansion of the definition") {
    for (const auto& inst : small_instances()) {
        const Module& M = *inst.mod;
        for (Elem m = 0; m < M.size(); ++m) {
            if (m == M.zero()) continue;
            auto ra = enumerate_factorizations(M, inst.S, m, EnumMode::All(), 4);
            CHECK(item_set(ra) ==
                  oracle::factorizations(M, inst.S, m, {}, 4));
            CHECK((ra.status == EnumStatus::unbounded) ==
                  oracle::unbounded(M, inst.S, m, {}));

            oracle::Mode am{true, IrrKind::irreducible, PrimKind::primitive};
            auto rb =
                enumerate_factorizations(M, inst.S, m, EnumMode::Atomic(), 4);
            CHECK(item_set(rb) == oracle::factorizations(M, inst.S, m, am, 4));
            CHECK((rb.status == EnumStatus::unbounded) ==
                  oracle::unbounded(M, inst.S, m, am));
        }
    }
}

TEST_CASE("every enumerated item recomputes to its target") {
    for (const auto& inst : small_instances()) {
        const Module& M = *inst.mod;
        const Ring& R = *M.ring();
        for (Elem m = 0; m < M.size(); ++m) {
            if (m == M.zero()) continue;
            auto r = enumerate_factorizations(M, inst.S, m, EnumMode::All(), 4);
            for (const auto& f : r.items) {
                Elem v = f.tail;
                for (auto it = f.scalars.rbegin(); it != f.scalars.rend(); ++it) {
                    CHECK(inst.S.contains(*it));
                    CHECK_FALSE(R.is_unit(*it));
                    v = M.act(*it, v);
                }
                CHECK(v == f.target);
            }
        }
    }
}

TEST_CASE("analysis matches the oracle: atomicity, lengths, iso classes") {
    for (const auto& inst : small_instances()) {
        const Module& M = *inst.mod;
        FactorAnalysis fa(M, inst.S);
        const int n = M.size();
        oracle::Mode all{};
        for (Elem m = 0; m < n; ++m) {
            if (m == M.zero()) continue;
            CHECK(fa.bounded(m) == !oracle::unbounded(M, inst.S, m, all));
            for (auto a : kIrrKinds)
                for (auto b : kPrimKinds) {
                    oracle::Mode mo{true, a, b};
                    bool has =
                        !oracle::factorizations(M, inst.S, m, mo, n).empty();
                    CHECK(fa.atomic(m, a, b) == has);
                }

            oracle::Mode am{true, IrrKind::irreducible, PrimKind::primitive};
            auto ls = fa.atomic_lengths(m, IrrKind::irreducible,
                                        PrimKind::primitive);
            if (oracle::unbounded(M, inst.S, m, am)) {
                CHECK_FALSE(ls.has_value());
                CHECK_FALSE(fa.iso_class_count(m).has_value());
                continue;
            }
            auto items = oracle::factorizations(M, inst.S, m, am, n);
            std::set<int> want;
            for (const auto& f : items) want.insert(f.length());
            REQUIRE(ls.has_value());
            CHECK(std::set<int>(ls->begin(), ls->end()) == want);

            auto fs = fa.atomic_factorizations(m);
            CHECK(std::set<Factorization>(fs.begin(), fs.end()) == items);
            auto cnt = fa.iso_class_count(m);
            REQUIRE(cnt.has_value());
            CHECK(*cnt == oracle::iso_class_count(
                              M, inst.S,
                              {items.begin(), items.end()}));
        }
    }
}

TEST_CASE("grouping puts two factorizations together iff they are isomorphic") {
    for (const auto& inst : small_instances()) {
        const Module& M = *inst.mod;
        FactorAnalysis fa(M, inst.S);
        for (Elem m = 0; m < M.size(); ++m) {
            if (m == M.zero() || !fa.bounded(m)) continue;
            auto fs = fa.atomic_factorizations(m);
            auto groups = group_up_to_iso(fs, M, inst.S);
            std::vector<int> gid(fs.size(), -1);
            for (size_t g = 0; g < groups.size(); ++g)
                for (auto i : groups[g]) gid[i] = static_cast<int>(g);
            for (size_t i = 0; i < fs.size(); ++i)
                for (size_t j = i + 1; j < fs.size(); ++j)
                    CHECK((gid[i] == gid[j]) ==
                          oracle::isomorphic(M, inst.S, fs[i], fs[j]));
        }
    }
}

TEST_CASE("scalar order does not change the isomorphism class") {
    Z6Sat2 t;
    // 2 ~ 4 in Z/6, tails 1 ~s 5
    std::vector<Factorization> fs = {
        {4, {2, 2}, 1}, {4, {4, 4}, 5}, {4, {2, 4}, 1}, {4, {2}, 5}};
    auto groups = group_up_to_iso(fs, *t.mod, t.S);
    REQUIRE(groups.size() == 2);  // the three length-2 ones collapse
    std::set<size_t> sizes;
    for (const auto& g : groups) sizes.insert(g.size());
    CHECK(sizes == std::set<size_t>{1, 3});
}

TEST_CASE("presimplifiability") {
    Z6Sat2 t;
    auto w = presimp_violation(*t.mod, t.S);
    REQUIRE(w.has_value());
    CHECK(t.S.contains(w->s));
    CHECK_FALSE(t.ring->is_unit(w->s));
    CHECK(w->m != t.mod->zero());
    CHECK(t.mod->act(w->s, w->m) == w->m);

    CHECK(is_presimplifiable(*t.mod, SatSet::units(t.ring)));
    // per-element, r over the whole ring: 4*2 = 2 kills 2
    CHECK_FALSE(element_presimplifiable(*t.mod, t.S, 2));
    CHECK(element_presimplifiable(*t.mod, t.S, 1));
}

TEST_CASE("classify: frozen verdicts") {
    Z6Sat2 t;
    auto rep = classify(*t.mod, t.S);
    CHECK_FALSE(rep.presimplifiable);
    CHECK(rep.atomic[0][0]);  // every nonzero element factors through {1,3,5}
    CHECK_FALSE(rep.bfm);
    REQUIRE(rep.bfm_cycle.size() >= 2);
    CHECK_FALSE(rep.ffm);
    CHECK_FALSE(rep.hfm);
    CHECK_FALSE(rep.ufm);

    auto uni = classify(*t.mod, SatSet::units(t.ring));
    CHECK(uni.presimplifiable);
    CHECK(uni.is_atomic());
    CHECK(uni.bfm);
    CHECK(uni.ffm);
    CHECK(uni.hfm);
    CHECK(uni.ufm);

    auto gf4 = Ring::gf_quotient(2, {1, 1, 1});
    auto rg = Module::regular(gf4);
    for (const auto& s : all_satsets(gf4)) {
        auto r = classify(*rg, s);
        CHECK(r.property(Property::unique_factorization));
        CHECK(r.property(Property::bounded));
        CHECK(r.property(Property::presimplifiable));
    }

    auto j = rep.to_json();
    CHECK(j["schema_version"] == 1);
    CHECK(j["bfm"] == false);
    CHECK(j["atomic"]["irreducible,primitive"] == true);
}

TEST_CASE("classify agrees with per-element oracle sweeps") {
    for (const auto& inst : small_instances()) {
        const Module& M = *inst.mod;
        auto rep = classify(M, inst.S);
        oracle::Mode all{};
        oracle::Mode am{true, IrrKind::irreducible, PrimKind::primitive};
        bool bfm = true, atomic = true, hfm = true;
        for (Elem m = 0; m < M.size(); ++m) {
            if (m == M.zero()) continue;
            if (oracle::unbounded(M, inst.S, m, all)) bfm = false;
            auto items = oracle::factorizations(M, inst.S, m, am, M.size());
            if (items.empty()) atomic = false;
            if (oracle::unbounded(M, inst.S, m, am)) {
                hfm = false;
            } else {
                std::set<int> ls;
                for (const auto& f : items) ls.insert(f.length());
                if (ls.size() != 1) hfm = false;
            }
        }
        CHECK(rep.bfm == bfm);
        CHECK(rep.atomic[0][0] == atomic);
        CHECK(rep.hfm == (atomic && hfm));
    }
}

TEST_CASE("enumerate flags truncation instead of silently stopping") {
    auto z12 = Ring::zmod(12);
    auto reg = Module::regular(z12);
    auto S = SatSet::units(z12);
    // no nonunit scalars: everything is a length-0 factorization of itself
    auto r = enumerate_factorizations(*reg, S, 5, EnumMode::All(), 0);
    CHECK(r.status == EnumStatus::complete);
    CHECK(r.items.size() == 1);

    Z6Sat2 t;
    auto rt = enumerate_factorizations(*t.mod, t.S, 3, EnumMode::All(), 6, 1);
    CHECK(rt.items.size() == 1);  // cap respected; 3 has exactly one anyway
}
