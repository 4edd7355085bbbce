#include <doctest.h>

#include <cstdio>

#include "factorlab/catalog.hpp"

using namespace factorlab;

TEST_CASE("transfer instance: nesting validated, flags on Z/6") {
    auto z6 = Ring::zmod(6);
    auto reg = Module::regular(z6);
    auto S2 = SatSet::saturate(z6, {2});
    auto S3 = SatSet::saturate(z6, {3});
    CHECK_THROWS_AS(TransferInstance::build(reg, S2, S3), Error);

    auto inst = TransferInstance::build(reg, S2, SatSet::full(z6));
    CHECK(inst.s_splits_m);
    CHECK(inst.semi_factorable);
    CHECK_FALSE(inst.s_avoids_zm);  // 2 kills 3
    CHECK_FALSE(inst.s_avoids_zr);
    CHECK(inst.e_compactly_atomic);  // E = {1,2,3,4,5}
    CHECK(inst.E.size() == 5);
    CHECK(inst.id().size() == 16);
    CHECK(inst.id() == TransferInstance::build(reg, S2, SatSet::full(z6)).id());
}

TEST_CASE("units localization instance: everything non-vacuous and holding") {
    auto z6 = Ring::zmod(6);
    auto reg = Module::regular(z6);
    auto inst =
        TransferInstance::build(reg, SatSet::units(z6), SatSet::saturate(z6, {2}));
    CHECK(inst.s_splits_m);
    CHECK(inst.s_avoids_zm);
    CHECK(inst.s_avoids_zr);
    CHECK(inst.e_compactly_atomic);

    // E \ S = {2, 4}; both irreducible, so prop_irr is exercised
    auto irr = check_prop_irr_all(inst);
    CHECK(irr.status == CheckStatus::holds);
    auto one = check_prop_irr(inst, 2, IrrKind::irreducible);
    CHECK(one.status == CheckStatus::holds);
    CHECK(one.conclusion("rbar_nonunit"));
    CHECK(one.conclusion("equivalence"));

    auto prim = check_prop_prim_all(inst);
    CHECK(prim.status == CheckStatus::holds);
    auto p3 = check_prop_prim(inst, 3, PrimKind::primitive);
    CHECK(p3.status == CheckStatus::holds);

    auto lem = check_lemmas(inst);
    CHECK(lem.status == CheckStatus::holds);
    CHECK(lem.hypothesis("exists_irreducible_sprime"));
    CHECK(lem.conclusion("sprime_primitive_is_s_primitive"));
    CHECK(lem.conclusion("ring_assoc_transfer"));
    CHECK(lem.conclusion("module_assoc_transfer"));

    for (IrrKind a : kIrrKinds)
        for (PrimKind b : kPrimKinds) {
            auto rep = check_thm_atomic(inst, a, b);
            CHECK(rep.status != CheckStatus::violation);
        }
    // (irreducible, primitive): Z/6 is sat{2}-atomic, so part 1 and 3 fire
    auto ta = check_thm_atomic(inst, IrrKind::irreducible, PrimKind::primitive);
    CHECK(ta.status == CheckStatus::holds);
    CHECK(ta.hypothesis("sprime_atomic"));
    CHECK(ta.conclusion("s_atomic_very_strong"));
    CHECK(ta.conclusion("part3_equivalence"));
}

TEST_CASE("check_transfer agrees with independent classify runs") {
    auto z6 = Ring::zmod(6);
    auto reg = Module::regular(z6);
    auto S = SatSet::units(z6);
    auto Sp = SatSet::saturate(z6, {2});
    auto inst = TransferInstance::build(reg, S, Sp);

    for (Property p :
         {Property::unique_factorization, Property::finite_factorization,
          Property::half_factorial, Property::bounded}) {
        auto rep = check_transfer(inst, p);
        CHECK(rep.status != CheckStatus::violation);
        // recompute both sides from scratch
        bool lhs = classify(*reg, Sp).property(p);
        bool rhs_s = classify(*reg, S).property(p);
        bool rhs_loc = classify(*inst.MS().module(), inst.T()).property(p);
        CHECK(rep.conclusion("equiv_s_and_localized") ==
              (lhs == (rhs_s && rhs_loc)));
    }
    // presimplifiable and atomic run under the compact-atomicity side condition
    auto pre = check_transfer(inst, Property::presimplifiable);
    CHECK(pre.status == CheckStatus::holds);
    auto at = check_transfer(inst, Property::atomic);
    CHECK(at.status == CheckStatus::holds);
}

TEST_CASE("degenerate S' = S instance is consistent") {
    auto z4 = Ring::zmod(4);
    auto reg = Module::regular(z4);
    auto U = SatSet::units(z4);
    auto inst = TransferInstance::build(reg, U, U);
    CHECK(inst.E.size() == 2);  // units only
    CHECK(check_prop_prim_all(inst).status != CheckStatus::violation);
    CHECK(check_lemmas(inst).status != CheckStatus::violation);
    for (Property p :
         {Property::presimplifiable, Property::atomic, Property::bounded,
          Property::half_factorial, Property::finite_factorization,
          Property::unique_factorization})
        CHECK(check_transfer(inst, p).status != CheckStatus::violation);
}

TEST_CASE("catalog shape") {
    auto rings = catalog_rings(6);
    // Z/2..Z/6, GF(4), Z/2 x Z/2, Z/2 x Z/3
    CHECK(rings.size() == 8);
    auto z6 = Ring::zmod(6);
    auto mods = catalog_modules(z6, 6);
    CHECK(mods.size() == 3);  // regular, Z/2, Z/3
    auto p6 = Ring::product(Ring::zmod(2), Ring::zmod(3));
    auto pm = catalog_modules(p6, 6);
    CHECK(pm.size() >= 2);  // regular plus at least one proper quotient
    for (const auto& m : pm) CHECK(m->size() <= 6);
}

TEST_CASE("verify run over the small catalog: zero violations, full coverage") {
    auto res = run_verify({6, 6});
    CHECK(res.violations() == 0);
    CHECK(res.coverage_warnings.empty());
    CHECK(res.instances > 0);
    for (const auto& name : verify_theorems()) {
        REQUIRE(res.per_theorem.count(name));
        CHECK(res.per_theorem.at(name)[0] > 0);  // at least one non-vacuous
        CHECK(res.per_theorem.at(name)[2] == 0);
    }
    auto j = res.summary_json();
    CHECK(j["violations"] == 0);
    CHECK(j["per_theorem"].size() == verify_theorems().size());
}

TEST_CASE("verify runs are deterministic across worker counts") {
    auto a = run_verify({5, 5}, {}, 1);
    auto b = run_verify({5, 5}, {}, 3);
    REQUIRE(a.reports.size() == b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i)
        CHECK(a.reports[i].to_json() == b.reports[i].to_json());
    CHECK(a.summary_json() == b.summary_json());
}

TEST_CASE("theorem filter and unknown names") {
    auto res = run_verify({4, 4}, {"transfer", "lemmas"});
    for (const auto& rep : res.reports)
        CHECK((rep.name == "transfer" || rep.name == "lemmas"));
    CHECK_THROWS_AS(run_verify({4, 4}, {"nope"}), Error);
}

TEST_CASE("predicate parser") {
    auto p = Predicate::parse("BFM && !presimplifiable");
    CHECK(p.atoms() == std::vector<std::string>{"bfm", "presimplifiable"});
    CHECK(p.eval([](const std::string& a) { return a == "bfm"; }));
    CHECK_FALSE(p.eval([](const std::string&) { return true; }));

    auto q = Predicate::parse("semi_factorable \xe2\x88\xa7 \xc2\xac" "factorable");
    CHECK(q.atoms() ==
          std::vector<std::string>{"factorable", "semi_factorable"});

    auto r = Predicate::parse("(hfm or ufm) and not ffm");
    CHECK(r.eval([](const std::string& a) { return a == "hfm"; }));

    CHECK_THROWS_AS(Predicate::parse("bfm &&"), Error);
    CHECK_THROWS_AS(Predicate::parse("frobnicate"), Error);
    CHECK_THROWS_AS(Predicate::parse("bfm ) ufm"), Error);
}

TEST_CASE("negative-control hunts are empty") {
    for (const char* spec :
         {"bfm & !presimplifiable", "ufm & !ffm", "ufm & !hfm",
          "splits & !semi_factorable", "factorable & !semi_factorable"}) {
        auto res = hunt({spec, 6, 6});
        CHECK(res.exhausted);
        CHECK(res.witnesses.empty());
    }
}

TEST_CASE("hunts find known separations") {
    // Z/6 at sat{2} is atomic but not a BFM
    auto res = hunt({"atomic & !bfm", 6, 6});
    CHECK(res.exhausted);
    CHECK(!res.witnesses.empty());
    for (const auto& w : res.witnesses) {
        CHECK(w["flags"]["atomic"] == true);
        CHECK(w["flags"]["bfm"] == false);
        CHECK(w.contains("id"));
    }

    // open question probe: report findings, never assert emptiness
    auto open = hunt({"semi_factorable & !factorable & s_meets_zm", 6, 6});
    CHECK(open.exhausted);

    auto atlas = hunt({"hfm & !ffm", 6, 6});
    CHECK(atlas.exhausted);
}

TEST_CASE("hunt checkpointing is resumable and tamper-checked") {
    std::string path = "hunt_ckpt_test.json";
    std::remove(path.c_str());

    auto full = hunt({"atomic & !bfm", 6, 6});
    auto part = hunt({"atomic & !bfm", 6, 6, 1}, path);
    CHECK(part.witnesses.size() == 1);
    CHECK_FALSE(part.exhausted);

    auto rest = hunt({"atomic & !bfm", 6, 6}, path);
    CHECK(rest.exhausted);
    REQUIRE(rest.witnesses.size() == full.witnesses.size());
    for (std::size_t i = 0; i < full.witnesses.size(); ++i)
        CHECK(rest.witnesses[i] == full.witnesses[i]);

    CHECK_THROWS_AS(hunt({"atomic & !hfm", 6, 6}, path), Error);
    std::remove(path.c_str());
}
