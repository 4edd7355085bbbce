#include <doctest.h>

#include <set>

#include "factorlab/module.hpp"

using namespace factorlab;

TEST_CASE("annihilators") {
    auto z6 = Ring::zmod(6);
    auto m3 = Module::zmod_over(3, z6);  // Z/3 over Z/6 via reduction
    auto ann = m3->ann_of_subset(m3->carrier());
    CHECK(std::set<Elem>(ann.begin(), ann.end()) == std::set<Elem>{0, 3});

    auto reg = Module::regular(z6);
    auto ann1 = reg->ann_of_subset({1});
    CHECK(ann1 == std::vector<Elem>{0});

    auto z4 = Ring::zmod(4);
    auto reg4 = Module::regular(z4);
    auto ann2 = reg4->ann_of_subset({2});
    CHECK(std::set<Elem>(ann2.begin(), ann2.end()) == std::set<Elem>{0, 2});
}

TEST_CASE("Ann_M(r)") {
    auto z6 = Ring::zmod(6);
    auto reg = Module::regular(z6);
    auto a2 = reg->ann_of_scalar(2);
    CHECK(std::set<Elem>(a2.begin(), a2.end()) == std::set<Elem>{0, 3});
    CHECK(reg->ann_of_scalar(1) == std::vector<Elem>{0});
    CHECK(reg->ann_of_scalar(0).size() == 6);
}

TEST_CASE("zero divisors") {
    auto z6 = Ring::zmod(6);
    auto reg = Module::regular(z6);
    auto z = reg->zero_divisors(reg->carrier());
    CHECK(std::set<Elem>(z.begin(), z.end()) == std::set<Elem>{0, 2, 3, 4});

    auto gf4 = Ring::gf_quotient(2, {1, 1, 1});
    auto rgf = Module::regular(gf4);
    CHECK(rgf->zero_divisors(rgf->carrier()) == std::vector<Elem>{0});

    auto z4 = Ring::zmod(4);
    auto m2 = Module::zmod_over(2, z4);
    auto z2 = m2->zero_divisors(m2->carrier());
    CHECK(std::set<Elem>(z2.begin(), z2.end()) == std::set<Elem>{0, 2});
}

TEST_CASE("quotient construction") {
    auto z6 = Ring::zmod(6);
    auto reg = Module::regular(z6);
    auto q = Module::quotient(reg, {0, 3});
    CHECK(q->size() == 3);
    auto q0 = Module::quotient(reg, {0});
    CHECK(q0->size() == 6);
    CHECK_THROWS_AS(Module::quotient(reg, {0, 2}), Error);  // not a submodule
    // whole module quotient collapses to zero, rejected
    CHECK_THROWS_AS(Module::quotient(reg, reg->carrier()), Error);
}

TEST_CASE("regular module matches the ring tables") {
    auto z6 = Ring::zmod(6);
    auto reg = Module::regular(z6);
    for (Elem a = 0; a < 6; ++a)
        for (Elem b = 0; b < 6; ++b) {
            CHECK(reg->add(a, b) == z6->add(a, b));
            CHECK(reg->act(a, b) == z6->mul(a, b));
        }
    CHECK(reg->ann_of_subset({reg->zero() == 0 ? 1 : 0}) ==
          std::vector<Elem>{0});
}

TEST_CASE("Z(M) definition scan: r in Z(M) iff Ann_M(r) is nontrivial") {
    auto z6 = Ring::zmod(6);
    for (auto M : {Module::regular(z6), Module::zmod_over(3, z6),
                   Module::zmod_over(2, z6)}) {
        auto z = M->zero_divisors(M->carrier());
        std::set<Elem> zs(z.begin(), z.end());
        for (Elem r = 0; r < 6; ++r) {
            bool kills = M->ann_of_scalar(r).size() > 1;
            CHECK(kills == (zs.count(r) > 0));
        }
    }
}

TEST_CASE("module json round trip") {
    auto z6 = Ring::zmod(6);
    auto m = Module::zmod_over(3, z6);
    auto back = Module::from_json(m->to_json(), z6);
    CHECK(back->size() == 3);
    auto q = Module::quotient(Module::regular(z6), {0, 3});
    auto qb = Module::from_json(q->to_json(), z6);
    CHECK(qb->size() == 3);
}
