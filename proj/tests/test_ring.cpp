#include <doctest.h>

#include <algorithm>
#include <set>

#include "factorlab/ring.hpp"

using namespace factorlab;

namespace {

std::set<Elem> units_by_scan(const Ring& R) {
    std::set<Elem> out;
    for (Elem u = 0; u < R.size(); ++u)
        for (Elem v = 0; v < R.size(); ++v)
            if (R.mul(u, v) == R.one()) out.insert(u);
    return out;
}

}  // namespace

TEST_CASE("units of Z/6, GF(4) and Z/2 x Z/2") {
    auto z6 = Ring::zmod(6);
    std::set<Elem> u6(z6->units().begin(), z6->units().end());
    CHECK(u6 == std::set<Elem>{1, 5});
    CHECK(u6 == units_by_scan(*z6));

    auto gf4 = Ring::gf_quotient(2, {1, 1, 1});
    std::set<Elem> u4(gf4->units().begin(), gf4->units().end());
    CHECK(u4 == std::set<Elem>{1, 2, 3});  // all nonzero elements
    CHECK(gf4->is_domain());

    auto z2z2 = Ring::product(Ring::zmod(2), Ring::zmod(2));
    CHECK(z2z2->units().size() == 1);
    CHECK(z2z2->units()[0] == z2z2->one());
}

TEST_CASE("divisibility in Z/6") {
    auto z6 = Ring::zmod(6);
    CHECK(z6->divides(4, 2));  // 4*2 = 8 = 2
    CHECK(*z6->division_witness(4, 2) == 2);
    for (Elem b = 0; b < 6; ++b) CHECK(z6->divides(1, b));
    CHECK_FALSE(z6->divides(2, 3));
}

TEST_CASE("divides is reflexive and transitive") {
    for (auto R : {Ring::zmod(6), Ring::zmod(8), Ring::gf_quotient(2, {1, 1, 1}),
                   Ring::product(Ring::zmod(2), Ring::zmod(4))}) {
        for (Elem a = 0; a < R->size(); ++a) CHECK(R->divides(a, a));
        for (Elem a = 0; a < R->size(); ++a)
            for (Elem b = 0; b < R->size(); ++b)
                for (Elem c = 0; c < R->size(); ++c)
                    if (R->divides(a, b) && R->divides(b, c))
                        CHECK(R->divides(a, c));
    }
}

TEST_CASE("units are closed under multiplication and contain one") {
    for (auto R : {Ring::zmod(12), Ring::product(Ring::zmod(2), Ring::zmod(3)),
                   Ring::gf_quotient(3, {1, 0, 1})}) {
        const auto& us = R->units();
        CHECK(std::count(us.begin(), us.end(), R->one()) == 1);
        for (Elem u : us)
            for (Elem v : us) CHECK(R->is_unit(R->mul(u, v)));
    }
}

TEST_CASE("Z/2 x Z/3 is isomorphic to Z/6 under the CRT map") {
    auto prod = Ring::product(Ring::zmod(2), Ring::zmod(3));
    auto z6 = Ring::zmod(6);
    // CRT: k mod 6 -> (k mod 2, k mod 3); product element id = a*3 + b.
    std::vector<Elem> iso(6);
    for (int k = 0; k < 6; ++k) iso[k] = (k % 2) * 3 + (k % 3);
    std::set<Elem> image(iso.begin(), iso.end());
    CHECK(image.size() == 6);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            CHECK(iso[z6->add(a, b)] == prod->add(iso[a], iso[b]));
            CHECK(iso[z6->mul(a, b)] == prod->mul(iso[a], iso[b]));
        }
}

TEST_CASE("GF(4) satisfies the field axioms by scan") {
    auto gf4 = Ring::gf_quotient(2, {1, 1, 1});
    for (Elem a = 0; a < 4; ++a)
        if (a != gf4->zero()) CHECK(gf4->is_unit(a));
    CHECK(gf4->is_domain());
}

TEST_CASE("construction rejections") {
    CHECK_THROWS_AS(Ring::zmod(1), Error);
    CHECK_THROWS_AS(Ring::gf_quotient(2, {1, 1, 2}), Error);  // not monic
    CHECK_THROWS_AS(Ring::gf_quotient(4, {1, 1, 1}), Error);  // p not prime
    CHECK_THROWS_AS(Ring::zmod(100, 64), Error);              // carrier limit
}

TEST_CASE("json round trip") {
    auto z6 = Ring::zmod(6);
    auto back = Ring::from_json(z6->to_json());
    CHECK(back->size() == 6);
    CHECK(back->to_json() == z6->to_json());

    auto gf4 = Ring::gf_quotient(2, {1, 1, 1});
    CHECK(gf4->to_json()["kind"] == "gfquot");
    auto prod = Ring::product(z6, gf4);
    auto prod2 = Ring::from_json(prod->to_json());
    CHECK(prod2->size() == 24);
}

TEST_CASE("a broken table is rejected with a diagnostic") {
    // 2-element "ring" with non-distributive multiplication
    std::vector<Elem> add = {0, 1, 1, 0};
    std::vector<Elem> bad_mul = {1, 0, 0, 1};
    CHECK_THROWS_AS(
        Ring::from_table(add, bad_mul, 0, 1, {{"kind", "table"}}), Error);
}
