#include <doctest.h>

#include <set>

#include "factorlab/satset.hpp"

using namespace factorlab;

namespace {

std::set<Elem> members(const SatSet& s) {
    auto e = s.elements();
    return {e.begin(), e.end()};
}

// Brute-force oracle: filter every subset through the axiom checker.
std::set<std::set<Elem>> satsets_brute(const RingPtr& R) {
    const int n = R->size();
    std::set<std::set<Elem>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<char> bm(n, 0);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) bm[i] = 1;
        if (!satset_violation(*R, bm)) {
            std::set<Elem> s;
            for (int i = 0; i < n; ++i)
                if (bm[i]) s.insert(i);
            out.insert(s);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("saturate in Z/6") {
    auto z6 = Ring::zmod(6);
    CHECK(members(SatSet::saturate(z6, {2})) == std::set<Elem>{1, 2, 4, 5});
    CHECK(members(SatSet::saturate(z6, {3})) == std::set<Elem>{1, 3, 5});
    CHECK(members(SatSet::saturate(z6, {})) == std::set<Elem>{1, 5});
    // 2*3 = 0 pulls in zero, which normalizes to the whole ring
    CHECK(SatSet::saturate(z6, {2, 3}).is_full());
}

TEST_CASE("saturate is idempotent and monotone") {
    auto z12 = Ring::zmod(12);
    for (Elem a = 0; a < 12; ++a)
        for (Elem b = 0; b < 12; ++b) {
            auto s1 = SatSet::saturate(z12, {a});
            auto s2 = SatSet::saturate(z12, s1.elements());
            CHECK(s1 == s2);
            auto s12 = SatSet::saturate(z12, {a, b});
            CHECK(s1.is_subset_of(s12));
        }
}

TEST_CASE("all_satsets on small rings") {
    auto gf4 = Ring::gf_quotient(2, {1, 1, 1});
    auto sets4 = all_satsets(gf4);
    CHECK(sets4.size() == 2);  // units and the whole field

    auto z4 = Ring::zmod(4);
    CHECK(all_satsets(z4).size() == 2);  // {1,3} and Z/4

    auto z6 = Ring::zmod(6);
    auto sets6 = all_satsets(z6);
    std::set<std::set<Elem>> got;
    for (const auto& s : sets6) got.insert(members(s));
    CHECK(got.count({1, 5}) == 1);
    CHECK(got.count({1, 2, 4, 5}) == 1);
    CHECK(got.count({1, 3, 5}) == 1);
    CHECK(got.count({0, 1, 2, 3, 4, 5}) == 1);
    CHECK(got.size() == 4);
}

TEST_CASE("all_satsets matches brute-force subset filtering (carrier <= 8)") {
    for (auto R : {Ring::zmod(4), Ring::zmod(6), Ring::zmod(8),
                   Ring::gf_quotient(2, {1, 1, 1}),
                   Ring::product(Ring::zmod(2), Ring::zmod(4))}) {
        auto fast = all_satsets(R);
        std::set<std::set<Elem>> got;
        for (const auto& s : fast) {
            CHECK_FALSE(satset_violation(*R, s.bitmap()).has_value());
            got.insert(members(s));
        }
        CHECK(got.size() == fast.size());
        CHECK(got == satsets_brute(R));
    }
}

TEST_CASE("is_satset violations carry witnesses") {
    auto z6 = Ring::zmod(6);
    std::vector<char> ok = {0, 1, 1, 0, 1, 1};  // {1,2,4,5}
    CHECK_FALSE(satset_violation(*z6, ok));

    std::vector<char> bad = {0, 1, 1, 0, 0, 0};  // {1,2}: 2*2=4 missing
    auto v = satset_violation(*z6, bad);
    REQUIRE(v.has_value());

    CHECK_THROWS_AS(SatSet::from_members(z6, {1, 2}), Error);
    CHECK_NOTHROW(SatSet::from_members(z6, {1, 2, 4, 5}));
}

TEST_CASE("zero membership forces the full ring") {
    auto z4 = Ring::zmod(4);
    auto s = SatSet::saturate(z4, {2});  // 2*2 = 0
    CHECK(s.is_full());
    CHECK(s.count() == 4);
}
