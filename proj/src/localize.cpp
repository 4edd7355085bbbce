#include "factorlab/localize.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace factorlab {

namespace {

// Cap on the number of (element, denominator) pairs; the pairwise closure
// below is quadratic in this.
constexpr int kPairLimit = 2048;

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Shared pair-class computation. `cross(a, s, b, t)` is the element whose
// S-annihilation makes (a,s) and (b,t) equivalent; `count` is the carrier
// size of the numerators.
template <typename Cross, typename Kill>
void pair_classes(int count, const SatSet& S, Cross cross, Kill killed,
                  std::vector<Elem>& cls,
                  std::vector<std::pair<Elem, Elem>>& reps) {
    const auto svals = S.elements();
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem a = 0; a < count; ++a)
        for (Elem s : svals) pairs.push_back({a, s});
    if (static_cast<int>(pairs.size()) > kPairLimit)
        throw Error("bound_exceeded", "localization pair table too large");

    // Transitive closure of the raw relation via union-find over all pairs.
    UnionFind uf(static_cast<int>(pairs.size()));
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            Elem d = cross(pairs[i].first, pairs[i].second, pairs[j].first,
                           pairs[j].second);
            if (killed(d)) uf.unite(static_cast<int>(i), static_cast<int>(j));
        }

    // Lexicographically least pair represents; class ids follow rep order
    // (pairs were generated in lex order already).
    std::map<int, Elem> root_to_id;
    reps.clear();
    for (size_t i = 0; i < pairs.size(); ++i) {
        int r = uf.find(static_cast<int>(i));
        if (root_to_id.emplace(r, static_cast<Elem>(reps.size())).second)
            reps.push_back(pairs[i]);
    }
    cls.assign(static_cast<size_t>(count) * S.ring()->size(), -1);
    for (size_t i = 0; i < pairs.size(); ++i)
        cls[pairs[i].first * S.ring()->size() + pairs[i].second] =
            root_to_id[uf.find(static_cast<int>(i))];
}

}  // namespace

LocalizedRing LocalizedRing::build(const RingPtr& base, const SatSet& S) {
    if (S.ring() != base)
        throw Error("invalid_argument", "satset belongs to a different ring");
    if (S.contains(base->zero()))
        throw Error("collapsed_to_zero",
                    "0 in S collapses the localization to the zero ring");

    LocalizedRing out(base, S);

    const Ring& R = *base;
    auto killed = [&](Elem d) {
        for (Elem t : S.elements())
            if (R.mul(t, d) == R.zero()) return true;
        return false;
    };
    auto cross = [&](Elem r, Elem s, Elem r2, Elem s2) {
        return R.sub(R.mul(r, s2), R.mul(r2, s));
    };
    pair_classes(R.size(), S, cross, killed, out.cls_, out.reps_);

    const int k = static_cast<int>(out.reps_.size());
    if (k < 2)
        throw Error("collapsed_to_zero", "localization collapsed to a point");

    auto at = [&](Elem r, Elem s) { return out.cls_[r * R.size() + s]; };
    std::vector<Elem> add(k * k), mul(k * k);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            auto [r, s] = out.reps_[x];
            auto [r2, s2] = out.reps_[y];
            add[x * k + y] =
                at(R.add(R.mul(r, s2), R.mul(r2, s)), R.mul(s, s2));
            mul[x * k + y] = at(R.mul(r, r2), R.mul(s, s2));
        }

    // Well-definedness: any member of a class combined with the other
    // class's rep must land where the rep-on-rep table says.
    for (Elem r = 0; r < R.size(); ++r)
        for (Elem s : S.elements()) {
            int x = at(r, s);
            for (int y = 0; y < k; ++y) {
                auto [r2, s2] = out.reps_[y];
                if (at(R.add(R.mul(r, s2), R.mul(r2, s)), R.mul(s, s2)) !=
                        add[x * k + y] ||
                    at(R.mul(r, r2), R.mul(s, s2)) != mul[x * k + y])
                    throw Error("invalid_ring",
                                "localization operations not well defined");
            }
        }

    std::vector<std::string> names(k);
    for (int x = 0; x < k; ++x)
        names[x] = R.element_name(out.reps_[x].first) + "/" +
                   R.element_name(out.reps_[x].second);
    nlohmann::json cons = {{"kind", "localization"},
                           {"base", base->to_json()},
                           {"S", S.to_json()}};
    out.ring_ = Ring::from_table(std::move(add), std::move(mul),
                                 at(R.zero(), R.one()), at(R.one(), R.one()),
                                 std::move(cons), std::move(names));
    return out;
}

Elem LocalizedRing::class_of(Elem r, Elem s) const {
    Elem c = cls_[r * base_->size() + s];
    if (c < 0) throw Error("invalid_argument", "denominator not in S");
    return c;
}

bool LocalizedRing::map_injective() const {
    for (Elem a = 0; a < base_->size(); ++a)
        for (Elem b = a + 1; b < base_->size(); ++b)
            if (map_to(a) == map_to(b)) return false;
    return true;
}

nlohmann::json LocalizedRing::to_json() const {
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& [r, s] : reps_) reps.push_back({r, s});
    nlohmann::json table = nlohmann::json::array();
    for (Elem r = 0; r < base_->size(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Elem s = 0; s < base_->size(); ++s)
            row.push_back(cls_[r * base_->size() + s]);
        table.push_back(row);
    }
    return {{"kind", "localized_ring"},
            {"base", base_->to_json()},
            {"S", S_.to_json()},
            {"reps", reps},
            {"class_of_pair", table},
            {"ring", ring_->to_json()}};
}

LocalizedModule LocalizedModule::build(const ModulePtr& base,
                                       const LocalizedRing& RS) {
    if (base->ring() != RS.base())
        throw Error("invalid_argument", "module is not over the base ring");

    LocalizedModule out(base, RS);

    const Module& M = *base;
    const Ring& R = *M.ring();
    const SatSet& S = RS.satset();

    std::vector<Elem> neg(M.size());
    for (Elem m = 0; m < M.size(); ++m)
        for (Elem n = 0; n < M.size(); ++n)
            if (M.add(m, n) == M.zero()) neg[m] = n;

    auto killed = [&](Elem d) {
        for (Elem t : S.elements())
            if (M.act(t, d) == M.zero()) return true;
        return false;
    };
    auto cross = [&](Elem m, Elem s, Elem m2, Elem s2) {
        return M.add(M.act(s2, m), neg[M.act(s, m2)]);
    };
    pair_classes(M.size(), S, cross, killed, out.cls_, out.reps_);

    const int k = static_cast<int>(out.reps_.size());
    if (k < 2)
        throw Error("collapsed_to_zero", "localized module collapsed to zero");

    auto at = [&](Elem m, Elem s) { return out.cls_[m * R.size() + s]; };
    std::vector<Elem> add(k * k);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            auto [m, s] = out.reps_[x];
            auto [m2, s2] = out.reps_[y];
            add[x * k + y] =
                at(M.add(M.act(s2, m), M.act(s, m2)), R.mul(s, s2));
        }
    const RingPtr& RSr = RS.ring();
    std::vector<Elem> act(RSr->size() * k);
    for (Elem c = 0; c < RSr->size(); ++c) {
        auto [r, s] = RS.rep(c);
        for (int y = 0; y < k; ++y) {
            auto [m, u] = out.reps_[y];
            act[c * k + y] = at(M.act(r, m), R.mul(s, u));
        }
    }

    // Well-definedness against non-representative members.
    for (Elem m = 0; m < M.size(); ++m)
        for (Elem s : S.elements()) {
            int y = at(m, s);
            for (Elem c = 0; c < RSr->size(); ++c) {
                auto [r, u] = RS.rep(c);
                if (at(M.act(r, m), R.mul(u, s)) != act[c * k + y])
                    throw Error("invalid_module",
                                "localized action not well defined");
            }
        }

    std::vector<std::string> names(k);
    for (int x = 0; x < k; ++x)
        names[x] = M.element_name(out.reps_[x].first) + "/" +
                   R.element_name(out.reps_[x].second);
    nlohmann::json cons = {{"kind", "localized_module"},
                           {"base", M.to_json()},
                           {"S", S.to_json()}};
    out.mod_ = Module::from_table(RSr, std::move(add), std::move(act),
                                  at(M.zero(), R.one()), std::move(cons),
                                  std::move(names));
    return out;
}

Elem LocalizedModule::class_of(Elem m, Elem s) const {
    Elem c = cls_[m * RS_.base()->size() + s];
    if (c < 0) throw Error("invalid_argument", "denominator not in S");
    return c;
}

bool LocalizedModule::map_injective() const {
    for (Elem a = 0; a < base_->size(); ++a)
        for (Elem b = a + 1; b < base_->size(); ++b)
            if (map_to(a) == map_to(b)) return false;
    return true;
}

nlohmann::json LocalizedModule::to_json() const {
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& [m, s] : reps_) reps.push_back({m, s});
    return {{"kind", "localized_module"},
            {"base", base_->to_json()},
            {"S", RS_.satset().to_json()},
            {"reps", reps},
            {"module", mod_->to_json()}};
}

SatSet induce_T(const LocalizedRing& RS, const SatSet& Sprime) {
    if (Sprime.ring() != RS.base())
        throw Error("invalid_argument", "S' belongs to a different ring");
    if (!RS.satset().is_subset_of(Sprime))
        throw Error("not_nested", "S must be contained in S'");

    std::vector<char> in(RS.ring()->size(), 0);
    for (Elem sp : Sprime.elements())
        for (Elem s : RS.satset().elements()) in[RS.class_of(sp, s)] = 1;

    if (auto v = satset_violation(*RS.ring(), in))
        throw Error("not_saturated",
                    "induced T violates the " + v->axiom + " axiom");
    std::vector<Elem> members;
    for (Elem c = 0; c < RS.ring()->size(); ++c)
        if (in[c]) members.push_back(c);
    return SatSet::from_members(RS.ring(), members);
}

}  // namespace factorlab
