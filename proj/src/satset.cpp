#include "factorlab/satset.hpp"

#include <algorithm>
#include <set>

namespace factorlab {

namespace {

// Fixed point of multiplicative closure and divisor closure; 0 absorbs.
std::vector<char> close(const Ring& R, std::vector<char> in) {
    const int n = R.size();
    for (Elem u = 0; u < n; ++u)
        if (R.is_unit(u)) in[u] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Elem a = 0; a < n; ++a) {
            if (!in[a]) continue;
            for (Elem b = 0; b < n; ++b) {
                if (!in[b]) continue;
                Elem p = R.mul(a, b);
                if (!in[p]) {
                    in[p] = 1;
                    changed = true;
                }
            }
            // saturation: every divisor of a member is a member
            for (Elem x = 0; x < n; ++x)
                if (!in[x] && R.divides(x, a)) {
                    in[x] = 1;
                    changed = true;
                }
        }
    }
    if (in[R.zero()]) in.assign(n, 1);
    return in;
}

}  // namespace

SatSet SatSet::saturate(const RingPtr& ring, std::vector<Elem> gens) {
    std::vector<char> members(ring->size(), 0);
    for (Elem g : gens) {
        if (g < 0 || g >= ring->size())
            throw Error("invalid_argument", "generator out of range");
        members[g] = 1;
    }
    return SatSet(ring, close(*ring, std::move(members)), std::move(gens));
}

SatSet SatSet::units(const RingPtr& ring) { return saturate(ring, {}); }

SatSet SatSet::full(const RingPtr& ring) {
    return SatSet(ring, std::vector<char>(ring->size(), 1),
                  {ring->zero()});
}

SatSet SatSet::from_members(const RingPtr& ring,
                            const std::vector<Elem>& members) {
    std::vector<char> bm(ring->size(), 0);
    for (Elem m : members) {
        if (m < 0 || m >= ring->size())
            throw Error("invalid_argument", "member out of range");
        bm[m] = 1;
    }
    if (auto v = satset_violation(*ring, bm))
        throw Error("not_saturated",
                    "axiom '" + v->axiom + "' violated by (" +
                        std::to_string(v->x) + "," + std::to_string(v->y) + ")");
    return SatSet(ring, std::move(bm), {});
}

SatSet SatSet::from_json(const nlohmann::json& j, const RingPtr& ring) {
    if (j.contains("gens"))
        return saturate(ring, j["gens"].get<std::vector<Elem>>());
    if (j.contains("members"))
        return from_members(ring, j["members"].get<std::vector<Elem>>());
    throw Error("invalid_argument", "satset json needs 'gens' or 'members'");
}

int SatSet::count() const {
    return static_cast<int>(std::count(members_.begin(), members_.end(), 1));
}

std::vector<Elem> SatSet::elements() const {
    std::vector<Elem> out;
    for (int a = 0; a < static_cast<int>(members_.size()); ++a)
        if (members_[a]) out.push_back(a);
    return out;
}

bool SatSet::is_subset_of(const SatSet& other) const {
    for (size_t i = 0; i < members_.size(); ++i)
        if (members_[i] && !other.members_[i]) return false;
    return true;
}

bool SatSet::has_nonunit() const {
    for (int a = 0; a < static_cast<int>(members_.size()); ++a)
        if (members_[a] && !ring_->is_unit(a)) return true;
    return false;
}

nlohmann::json SatSet::to_json() const {
    if (!gens_.empty()) return {{"gens", gens_}, {"members", elements()}};
    return {{"members", elements()}};
}

std::optional<SatSetViolation> satset_violation(const Ring& ring,
                                                const std::vector<char>& members) {
    const int n = ring.size();
    for (Elem u = 0; u < n; ++u)
        if (ring.is_unit(u) && !members[u])
            return SatSetViolation{"units", u, -1};
    for (Elem a = 0; a < n; ++a) {
        if (!members[a]) continue;
        for (Elem b = 0; b < n; ++b)
            if (members[b] && !members[ring.mul(a, b)])
                return SatSetViolation{"closed", a, b};
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (members[ring.mul(a, b)] && (!members[a] || !members[b]))
                return SatSetViolation{"saturated", a, b};
    if (members[ring.zero()]) {
        for (Elem a = 0; a < n; ++a)
            if (!members[a]) return SatSetViolation{"zero", a, -1};
    }
    return std::nullopt;
}

std::vector<SatSet> all_satsets(const RingPtr& ring, int limit) {
    const int n = ring->size();
    if (n > limit)
        throw Error("bound_exceeded", "all_satsets carrier bound exceeded");

    // Saturated sets are unions of full-ring associate classes, so it is
    // enough to close each subset of class representatives.
    std::vector<Elem> reps;
    for (Elem a = 0; a < n; ++a)
        if (ring->assoc_class_rep(a) == a) reps.push_back(a);

    std::set<std::vector<char>> seen;
    std::vector<SatSet> out;
    const int r = static_cast<int>(reps.size());
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<Elem> gens;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) gens.push_back(reps[i]);
        SatSet s = SatSet::saturate(ring, std::move(gens));
        if (seen.insert(s.bitmap()).second) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace factorlab
