#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "factorlab/ring.hpp"

namespace factorlab {

/// A saturated multiplicatively closed subset of a ring. Contains all units;
/// if it contains 0 it is the whole ring (normalized at construction).
class SatSet {
public:
    /// Least saturated multiplicatively closed superset of gens (and the units).
    static SatSet saturate(const RingPtr& ring, std::vector<Elem> gens);
    static SatSet units(const RingPtr& ring);
    static SatSet full(const RingPtr& ring);
    /// Validates the three axioms; throws Error("not_saturated", ...) with the
    /// violating pair in the message on failure.
    static SatSet from_members(const RingPtr& ring,
                               const std::vector<Elem>& members);
    static SatSet from_json(const nlohmann::json& j, const RingPtr& ring);

    const RingPtr& ring() const { return ring_; }
    bool contains(Elem a) const { return members_[a] != 0; }
    int count() const;
    std::vector<Elem> elements() const;
    const std::vector<char>& bitmap() const { return members_; }
    const std::vector<Elem>& generators() const { return gens_; }

    bool is_full() const { return contains(ring_->zero()); }
    bool is_subset_of(const SatSet& other) const;
    bool operator==(const SatSet& other) const {
        return ring_ == other.ring_ && members_ == other.members_;
    }
    /// True when S contains a nonunit.
    bool has_nonunit() const;

    nlohmann::json to_json() const;

private:
    SatSet(RingPtr ring, std::vector<char> members, std::vector<Elem> gens)
        : ring_(std::move(ring)), members_(std::move(members)),
          gens_(std::move(gens)) {}

    RingPtr ring_;
    std::vector<char> members_;
    std::vector<Elem> gens_;
};

struct SatSetViolation {
    std::string axiom;  // "units" | "closed" | "saturated" | "zero"
    Elem x = -1, y = -1;
};

/// Checks the axioms on an arbitrary membership bitmap.
std::optional<SatSetViolation> satset_violation(const Ring& ring,
                                                const std::vector<char>& members);

/// Every saturated multiplicatively closed subset of the ring, deduplicated;
/// always includes units(R) and R. Throws on carrier > limit.
std::vector<SatSet> all_satsets(const RingPtr& ring, int limit = 16);

}  // namespace factorlab
