#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "factorlab/module.hpp"
#include "factorlab/satset.hpp"

namespace factorlab {

/// R_S built from explicit pair classes: (r,s) ~ (r',s') iff
/// t(rs' - r's) = 0 for some t in S, closed transitively (the raw relation
/// need not be transitive when S meets Z(R)). Class representatives are the
/// lexicographically least pairs. Throws Error("collapsed_to_zero") when
/// 0 in S.
class LocalizedRing {
public:
    static LocalizedRing build(const RingPtr& base, const SatSet& S);

    const RingPtr& base() const { return base_; }
    const SatSet& satset() const { return S_; }
    /// The localized ring itself (validated like any other Ring).
    const RingPtr& ring() const { return ring_; }

    /// Class of r/s; s must lie in S.
    Elem class_of(Elem r, Elem s) const;
    /// The canonical map r -> r/1.
    Elem map_to(Elem r) const { return class_of(r, base_->one()); }
    /// Lexicographically least (r, s) in the class.
    std::pair<Elem, Elem> rep(Elem cls) const { return reps_[cls]; }

    bool map_injective() const;

    nlohmann::json to_json() const;

private:
    LocalizedRing(RingPtr base, SatSet S)
        : base_(std::move(base)), S_(std::move(S)) {}

    RingPtr base_;
    SatSet S_;
    RingPtr ring_;
    std::vector<Elem> cls_;  // |R| x |R|, -1 off S columns
    std::vector<std::pair<Elem, Elem>> reps_;
    friend class LocalizedModule;
};

/// M_S over R_S, same pair-class construction with
/// (m,s) ~ (m',s') iff t(s'm - sm') = 0 for some t in S.
class LocalizedModule {
public:
    static LocalizedModule build(const ModulePtr& base, const LocalizedRing& RS);

    const ModulePtr& base() const { return base_; }
    const LocalizedRing& ring() const { return RS_; }
    const ModulePtr& module() const { return mod_; }

    Elem class_of(Elem m, Elem s) const;
    Elem map_to(Elem m) const { return class_of(m, RS_.base()->one()); }
    std::pair<Elem, Elem> rep(Elem cls) const { return reps_[cls]; }

    bool map_injective() const;

    nlohmann::json to_json() const;

private:
    LocalizedModule(ModulePtr base, LocalizedRing RS)
        : base_(std::move(base)), RS_(std::move(RS)) {}

    ModulePtr base_;
    LocalizedRing RS_;
    ModulePtr mod_;
    std::vector<Elem> cls_;
    std::vector<std::pair<Elem, Elem>> reps_;
};

/// T = S^{-1}S' = { s'/s : s' in S', s in S } as a subset of R_S.
/// Requires S, a subset of S' (Error("not_nested") otherwise); the result is
/// asserted saturated.
SatSet induce_T(const LocalizedRing& RS, const SatSet& Sprime);

}  // namespace factorlab
