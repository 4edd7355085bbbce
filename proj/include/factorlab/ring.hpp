#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "factorlab/error.hpp"

namespace factorlab {

/// Elements of a ring (or module) carrier are canonical indices; equality is
/// index equality.
using Elem = int;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Default cap on carrier sizes; the exhaustive axiom validation and the
/// divisibility tables are cubic in the carrier.
inline constexpr int kDefaultCarrierLimit = 64;

/// A finite commutative ring with identity, table-backed and validated
/// exhaustively at construction. Immutable afterwards, safe to share.
class Ring {
public:
    static RingPtr zmod(int n, int limit = kDefaultCarrierLimit);
    static RingPtr product(const RingPtr& a, const RingPtr& b,
                           int limit = kDefaultCarrierLimit);
    /// GF(p)[x]/(f) with f monic, coefficients constant term first.
    /// Gives a field exactly when f is irreducible over GF(p).
    static RingPtr gf_quotient(int p, const std::vector<int>& f,
                               int limit = kDefaultCarrierLimit);
    static RingPtr from_table(std::vector<Elem> add, std::vector<Elem> mul,
                              Elem zero, Elem one, nlohmann::json construction,
                              std::vector<std::string> names = {},
                              int limit = kDefaultCarrierLimit);
    static RingPtr from_json(const nlohmann::json& j,
                             int limit = kDefaultCarrierLimit);

    int size() const { return n_; }
    Elem zero() const { return zero_; }
    Elem one() const { return one_; }
    Elem add(Elem a, Elem b) const { return add_[a * n_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    bool is_unit(Elem a) const { return inv_[a] >= 0; }
    std::optional<Elem> inverse(Elem a) const {
        if (inv_[a] < 0) return std::nullopt;
        return inv_[a];
    }
    const std::vector<Elem>& units() const { return units_; }

    /// a | b, i.e. b = a c for some c.
    bool divides(Elem a, Elem b) const { return div_wit_[a * n_ + b] >= 0; }
    std::optional<Elem> division_witness(Elem a, Elem b) const {
        if (div_wit_[a * n_ + b] < 0) return std::nullopt;
        return div_wit_[a * n_ + b];
    }

    /// Full-ring associates: mutual divisibility (R-module associates of R).
    bool associated(Elem a, Elem b) const {
        return divides(a, b) && divides(b, a);
    }
    /// Least element index in the full-ring associate class of a.
    Elem assoc_class_rep(Elem a) const { return assoc_rep_[a]; }

    /// True when the ring has no nonzero zero divisors (finite => field).
    bool is_domain() const;

    const std::string& element_name(Elem a) const { return names_[a]; }
    const nlohmann::json& construction() const { return construction_; }
    nlohmann::json to_json() const { return construction_; }

private:
    Ring() = default;
    void finish(int limit);    // validates axioms and fills derived caches
    void validate() const;

    int n_ = 0;
    Elem zero_ = 0, one_ = 0;
    std::vector<Elem> add_, mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;       // -1 for nonunits
    std::vector<Elem> units_;
    std::vector<Elem> div_wit_;   // witness c with b = a c, or -1
    std::vector<Elem> assoc_rep_;
    std::vector<std::string> names_;
    nlohmann::json construction_;
};

}  // namespace factorlab
