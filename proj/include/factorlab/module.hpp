#pragma once

#include <vector>

#include <json.hpp>

#include "factorlab/ring.hpp"

namespace factorlab {

class Module;
using ModulePtr = std::shared_ptr<const Module>;

/// A finite unitary module over a Ring, table-backed and validated
/// exhaustively at construction. Modules are nonzero: carrier size >= 2.
class Module {
public:
    /// R viewed as a module over itself.
    static ModulePtr regular(const RingPtr& ring);
    /// Z/m over Z/n via reduction; requires ring = zmod(n) and m | n, m >= 2.
    static ModulePtr zmod_over(int m, const RingPtr& ring);
    /// Quotient by an explicit submodule (validated).
    static ModulePtr quotient(const ModulePtr& mod,
                              const std::vector<Elem>& submodule);
    static ModulePtr product(const ModulePtr& a, const ModulePtr& b,
                             int limit = kDefaultCarrierLimit);
    static ModulePtr from_table(RingPtr ring, std::vector<Elem> add,
                                std::vector<Elem> act, Elem zero,
                                nlohmann::json construction,
                                std::vector<std::string> names = {},
                                int limit = kDefaultCarrierLimit);
    static ModulePtr from_json(const nlohmann::json& j, const RingPtr& ring);

    const RingPtr& ring() const { return ring_; }
    int size() const { return k_; }
    Elem zero() const { return zero_; }
    Elem add(Elem m, Elem n) const { return add_[m * k_ + n]; }
    /// Scalar action r . m.
    Elem act(Elem r, Elem m) const { return act_[r * k_ + m]; }

    /// Ann(N) = { r : r m = 0 for all m in N }.
    std::vector<Elem> ann_of_subset(const std::vector<Elem>& N) const;
    /// Ann_M(r) = { m : r m = 0 }.
    std::vector<Elem> ann_of_scalar(Elem r) const;
    /// Z(N) = { r : exists 0 != m in N with r m = 0 }.
    std::vector<Elem> zero_divisors(const std::vector<Elem>& N) const;
    std::vector<Elem> carrier() const;
    bool is_submodule(const std::vector<Elem>& subset) const;

    const std::string& element_name(Elem m) const { return names_[m]; }
    const nlohmann::json& construction() const { return construction_; }
    nlohmann::json to_json() const { return construction_; }

private:
    Module() = default;
    void finish(int limit);

    RingPtr ring_;
    int k_ = 0;
    Elem zero_ = 0;
    std::vector<Elem> add_;   // k x k
    std::vector<Elem> act_;   // |R| x k
    std::vector<std::string> names_;
    nlohmann::json construction_;
};

}  // namespace factorlab
