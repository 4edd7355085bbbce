#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include <json.hpp>

#include "factorlab/module.hpp"
#include "factorlab/satset.hpp"

namespace factorlab {

enum class AssocKind { assoc, strong, very_strong };
enum class PrimKind { primitive, strongly_primitive, very_strongly_primitive };
enum class IrrKind { irreducible, strongly_irreducible, very_strongly_irreducible };

inline constexpr AssocKind kAssocKinds[] = {AssocKind::assoc, AssocKind::strong,
                                            AssocKind::very_strong};
inline constexpr PrimKind kPrimKinds[] = {PrimKind::primitive,
                                          PrimKind::strongly_primitive,
                                          PrimKind::very_strongly_primitive};
inline constexpr IrrKind kIrrKinds[] = {IrrKind::irreducible,
                                        IrrKind::strongly_irreducible,
                                        IrrKind::very_strongly_irreducible};

const char* to_string(AssocKind k);
const char* to_string(PrimKind k);
const char* to_string(IrrKind k);

/// S-associate relations on a module.
bool associates(const Module& M, const SatSet& S, Elem m, Elem n, AssocKind kind);

/// Full-ring associate relations (R as a module over itself, S = R).
bool ring_associated(const Ring& R, Elem a, Elem b, AssocKind kind);

/// S-primitivity; the very strong flavor uses the characterization
/// "m = s m' forces s a unit".
bool is_primitive(const Module& M, const SatSet& S, Elem m, PrimKind kind);

/// Irreducibility of a nonunit (full-ring associates); throws
/// Error("unit_input") on units.
bool is_irreducible(const Ring& R, Elem a, IrrKind kind);

/// m = s_1 ... s_k . tail with every scalar a nonunit in S.
struct Factorization {
    Elem target = -1;
    std::vector<Elem> scalars;
    Elem tail = -1;
    int length() const { return static_cast<int>(scalars.size()); }
    bool operator<(const Factorization& o) const {
        return std::tie(target, scalars, tail) <
               std::tie(o.target, o.scalars, o.tail);
    }
    bool operator==(const Factorization& o) const {
        return target == o.target && scalars == o.scalars && tail == o.tail;
    }
    nlohmann::json to_json() const {
        return {{"target", target}, {"scalars", scalars}, {"tail", tail}};
    }
};

/// Labeled divisibility graph on nonzero module elements: an edge m ->(s) n
/// for every m = s.n with s a nonunit in S. Walks of length k from m are in
/// correspondence with S-factorizations of m of length k.
struct FactorGraph {
    struct Edge {
        Elem label;
        Elem to;
    };
    std::vector<std::vector<Edge>> adj;  // indexed by module element id
    static FactorGraph build(const Module& M, const SatSet& S);
};

enum class EnumStatus { complete, unbounded, truncated };

struct EnumMode {
    enum Kind { all, atomic, compact } kind = all;
    IrrKind alpha = IrrKind::irreducible;
    PrimKind beta = PrimKind::primitive;
    static EnumMode All() { return {all, {}, {}}; }
    static EnumMode Atomic(IrrKind a = IrrKind::irreducible,
                           PrimKind b = PrimKind::primitive) {
        return {atomic, a, b};
    }
    static EnumMode Compact() { return {compact, {}, {}}; }
};

struct EnumResult {
    EnumStatus status = EnumStatus::complete;
    std::vector<Factorization> items;
    std::vector<Elem> cycle;  // nonempty when unbounded
};

/// All S-factorizations of m up to length max_len. Status is `unbounded`
/// (with a witness cycle) when arbitrarily long factorizations exist,
/// `truncated` when the finite set was not exhausted within the caps.
/// Compact mode: a single scalar (units allowed) and an S-primitive tail.
EnumResult enumerate_factorizations(const Module& M, const SatSet& S, Elem m,
                                    EnumMode mode, int max_len,
                                    std::size_t max_items = 100000);

/// Groups factorizations of one target by isomorphism: equal length, tails
/// S-associate, scalar multisets matching under full-ring associates.
std::vector<std::vector<std::size_t>> group_up_to_iso(
    const std::vector<Factorization>& fs, const Module& M, const SatSet& S);

struct PresimpWitness {
    Elem s = -1, m = -1;
};

/// Violation of "s m = m implies s unit or m = 0", if any.
std::optional<PresimpWitness> presimp_violation(const Module& M, const SatSet& S);
inline bool is_presimplifiable(const Module& M, const SatSet& S) {
    return !presimp_violation(M, S).has_value();
}

/// Per-element presimplifiability with r ranging over the whole ring
/// ("R is presimplifiable in E" reads, element by element, as
///  a = r a forces r a unit or a = 0). M must be the regular module.
bool element_presimplifiable(const Module& M, const SatSet& S, Elem m);

enum class Property {
    presimplifiable,
    atomic,
    bounded,
    half_factorial,
    finite_factorization,
    unique_factorization,
};
const char* to_string(Property p);

/// One-time analysis of a (module, satset) pair backing all exact deciders.
/// Holds a reference to the module; the module must outlive the analysis.
/// Not thread-safe per instance (internal caches); build one per thread.
class FactorAnalysis {
public:
    FactorAnalysis(const Module& M, SatSet S);

    const Module& module() const { return *mod_; }
    const SatSet& satset() const { return S_; }

    bool irreducible(Elem a, IrrKind kind) const {
        return irr_[static_cast<int>(kind)][a];
    }
    bool primitive(Elem m, PrimKind kind) const {
        return prim_[static_cast<int>(kind)][m];
    }
    /// Least element in the S-associate class of m.
    Elem s_assoc_rep(Elem m) const { return s_rep_[m]; }

    /// No arbitrarily long S-factorizations of m (m nonzero).
    bool bounded(Elem m) const;
    /// A cycle reachable from m in the all-factorization graph, or empty.
    std::vector<Elem> cycle_from(Elem m) const;
    bool atomic(Elem m, IrrKind alpha, PrimKind beta) const;
    /// Sorted lengths of (alpha,beta)-atomic factorizations of m;
    /// nullopt when infinitely many lengths occur.
    std::optional<std::vector<int>> atomic_lengths(Elem m, IrrKind alpha,
                                                   PrimKind beta) const;
    /// Number of isomorphism classes of S-atomic factorizations of m;
    /// nullopt when infinite. Counting stops at cap (reported as cap).
    std::optional<int> iso_class_count(Elem m, int cap = 64) const;
    /// All S-atomic factorizations of m (only valid when iso_class_count
    /// is finite); capped.
    std::vector<Factorization> atomic_factorizations(Elem m,
                                                     std::size_t cap = 10000) const;

    bool element_has_property(Elem m, Property p) const;

    const FactorGraph& graph() const { return graph_; }

private:
    struct PairInfo {
        std::vector<char> live;        // can reach a beta-primitive tail
        std::vector<char> cyclic;      // reaches a cycle in the pruned graph
        std::vector<std::optional<std::set<int>>> lengths;
    };
    const PairInfo& pair_info(IrrKind alpha, PrimKind beta) const;

    const Module* mod_;
    SatSet S_;
    FactorGraph graph_;
    std::vector<char> irr_[3];
    std::vector<char> prim_[3];
    std::vector<Elem> s_rep_;
    std::vector<char> all_cyclic_;  // reaches a cycle, all-mode
    mutable std::map<std::pair<int, int>, PairInfo> pair_cache_;
};

struct ClassReport {
    bool presimplifiable = false;
    std::optional<PresimpWitness> presimp_witness;
    bool atomic[3][3] = {};            // [alpha][beta]
    Elem atomic_witness[3][3];         // element without a factorization, or -1
    bool bfm = false;
    std::vector<Elem> bfm_cycle;
    bool ffm = false;
    Elem ffm_witness = -1;
    bool hfm = false;
    Elem hfm_witness = -1;
    std::vector<int> hfm_lengths;      // two differing lengths at the witness
    bool ufm = false;
    Elem ufm_witness = -1;

    bool is_atomic() const { return atomic[0][0]; }
    bool property(Property p) const;
    nlohmann::json to_json() const;
};

/// Exact classification of (M, S) with witnesses for every failed property.
ClassReport classify(const Module& M, const SatSet& S);

}  // namespace factorlab
