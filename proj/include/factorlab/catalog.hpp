#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "factorlab/transfer.hpp"

namespace factorlab {

struct CatalogBounds {
    int max_ring = 8;
    int max_module = 8;
};

/// Deterministic ring catalog: Z/n, the Galois fields GF(4), GF(8), GF(9),
/// and products Z/a x Z/b, all of carrier size <= max_ring, in a fixed order.
std::vector<RingPtr> catalog_rings(int max_ring);

/// Deterministic module catalog over one ring: the regular module, every
/// Z/d over Z/n, and quotients of the regular module by principal submodules
/// (deduplicated), all of carrier size <= max_module.
std::vector<ModulePtr> catalog_modules(const RingPtr& ring, int max_module);

/// Known theorem-checker names accepted by run_verify.
const std::vector<std::string>& verify_theorems();

struct VerifyResult {
    std::vector<CheckReport> reports;
    int instances = 0;       // (M, S, S') triples visited
    int pairs = 0;           // (M, S) pairs visited
    // per theorem: holds / vacuous / violations
    std::map<std::string, std::array<int, 3>> per_theorem;
    std::vector<std::string> coverage_warnings;

    int violations() const;
    nlohmann::json summary_json() const;
};

/// Runs every checker (or the selected ones) over the whole catalog:
/// all (M, S) pairs for the single-set theorems and all saturated S in S'
/// pairs for the transfer theorems. Deterministic report order regardless of
/// the worker count.
VerifyResult run_verify(const CatalogBounds& bounds,
                        std::vector<std::string> theorems = {},
                        int workers = 1);

/// Boolean predicate over the implemented (M, S) deciders; atoms:
/// presimplifiable, atomic, bfm, ffm, hfm, ufm, compactly_atomic,
/// semi_factorable, factorable, splits, s_meets_zm, s_avoids_zm, s_meets_zr,
/// s_avoids_zr, s_is_units, s_is_full. Operators ! & | (also not/and/or,
/// &&/||, and the UTF-8 glyphs for negation/conjunction/disjunction).
class Predicate {
public:
    static Predicate parse(const std::string& text);
    bool eval(const std::function<bool(const std::string&)>& atom) const;
    std::vector<std::string> atoms() const;
    const std::string& text() const { return text_; }

private:
    struct Node {
        enum { atom, negation, conjunction, disjunction } kind;
        std::string name;
        int a = -1, b = -1;
    };
    std::vector<Node> nodes_;
    int root_ = -1;
    std::string text_;
};

struct HuntSpec {
    std::string predicate;
    int max_ring = 8;
    int max_module = 8;
    long stop_after = -1;  // stop once this many witnesses found; -1 = exhaust
};

struct HuntResult {
    std::vector<nlohmann::json> witnesses;
    long scanned = 0;
    long cursor = 0;
    bool exhausted = true;
    nlohmann::json to_json() const;
};

/// Scans all catalog (M, S) pairs within bounds for the predicate, in a
/// fixed deterministic order; resumable through a checkpoint file (refuses
/// to resume from a checkpoint written for different spec parameters).
HuntResult hunt(const HuntSpec& spec, const std::string& checkpoint_path = "");

}  // namespace factorlab
