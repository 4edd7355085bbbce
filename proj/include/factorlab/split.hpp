#pragma once

#include <optional>
#include <vector>

#include "factorlab/factor.hpp"
#include "factorlab/report.hpp"

namespace factorlab {

/// m = s n with s in S (units allowed) and n S-primitive.
struct CompactPair {
    Elem s = -1, n = -1;
    bool operator==(const CompactPair& o) const {
        return s == o.s && n == o.n;
    }
};

/// All compact S-atomic factorizations of a nonzero m.
std::vector<CompactPair> compact_factorizations(const Module& M, const SatSet& S,
                                                Elem m);

struct SplitVerdict {
    std::vector<Elem> E;
    bool compactly_atomic = false;
    bool semi_factorable = false;
    bool factorable = false;
    bool splits = false;

    Elem no_compact_witness = -1;  // element of E without a compact fact.
    struct PairClash {             // m = s n = s' n' witnessing a failure
        Elem m;
        CompactPair a, b;
    };
    std::optional<PairClash> semi_witness;  // s !~ s'
    std::optional<PairClash> fact_witness;  // n !~s n'
    struct SplitClash {                     // primitive r, m with rm in E
        Elem r, m;                          // and rm not primitive
    };
    std::optional<SplitClash> split_witness;

    nlohmann::json to_json() const;
};

/// Classifies E as compactly S-atomic / semi-S-factorable / S-factorable and
/// decides whether S splits E (condition (2) evaluated relative to E).
SplitVerdict analyze_subset(const Module& M, const SatSet& S,
                            const std::vector<Elem>& E);

/// "R has property p in E": every nonzero nonunit of E, through full-ring
/// (S = R) factorizations; presimplifiability reads a = ra => r unit or a = 0
/// with r over the whole ring.
bool ring_has_property_in(const RingPtr& R, const std::vector<Elem>& E,
                          Property p);

/// Semi-factorable subsets: S-primitive elements are very strongly so;
/// S-factorability when S avoids Z(M); with E = M, presimplifiability and
/// the collapse of irreducibility/associativity flavors on S \ Z(M).
CheckReport check_prop_semi_elem(const Module& M, const SatSet& S);

/// M has p with respect to S iff R has p in S \ Ann(M), for semi-factorable
/// M with S avoiding Z(M); the weakened one-directional variants are
/// evaluated whenever their own hypotheses hold.
CheckReport check_thm_SX(const Module& M, const SatSet& S, Property p);

/// Semi-factorable + S avoiding Z(M) forces S-presimplifiability.
CheckReport check_cor_split_pre(const Module& M, const SatSet& S);

/// On a domain: the classical splitting condition (x = as with
/// aR cap tR = atR) versus "S splits R"; also (*) for every S-primitive r.
/// Finite domains are fields; Error("not_domain") otherwise.
CheckReport check_splitting_equiv_domain(const RingPtr& R, const SatSet& S);

/// If S splits M and S' \ Ann(M) is compactly S-atomic, then S splits
/// S' \ Ann(M); with S' = R it also splits R/Ann(M).
CheckReport check_prop_M_split(const Module& M, const SatSet& S,
                               const SatSet& Sprime);

}  // namespace factorlab
