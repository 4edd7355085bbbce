#pragma once

#include <memory>
#include <string>
#include <vector>

#include "factorlab/localize.hpp"
#include "factorlab/split.hpp"

namespace factorlab {

/// A quadruple (R, M, S, S') with S a subset of S', together with the derived
/// localized objects R_S, M_S and T = S^{-1}S', and the hypothesis flags of
/// the transfer theorems, all evaluated eagerly at construction.
///
/// Localized objects and classification reports are built lazily (they are
/// only well defined / affordable under the corresponding hypotheses) and
/// cached; an instance is therefore not safe to share across threads.
class TransferInstance {
public:
    static TransferInstance build(const ModulePtr& mod, SatSet S, SatSet Sprime);

    ModulePtr mod;
    SatSet S, Sprime;
    std::vector<Elem> ann;  // Ann(M)
    std::vector<Elem> E;    // S' \ Ann(M)

    // hypothesis flags
    bool s_splits_m = false;       // S splits M
    bool semi_factorable = false;  // M semi-S-factorable
    bool s_avoids_zm = false;      // S cap Z(M) empty
    bool s_avoids_zr = false;      // S cap Z(R) empty
    bool e_compactly_atomic = false;  // S' \ Ann(M) compactly S-atomic
    bool s_splits_e = false;          // S splits S' \ Ann(M)

    /// R as a module over itself (cached).
    const ModulePtr& reg() const;
    const LocalizedRing& RS() const;
    const LocalizedModule& MS() const;
    const SatSet& T() const;

    /// Independently computed classifications of the three sides.
    const ClassReport& classify_s() const;
    const ClassReport& classify_sprime() const;
    const ClassReport& classify_loc() const;

    const FactorAnalysis& fa_s() const;
    const FactorAnalysis& fa_sprime() const;
    const FactorAnalysis& fa_loc() const;

    /// Content hash of the instance (FNV-1a over the canonical JSON).
    std::string id() const;
    nlohmann::json to_json() const;

private:
    TransferInstance(ModulePtr m, SatSet s, SatSet sp);

    mutable ModulePtr reg_;
    mutable std::shared_ptr<LocalizedRing> rs_;
    mutable std::shared_ptr<LocalizedModule> ms_;
    mutable std::shared_ptr<SatSet> t_;
    mutable std::shared_ptr<ClassReport> cls_s_, cls_sp_, cls_loc_;
    mutable std::shared_ptr<FactorAnalysis> fa_s_, fa_sp_, fa_loc_;
};

/// r/1 is alpha in R_S iff the primitive part a of the compact factorization
/// r = sa is alpha in R, for r in (S' \ Ann(M)) \ S.
CheckReport check_prop_irr(const TransferInstance& inst, Elem r, IrrKind alpha);
/// The same equivalence swept over every admissible r and every alpha.
CheckReport check_prop_irr_all(const TransferInstance& inst);

/// m/1 is T-beta in M_S iff the primitive part n of the compact
/// factorization m = sn is S'-beta in M, for nonzero m.
CheckReport check_prop_prim(const TransferInstance& inst, Elem m, PrimKind beta);
CheckReport check_prop_prim_all(const TransferInstance& inst);

/// The two auxiliary lemmas plus the associate-transfer lemma:
/// S'-primitivity descends to S-primitivity; S'-UFM/HFM/FFM force S-BFM and
/// S-BFM forces R \ Ann(M) compactly S-atomic; associate classes transfer
/// between R and R_S (resp. M and M_S) on irreducibles / primitives.
CheckReport check_lemmas(const TransferInstance& inst);

/// Atomicity transfer: (alpha,beta)-S'-atomic implies (alpha, very strongly
/// primitive)-S-atomic; with S avoiding Z(M) and Z(R), (alpha,beta)-S'-atomic
/// iff (alpha, primitive)-S-atomic and M_S (alpha,beta)-T-atomic.
CheckReport check_thm_atomic(const TransferInstance& inst, IrrKind alpha,
                             PrimKind beta);

/// Property transfer for P: S'-P implies S-P (semi-factorable, S avoiding
/// Z(M)); and the three-way equivalence of the main corollary
///   M has P wrt S'  <=>  M has P wrt S and M_S has P wrt T
///                   <=>  R has P in S \ Ann(M) and M_S has P wrt T
/// for P in {UF, FF, HF, BF} always and {presimplifiable, atomic} when
/// S' \ Ann(M) is compactly S-atomic.
CheckReport check_transfer(const TransferInstance& inst, Property p);

}  // namespace factorlab
