#pragma once

#include <memory>
#include <optional>
#include <set>
#include <vector>

#include <boost/rational.hpp>

#include "factorlab/factor.hpp"
#include "factorlab/report.hpp"
#include "factorlab/satset.hpp"

namespace factorlab {

/// Degree-bounded fragment of R = A + X B[X], with B a finite field and
/// A a subfield given by the elements of prime-subfield index range (or
/// A = B). Elements are coefficient vectors over B, constant term first,
/// length degree_bound + 1, with the constant term in A. Products that would
/// exceed the degree bound are rejected, never truncated; every quantifier
/// below is relativized to the fragment ("within degree d").
///
/// Irreducibility decided in the fragment is sound for deg f <= d: any
/// factor of f in R has degree <= deg f, so no factorization is lost to the
/// bound.
class AxB {
public:
    using Poly = std::vector<Elem>;  // size degree_bound + 1

    /// A must be B itself or a ring of prime size equal to char(B); its
    /// elements are identified with the ids 0..|A|-1 of B (the prime
    /// subfield in the base-p encoding).
    static AxB make(const RingPtr& A, const RingPtr& B, int degree_bound);

    const RingPtr& field() const { return B_; }
    int a_size() const { return a_; }
    int degree_bound() const { return d_; }

    Poly zero() const { return Poly(d_ + 1, B_->zero()); }
    Poly constant(Elem a) const;
    /// u X^n (u from B; n = 0 requires u in A).
    Poly monomial(Elem u, int n) const;

    bool in_fragment(const Poly& f) const;
    int deg(const Poly& f) const;  // -1 for the zero polynomial
    std::string name(const Poly& f) const;

    Poly add(const Poly& f, const Poly& g) const;
    /// Product, or nullopt when it leaves the fragment (degree overflow or
    /// constant term outside A).
    std::optional<Poly> mul(const Poly& f, const Poly& g) const;
    /// Exact quotient f / g within the fragment, if any (B is a field).
    std::optional<Poly> div(const Poly& f, const Poly& g) const;

    /// U(R) = U(A): nonzero constants of A.
    bool is_unit(const Poly& f) const;
    /// S = (U(B) cap A) u { u X^n : u in U(B), 1 <= n <= d }.
    bool in_S(const Poly& f) const;
    std::vector<Poly> s_elements() const;
    /// Full-ring associates: f = u g with u in U(A).
    bool associated(const Poly& f, const Poly& g) const;
    /// S-associates within the fragment.
    bool s_assoc(const Poly& f, const Poly& g) const;

    /// Specialized decider: f is S-primitive iff f(0) != 0 (subfield pairs).
    bool is_S_primitive(const Poly& f) const;
    /// Definitional decider: every in-fragment writing f = s g has g
    /// S-associate to f.
    bool is_S_primitive_scan(const Poly& f) const;

    /// The constructed compact factorization (s, g), s = u X^k with k the
    /// order of vanishing at 0 (s = 1 when f(0) != 0), g S-primitive.
    std::pair<Poly, Poly> compact_factor(const Poly& f) const;
    /// Exhaustive alternative scan: all (s, g) with s in S, g S-primitive,
    /// f = s g in the fragment.
    std::vector<std::pair<Poly, Poly>> compact_factorizations(const Poly& f) const;

    /// No in-fragment writing f = g h with both factors nonunits.
    bool irreducible(const Poly& f) const;
    /// All factorizations of f into irreducibles, each sorted canonically.
    std::vector<std::vector<Poly>> atomic_factorizations(const Poly& f) const;
    /// Number of classes under factor-wise association.
    int iso_classes(const std::vector<std::vector<Poly>>& fs) const;

    /// Deterministic enumeration of the whole fragment.
    std::vector<Poly> fragment() const;

private:
    AxB(RingPtr B, int a, int d);
    RingPtr B_;
    int a_;  // |A|; A = ids 0..a_-1 of B
    int d_;
    struct Cache;  // irreducibles and factorization memo, filled lazily
    std::shared_ptr<Cache> cache_;
};

/// Conditions (1)(2)(3) of the splitting criterion for (A, B), decided by
/// scan, with the conclusion "S splits R" cross-checked against the generic
/// in-fragment decider (semi-factorability plus primitivity of products).
CheckReport check_ex_splits(const RingPtr& A, const RingPtr& B,
                            int degree_bound);

/// The (Z, Q) pair: conditions (1) and (2) hold, condition (3) fails with
/// the witness 1/2 (exact rational membership check); S does not split R.
CheckReport check_ex_splits_zq();

/// B[X] is atomic / BF / FF / HF / UF iff B[X, X^-1] is so, checked within
/// the fragments of degree <= d (Laurent exponents -d..d) by brute-force
/// divisor scans, including the length relation
/// laurent lengths = polynomial lengths - ord_X(f).
CheckReport check_laurent_transfer(const RingPtr& B, int d, Property p);

/// Degree-bounded consequences of the main example theorem: atomicity,
/// half-factoriality, finite iso-class counts, and a non-UFD witness exactly
/// when |U(B)/U(A)| > 1; records |U(B)/U(A)| and the X^2 iso-class count.
CheckReport check_ex_main(const RingPtr& A, const RingPtr& B, int d);

using Rat = boost::rational<long long>;

/// X = 2^k (X / 2^k) in Z + X Q[X]: a length-k S-factorization of X with all
/// scalars the nonunit 2, certifying that no uniform bound exists up to k.
struct NonBfdWitness {
    int k = 0;
    std::vector<Rat> scalars;   // k copies of 2
    std::vector<Rat> tail;      // coefficients of the tail, constant first
    bool validate() const;      // exact rational recheck of the product
    nlohmann::json to_json() const;
};
NonBfdWitness axb_nonbfd_witness(int k, long long height_bound = 1ll << 40);

}  // namespace factorlab
