#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moorediag/errors.hpp"
#include "moorediag/matrix.hpp"
#include "moorediag/snf.hpp"

namespace moorediag {

/// A finitely generated abelian group in invariant-factor form: an ordered
/// list (d_1, ..., d_k) with every nonzero d_i >= 2, nonzero entries forming a
/// divisibility chain d_1 | d_2 | ..., and zero entries (infinite cyclic
/// factors) trailing. Two groups are isomorphic iff their lists are equal.
class FgGroup {
  public:
    FgGroup() = default;  // the zero group

    /// Validates the canonical-form invariants.
    static FgGroup from_invariant_factors(std::vector<Int> factors);

    size_t rank() const { return factors_.size(); }
    const std::vector<Int>& factors() const { return factors_; }
    const Int& factor(size_t i) const { return factors_[i]; }
    size_t torsion_rank() const;
    size_t free_rank() const { return rank() - torsion_rank(); }
    bool is_trivial() const { return factors_.empty(); }
    bool is_finite() const { return free_rank() == 0; }
    std::optional<Int> order() const;
    /// Largest invariant factor; 1 for the zero group. Finite groups only.
    Int exponent() const;

    friend bool operator==(const FgGroup& a, const FgGroup& b) { return a.factors_ == b.factors_; }
    friend bool operator!=(const FgGroup& a, const FgGroup& b) { return !(a == b); }
    friend bool operator<(const FgGroup& a, const FgGroup& b);

    /// Group literal: `0`, `Z`, `Z/n` joined by `+`, e.g. "Z/2+Z/4+Z".
    std::string to_string() const;
    /// Parses a literal and normalizes it to canonical form (so "Z/4+Z/2"
    /// and "Z/2+Z/3+Z/4" are accepted and reordered/merged).
    static FgGroup parse(const std::string& literal);

  private:
    std::vector<Int> factors_;
};

/// Element of an FgGroup; coefficient i is canonically reduced into
/// [0, d_i) whenever d_i != 0, which makes equality bitwise.
class GroupElement {
  public:
    GroupElement(FgGroup parent, std::vector<Int> coeffs);
    static GroupElement zero(FgGroup parent);
    static GroupElement unit(FgGroup parent, size_t i);

    const FgGroup& parent() const { return parent_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
    friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
    GroupElement operator-() const;
    GroupElement scaled(const Int& k) const;
    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.parent_ == b.parent_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
    friend bool operator<(const GroupElement& a, const GroupElement& b);

    std::string to_string() const;

  private:
    FgGroup parent_;
    std::vector<Int> coeffs_;
};

/// Homomorphism between FgGroups as an integer matrix: entry (i, j) maps
/// domain factor j into codomain factor i, reduced mod e_i when e_i != 0.
/// Construction enforces the well-definedness congruences
/// d_j * m_ij = 0 (mod e_i), where "mod 0" means "equals 0" and d_j = 0
/// imposes no condition.
class Hom {
  public:
    /// Throws IllDefinedError(i, j) on the first failing congruence.
    static Hom make(FgGroup dom, FgGroup cod, Mat m);
    static Hom zero(FgGroup dom, FgGroup cod);
    static Hom identity(FgGroup g);
    /// k times the identity.
    static Hom scalar(FgGroup g, const Int& k);

    const FgGroup& dom() const { return dom_; }
    const FgGroup& cod() const { return cod_; }
    const Mat& matrix() const { return m_; }

    GroupElement apply(const GroupElement& x) const;
    GroupElement operator()(const GroupElement& x) const { return apply(x); }

    friend Hom operator+(const Hom& a, const Hom& b);
    friend Hom operator-(const Hom& a, const Hom& b);
    Hom scaled(const Int& k) const;
    bool is_zero() const { return m_.is_zero(); }
    friend bool operator==(const Hom& a, const Hom& b) {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.m_ == b.m_;
    }
    friend bool operator!=(const Hom& a, const Hom& b) { return !(a == b); }

  private:
    FgGroup dom_, cod_;
    Mat m_;
};

/// g after f.
Hom compose(const Hom& g, const Hom& f);

/// Z^ngens modulo the column span of `relations`, expressed canonically.
/// to_canon * from_canon is the identity on canonical coordinates; to_canon
/// maps generator coordinates onto the quotient. A nonzero `mod` must
/// annihilate the quotient (exponent | mod); the computation then runs with
/// entries bounded by mod, which keeps large systems fast.
struct QuotientPresentation {
    FgGroup group;
    Mat to_canon;    // group.rank() x ngens
    Mat from_canon;  // ngens x group.rank()
};
QuotientPresentation quotient_presentation(size_t ngens, const Mat& relations,
                                           const Int& mod = Int(0),
                                           bool relations_span_mod = false);

/// Canonical form of an arbitrary list of cyclic orders (0 meaning Z),
/// with coordinate change matrices as witnesses.
QuotientPresentation make_group(const std::vector<Int>& cyclic_orders);

struct Subgroup {
    FgGroup group;
    Hom incl;  // injective, into the ambient group
};
struct Quotient {
    FgGroup group;
    Hom proj;  // surjective, from the ambient group
};

Subgroup kernel(const Hom& f);
Quotient cokernel(const Hom& f);
Subgroup image(const Hom& f);
/// U[2] = {u : 2u = 0} with its inclusion.
Subgroup two_torsion(const FgGroup& u);
/// U/2 with its projection.
Quotient mod_two(const FgGroup& u);
Quotient mod_n(const FgGroup& u, const Int& n);

std::optional<GroupElement> preimage(const Hom& f, const GroupElement& y);
/// Second deterministic preimage choice (shifted by a kernel generator when
/// one exists); used to assert choice-independence.
std::optional<GroupElement> preimage_alternative(const Hom& f, const GroupElement& y);

bool is_injective(const Hom& f);
bool is_surjective(const Hom& f);
bool is_bijective(const Hom& f);
/// Inverse of a bijective homomorphism.
Hom inverse(const Hom& f);

/// im(a) <= im(b) for two maps into the same group.
bool image_leq(const Hom& a, const Hom& b);
bool same_image(const Hom& a, const Hom& b);
/// Exactness of X --f--> Y --g--> Z at Y, i.e. im(f) = ker(g).
bool is_exact_at(const Hom& f, const Hom& g);

/// For surjective proj: X -> Q and f: X -> Y vanishing on ker(proj), the
/// induced map Q -> Y. Throws DomainError if f does not factor.
Hom factor_through_quotient(const Hom& proj, const Hom& f);
/// For incl: S -> Y injective and f: X -> Y with image inside S, the
/// corestriction X -> S. Throws DomainError if the image escapes S.
Hom corestrict(const Hom& f, const Hom& incl);

/// The map X[2] -> Y[2] induced by f: X -> Y.
Hom induced_on_two_torsion(const Hom& f);
/// The map X/2 -> Y/2 induced by f: X -> Y.
Hom induced_on_mod_two(const Hom& f);

struct DirectSum {
    FgGroup group;
    std::vector<Hom> in;  // injections part_k -> group
    std::vector<Hom> pr;  // projections group -> part_k
};
DirectSum direct_sum(const std::vector<FgGroup>& parts);

/// All elements of a finite group, in mixed-radix order.
/// Throws InfiniteGroupError when a zero factor is present.
std::vector<GroupElement> elements(const FgGroup& u);

/// Hom(U, V) as a canonical FgGroup together with a lawful two-way indexer
/// between its elements and Hom values (indexed addition agrees with
/// pointwise addition of homomorphisms).
class HomGroup {
  public:
    HomGroup(FgGroup dom, FgGroup cod);

    const FgGroup& group() const { return group_; }
    const FgGroup& dom() const { return dom_; }
    const FgGroup& cod() const { return cod_; }

    Hom elem_to_hom(const GroupElement& e) const;
    GroupElement hom_to_elem(const Hom& h) const;
    std::vector<Hom> generator_homs() const;

  private:
    struct RawFactor {
        size_t i, j;  // codomain factor i, domain factor j
        Int kappa;    // generator entry
        Int order;    // cyclic order of the component (0 = Z)
    };
    FgGroup dom_, cod_, group_;
    std::vector<RawFactor> raw_;
    Mat to_canon_, from_canon_;
};

/// Postcomposition Hom(U,V) -> Hom(U,W), g |-> post . g, as a map of the
/// canonical hom groups. `src` must be Hom(U,V) and `dst` Hom(U,W).
Hom hom_push(const HomGroup& src, const HomGroup& dst, const Hom& post);
/// Precomposition Hom(U,V) -> Hom(U',V), g |-> g . pre.
Hom hom_pull(const HomGroup& src, const HomGroup& dst, const Hom& pre);
/// Two-sided composition Hom(U,V) -> Hom(U',V'), g |-> post . g . pre.
Hom conjugation_map(const HomGroup& src, const HomGroup& dst, const Hom& post, const Hom& pre);

/// Isomorphism classes of abelian groups of exactly / at most the given
/// order, each appearing once, deterministically ordered.
std::vector<FgGroup> abelian_groups_of_order(long long n);
std::vector<FgGroup> abelian_groups_up_to_order(long long maxn);

}  // namespace moorediag
