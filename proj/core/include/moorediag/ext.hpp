#pragma once

#include <optional>

#include "moorediag/fgab.hpp"

namespace moorediag {

/// A concrete short exact sequence V --i--> M --p--> U.
struct Extension {
    FgGroup V, M, U;
    Hom i;  // V -> M, injective
    Hom p;  // M -> U, surjective, with image(i) = kernel(p)
    /// Throws NotExactError when the invariants fail.
    void validate() const;
    bool is_valid() const;
};

/// An element of Ext(U, V) in the fixed decomposition over the finite
/// invariant factors d_j of U: one canonical coset in V/d_jV per factor.
/// Addition is componentwise (the Baer sum on the classification level).
struct ExtClass {
    FgGroup U, V;
    std::vector<GroupElement> cosets;

    bool is_zero() const;
    friend ExtClass operator+(const ExtClass& a, const ExtClass& b);
    friend ExtClass operator-(const ExtClass& a, const ExtClass& b);
    friend bool operator==(const ExtClass& a, const ExtClass& b) {
        return a.U == b.U && a.V == b.V && a.cosets == b.cosets;
    }
    friend bool operator!=(const ExtClass& a, const ExtClass& b) { return !(a == b); }
    friend bool operator<(const ExtClass& a, const ExtClass& b);
};

/// Ext(U, V) = direct sum of V/d_jV over the finite invariant factors of U,
/// with a lawful indexer between canonical group elements and ExtClass values.
class ExtGroup {
  public:
    ExtGroup(FgGroup u, FgGroup v);

    const FgGroup& U() const { return u_; }
    const FgGroup& V() const { return v_; }
    const FgGroup& group() const { return sum_.group; }
    size_t terms() const { return quots_.size(); }
    /// V/d_jV together with its projection from V.
    const Quotient& term(size_t j) const { return quots_[j]; }

    ExtClass zero_class() const;
    ExtClass elem_to_class(const GroupElement& e) const;
    GroupElement class_to_elem(const ExtClass& c) const;
    std::vector<ExtClass> all_classes() const;  // finite Ext groups only

  private:
    FgGroup u_, v_;
    std::vector<Quotient> quots_;
    DirectSum sum_;
};

/// The group Ext(U, V) alone.
FgGroup ext_group(const FgGroup& u, const FgGroup& v);

/// An extension with classify(realize(c)) == c, built from the presentation
/// M = (V + sum_j Z e_j) / <(d_j e_j - lift(v_j))>.
Extension realize(const ExtClass& c);

/// Canonical class of an extension: for each finite factor generator u_j of
/// order d_j picks p-preimage m and returns i^{-1}(d_j m) + d_j V. The result
/// is independent of the choices made.
ExtClass classify(const Extension& e);

/// Pushout f_* E along f: V -> V'.
Extension pushout(const Hom& f, const Extension& e);
/// Pullback h^* E along h: U' -> U.
Extension pullback(const Hom& h, const Extension& e);
/// Baer sum: codiagonal_* diagonal^* (E + E').
Extension baer_sum(const Extension& a, const Extension& b);

/// Class-level pushforward along f: V -> V' (componentwise on cosets).
ExtClass push_class(const Hom& f, const ExtClass& c);
/// Class-level pullback along h: U' -> U (via realize / pullback / classify).
ExtClass pull_class(const Hom& h, const ExtClass& c);

/// The connecting map Phi(E): U[2] -> V/2, u |-> i^{-1}(2 p^{-1}(u)) + 2V.
/// check=false skips revalidating the extension invariants (for callers that
/// just built the extension with realize).
Hom phi(const Extension& e, bool check = true);

/// The sequence V[2] -> M[2] -> U[2] -> V/2 -> M/2 -> U/2 attached to an
/// extension, with an exactness verdict for its four interior joints.
struct SixTerm {
    Subgroup v2, m2, u2;
    Quotient vq, mq, uq;
    Hom i2, p2, phi_map, ibar, pbar;
    bool exact_at(size_t joint) const;  // joints 0..3
    bool exact() const;
};
SixTerm six_term(const Extension& e);

/// A homomorphism g: M -> M' with g i = i' f and p' g = h p, when one exists
/// (solved as a linear congruence system); nullopt otherwise.
std::optional<Hom> middle_fill(const Extension& e, const Extension& e2, const Hom& f,
                               const Hom& h);

}  // namespace moorediag
