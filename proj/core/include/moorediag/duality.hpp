#pragma once

#include "moorediag/cj.hpp"

namespace moorediag {

// --- character duality ------------------------------------------------------

/// U* = Hom(U, Q/Z) for finite U, represented canonically by U itself; the
/// pairing below is what distinguishes an element from the character it
/// indexes. Throws InfiniteGroupError on Z factors.
FgGroup character_dual(const FgGroup& u);

/// <x, chi> = sum_j x_j chi_j / d_j in Q/Z (exact rational mod 1).
Rational character_pairing(const GroupElement& x, const GroupElement& chi);

/// f*: V* -> U* determined by <f(x), chi> = <x, f*(chi)>.
Hom dual_hom(const Hom& f);

/// J(B -> A -> C -> B) = (B* -> C* -> A* -> B*) with transposed structure
/// maps. Finite diagrams only.
ExtEtaDiagram j_dual(const ExtEtaDiagram& n);

/// The evaluation unit N -> J^2(N). In this representation J^2(N) equals N
/// on the nose, so the unit is the identity triple; it is still validated.
DiagramMorphism j_double_dual_unit(const ExtEtaDiagram& n);

// --- the self-adjoint dual on eta-diagrams ----------------------------------

/// Explicit presentation of the dual diagram:
///   B' = Hom(B, Z/4)
///   A' = pairs (g: B -> Z/2, h: C -> Z) with g chi = proj h
///   C' = pairs (f: A -> Z, g: B -> Z/2) with g chi eta = proj f
///   psi'(g) = (s g, 0), eta'(g, h) = (0, g), chi'(f, g) = t g,
/// where t: Z/2 -> Z/4 and s: Z/4 -> Z/2 are the unique nonzero maps. The
/// result always satisfies the extended eta-diagram relations; it need not
/// be exact. The interpreters decode canonical elements into their map
/// pairs and back.
class DeltaDual {
  public:
    explicit DeltaDual(const ExtEtaDiagram& n);

    const ExtEtaDiagram& source() const { return source_; }
    const ExtEtaDiagram& diagram() const { return diagram_; }

    std::pair<Hom, Hom> a_pair(const GroupElement& e) const;  // (g, h)
    Hom b_hom(const GroupElement& e) const;                   // g: B -> Z/4
    std::pair<Hom, Hom> c_pair(const GroupElement& e) const;  // (f, g)
    GroupElement a_elem(const Hom& g, const Hom& h) const;
    GroupElement b_elem(const Hom& g) const;
    GroupElement c_elem(const Hom& f, const Hom& g) const;

  private:
    ExtEtaDiagram source_, diagram_;
    HomGroup hb4_, hb2_, hcz_, haz_;
    DirectSum da_, dc_;
    Subgroup ka_, kc_;
};

/// The underlying diagram of DeltaDual.
ExtEtaDiagram delta_dual_explicit(const ExtEtaDiagram& n);

/// Contravariant functorial action: for m: N1 -> N2, the morphism
/// Delta(N2) -> Delta(N1) given by precomposition in every coordinate.
DiagramMorphism delta_dual_mor(const DeltaDual& d1, const DeltaDual& d2,
                               const DiagramMorphism& m);

/// The hom-set model: Delta(N)(x) = EED(N, F_{delta x}) with structure maps
/// induced by the representable morphisms.
ExtEtaDiagram delta_dual_abstract(const ExtEtaDiagram& n);

/// The canonical comparison Delta_explicit(N) -> Delta_abstract(N), sending
/// a pair of maps to the morphism into the representable it defines.
/// Componentwise bijective for every input.
DiagramMorphism delta_compare(const ExtEtaDiagram& n);

/// The unit kappa: N -> Delta(Delta(N)) of the self-adjunction, with
/// components derived from the evaluation pairing.
DiagramMorphism delta_unit(const ExtEtaDiagram& n);

/// Transpose of theta: M -> Delta(N) along the pairing form, landing in
/// EED(N, Delta(M)).
DiagramMorphism delta_transpose(const ExtEtaDiagram& m, const ExtEtaDiagram& n,
                                const DiagramMorphism& theta);

/// Verifies that the transpose gives a bijection
/// EED(M, Delta N) <-> EED(N, Delta M). Finite diagrams only.
bool delta_adjunction_check(const ExtEtaDiagram& m, const ExtEtaDiagram& n);

}  // namespace moorediag
