#pragma once

#include <optional>

#include "moorediag/ext.hpp"

namespace moorediag {

/// A map eta: A -> C with 2*eta = 0.
struct EtaDiagram {
    FgGroup A, C;
    Hom eta;
    friend bool operator==(const EtaDiagram& a, const EtaDiagram& b) {
        return a.A == b.A && a.C == b.C && a.eta == b.eta;
    }
    friend bool operator!=(const EtaDiagram& a, const EtaDiagram& b) { return !(a == b); }
};

/// (A, B, phi: A -> B, psi: B -> A) with psi phi = 0 and phi psi = 2 id_B.
struct MooreDiagram {
    FgGroup A, B;
    Hom phi, psi;
    friend bool operator==(const MooreDiagram& a, const MooreDiagram& b) {
        return a.A == b.A && a.B == b.B && a.phi == b.phi && a.psi == b.psi;
    }
    friend bool operator!=(const MooreDiagram& a, const MooreDiagram& b) { return !(a == b); }
};

/// B --psi--> A --eta--> C --chi--> B with 2 eta = 0, psi chi = 0 and
/// chi eta psi = 2 id_B.
struct ExtEtaDiagram {
    FgGroup A, B, C;
    Hom eta;  // A -> C
    Hom chi;  // C -> B
    Hom psi;  // B -> A
    friend bool operator==(const ExtEtaDiagram& a, const ExtEtaDiagram& b) {
        return a.A == b.A && a.B == b.B && a.C == b.C && a.eta == b.eta && a.chi == b.chi &&
               a.psi == b.psi;
    }
    friend bool operator!=(const ExtEtaDiagram& a, const ExtEtaDiagram& b) { return !(a == b); }
};

/// Commuting component tuple between diagrams. h is absent for Moore-diagram
/// morphisms, g for eta-diagram morphisms.
struct DiagramMorphism {
    Hom f;
    std::optional<Hom> g, h;
    friend bool operator==(const DiagramMorphism& a, const DiagramMorphism& b) {
        return a.f == b.f && a.g == b.g && a.h == b.h;
    }
    friend bool operator!=(const DiagramMorphism& a, const DiagramMorphism& b) {
        return !(a == b);
    }
};

/// One line per defining relation; derived relations are reported separately
/// because a failure there indicates an internal inconsistency, not bad input.
struct ValidationReport {
    struct Line {
        std::string relation;
        bool holds;
        bool derived;
    };
    std::vector<Line> lines;
    bool ok() const;
    bool derived_ok() const;
    /// Throws RelationError on the first failing defining relation.
    void require() const;
};

ValidationReport validate(const EtaDiagram& d);
ValidationReport validate(const MooreDiagram& d);
ValidationReport validate(const ExtEtaDiagram& d);

/// The maps C/2 -> B -> A[2] induced by chi and psi (Lemma-level data used by
/// exactness checks and the attached extension).
struct EedInduced {
    Quotient c2;   // C/2
    Subgroup a2;   // A[2]
    Hom chi_bar;   // C/2 -> B
    Hom psi_bar;   // B -> A[2]
};
EedInduced eed_induced(const ExtEtaDiagram& n);

struct MooreInduced {
    Quotient a2q;  // A/2
    Subgroup a2t;  // A[2]
    Hom phi_bar;   // A/2 -> B
    Hom psi_bar;   // B -> A[2]
};
MooreInduced moore_induced(const MooreDiagram& m);

bool is_exact(const MooreDiagram& m);
bool is_exact(const ExtEtaDiagram& n);

/// The extension C/2 -> B -> A[2] attached to an exact EED.
Extension eed_extension(const ExtEtaDiagram& n);

/// Checks that Phi of the attached extension equals the induced map
/// eta-bar: A[2] -> C/2, and that the attached six-term sequence is exact.
struct PhiCheck {
    bool ok;
    std::string detail;  // names the first failing comparison
};
PhiCheck eeed_phi_check(const ExtEtaDiagram& n);

/// xi(u) = (0, chi'-bar . u . psi-bar, 0) for u: A[2] -> C'/2.
DiagramMorphism xi(const ExtEtaDiagram& n, const ExtEtaDiagram& n2, const Hom& u);

EtaDiagram pi(const ExtEtaDiagram& n);
DiagramMorphism pi_mor(const DiagramMorphism& m);

bool commutes(const EtaDiagram& s, const EtaDiagram& t, const DiagramMorphism& m);
bool commutes(const MooreDiagram& s, const MooreDiagram& t, const DiagramMorphism& m);
bool commutes(const ExtEtaDiagram& s, const ExtEtaDiagram& t, const DiagramMorphism& m);

DiagramMorphism identity_mor(const ExtEtaDiagram& n);
DiagramMorphism identity_mor(const MooreDiagram& m);
DiagramMorphism identity_mor(const EtaDiagram& d);
DiagramMorphism compose_mor(const DiagramMorphism& g, const DiagramMorphism& f);

/// Morphism group of a commuting-tuple system, with a lawful indexer. One
/// constructor per diagram kind; the equations are solved once as a single
/// linear congruence system via SNF, so infinite groups are supported at the
/// structural level.
class DiagramHomGroup {
  public:
    DiagramHomGroup(const ExtEtaDiagram& n, const ExtEtaDiagram& n2);
    DiagramHomGroup(const MooreDiagram& m, const MooreDiagram& m2);
    DiagramHomGroup(const EtaDiagram& d, const EtaDiagram& d2);

    const FgGroup& group() const { return sub_.group; }
    DiagramMorphism elem_to_mor(const GroupElement& e) const;
    GroupElement mor_to_elem(const DiagramMorphism& m) const;

  private:
    enum class Kind { Eed, Moore, Eta } kind_;
    std::vector<HomGroup> vars_;
    DirectSum vsum_;
    Subgroup sub_;  // solution subgroup of vsum_.group
};

/// All morphisms N -> N'. Throws InfiniteHomSetError when the morphism group
/// is infinite (use DiagramHomGroup for the group-level description then).
std::vector<DiagramMorphism> hom_set(const ExtEtaDiagram& n, const ExtEtaDiagram& n2);
std::vector<DiagramMorphism> hom_set(const EtaDiagram& d, const EtaDiagram& d2);
std::vector<DiagramMorphism> hom_set(const MooreDiagram& m, const MooreDiagram& m2);

/// Constructive fullness of pi: some (f, g, h) over a commuting (f, h).
/// Requires both diagrams exact.
DiagramMorphism lift_along_pi(const ExtEtaDiagram& n, const ExtEtaDiagram& n2, const Hom& f,
                              const Hom& h);

/// An exact EED over P, built by realizing the extension class whose Phi is
/// eta-bar; pi of the result equals P on the nose.
ExtEtaDiagram construct_eeed_over(const EtaDiagram& p);

/// Isomorphism testing by hom-set search for a morphism with all components
/// bijective (finite diagrams).
bool isomorphic(const ExtEtaDiagram& a, const ExtEtaDiagram& b);
bool isomorphic(const EtaDiagram& a, const EtaDiagram& b);
bool isomorphic(const MooreDiagram& a, const MooreDiagram& b);

// --- split Postnikov pairs -------------------------------------------------

struct SppObject {
    FgGroup A, C;
    friend bool operator==(const SppObject& a, const SppObject& b) {
        return a.A == b.A && a.C == b.C;
    }
    friend bool operator!=(const SppObject& a, const SppObject& b) { return !(a == b); }
};

/// (f, h, u) with u: A0[2] -> C1/2.
struct SppMorphism {
    SppObject src, dst;
    Hom f, h, u;
};

/// (f, h, u) with u an extension class in Ext(A0, C1).
struct SppPlusMorphism {
    SppObject src, dst;
    Hom f, h;
    ExtClass u;
};

SppMorphism spp_identity(const SppObject& x);
SppPlusMorphism spp_plus_identity(const SppObject& x);
SppMorphism spp_compose(const SppMorphism& m1, const SppMorphism& m0);
SppPlusMorphism spp_plus_compose(const SppPlusMorphism& m1, const SppPlusMorphism& m0);
/// Applies the Phi map to the extension-class component.
SppMorphism spp_plus_to_spp(const SppPlusMorphism& m);

/// H(A, C) = (C/2 + A[2] -> A -> C -> C/2 + A[2]) with eta = 0.
ExtEtaDiagram spp_H(const SppObject& x);
/// H on morphisms: g(c-bar, a) = (h(c-bar) + u(a), f(a)).
DiagramMorphism spp_H_mor(const SppMorphism& m);

// --- Moore diagrams vs EEDs ------------------------------------------------

ExtEtaDiagram emd_to_eeed(const MooreDiagram& m);

/// Backward direction of the equivalence, with the canonical isomorphism
/// A/2 -> C witnessing how eta factors. Throws NotInEmdPrimeError unless
/// eta is surjective with kernel 2A.
struct EmdFromEeed {
    MooreDiagram moore;
    Hom c_iso;  // A/2 -> C, bijective
};
EmdFromEeed eeed_to_emd(const ExtEtaDiagram& n);

/// The inverse of the bijection ED(pi N, pi N') -> Hom(A, A') for N in EMD':
/// reconstructs h from f via h(eta(a)) = eta'(f(a)).
Hom ed_completion(const ExtEtaDiagram& n, const ExtEtaDiagram& n2, const Hom& f);

MooreDiagram standard_emd(const FgGroup& a);

// --- degenerations ----------------------------------------------------------

/// Which of the degenerate strata an exact EED lies in, with the reduced
/// object for each detected case. Tags can overlap (the zero diagram carries
/// all of them).
struct DegenerateReport {
    bool chi_zero = false, psi_zero = false, eta_zero = false;
    bool a_zero = false, b_zero = false, c_zero = false;
    /// For eta = 0: the pair (A, C) plus a section of psi-bar splitting
    /// C/2 -> B -> A[2].
    std::optional<SppObject> spp;
    std::optional<Hom> spp_section;
    /// For chi = 0: the isomorphism psi-bar: B -> A[2].
    std::optional<Hom> psi_bar_iso;
    /// For psi = 0: the isomorphism chi-bar: C/2 -> B.
    std::optional<Hom> chi_bar_iso;
};
DegenerateReport classify_degenerate(const ExtEtaDiagram& n);

}  // namespace moorediag
