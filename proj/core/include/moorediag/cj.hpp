#pragma once

#include "moorediag/diagrams.hpp"

namespace moorediag {

/// The three objects of the category J.
enum class CjObject { a, b, c };

constexpr const char* cj_name(CjObject x) {
    return x == CjObject::a ? "a" : (x == CjObject::b ? "b" : "c");
}
std::vector<CjObject> cj_objects();

/// Morphism x -> y of J. Every hom group is cyclic with a fixed generator
/// (1_a, 1_b, 1_c on the diagonal; rho, eta, beta, eta*beta, rho*eta off it),
/// so a single canonically reduced coefficient determines the morphism.
struct CjMorphism {
    CjObject src, dst;
    Int coeff;
    friend bool operator==(const CjMorphism& u, const CjMorphism& v) {
        return u.src == v.src && u.dst == v.dst && u.coeff == v.coeff;
    }
    friend bool operator!=(const CjMorphism& u, const CjMorphism& v) { return !(u == v); }
};

/// The hom group J(x, y) per the defining table.
FgGroup cj_hom(CjObject x, CjObject y);
/// Cyclic order of J(x, y): 0 for Z, 1 for the zero group.
Int cj_hom_order(CjObject x, CjObject y);
/// Name of the fixed generator of J(x, y).
std::string cj_generator_name(CjObject x, CjObject y);

CjMorphism cj_make(CjObject src, CjObject dst, Int coeff);
CjMorphism cj_identity(CjObject x);
CjMorphism cj_zero(CjObject src, CjObject dst);
CjMorphism cj_add(const CjMorphism& u, const CjMorphism& v);
/// Bilinear composition g . f determined by beta rho = 0 and rho eta beta = 2.
CjMorphism cj_compose(const CjMorphism& g, const CjMorphism& f);
std::string cj_to_string(const CjMorphism& u);

/// The representable functor F_x = J(-, x) as an exact extended eta-diagram.
ExtEtaDiagram representable(CjObject x);
/// F_u: F_x -> F_y for u: x -> y.
DiagramMorphism representable_mor(const CjMorphism& u);

/// An EED as a functor J^op -> Ab: the value N(x) and the map
/// N(u): N(dst) -> N(src).
const FgGroup& cj_eval_obj(const ExtEtaDiagram& n, CjObject x);
Hom cj_eval_mor(const ExtEtaDiagram& n, const CjMorphism& u);

/// Yoneda: a morphism F_x -> N corresponds to its value at 1_x in N(x).
GroupElement yoneda_evaluate(CjObject x, const ExtEtaDiagram& n, const DiagramMorphism& m);
/// Inverse direction: the morphism with component w |-> (v |-> N(v)(value)).
DiagramMorphism yoneda_morphism(CjObject x, const ExtEtaDiagram& n, const GroupElement& value);

/// The contravariant involution: a <-> c, b fixed, rho <-> beta, eta fixed.
CjObject delta_obj(CjObject x);
CjMorphism delta_mor(const CjMorphism& u);

}  // namespace moorediag
