#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "moorediag/cj.hpp"
#include "oracles.hpp"

using namespace moorediag;
using Obj = CjObject;

namespace {

FgGroup G(const std::string& lit) { return FgGroup::parse(lit); }

// representative coefficients for each hom group (a small window for Z)
std::vector<Int> coeffs(Obj x, Obj y) {
    Int o = cj_hom_order(x, y);
    std::vector<Int> out;
    if (o.is_zero()) {
        for (long long v = -2; v <= 3; ++v) out.push_back(Int(v));
    } else {
        for (Int v(0); v < o; v += Int(1)) out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("the nine hom groups match the defining table") {
    CHECK(cj_hom(Obj::a, Obj::a) == G("Z"));
    CHECK(cj_hom(Obj::a, Obj::b) == G("Z/2"));
    CHECK(cj_hom(Obj::a, Obj::c) == G("0"));
    CHECK(cj_hom(Obj::b, Obj::a) == G("Z/2"));
    CHECK(cj_hom(Obj::b, Obj::b) == G("Z/4"));
    CHECK(cj_hom(Obj::b, Obj::c) == G("Z/2"));
    CHECK(cj_hom(Obj::c, Obj::a) == G("Z/2"));
    CHECK(cj_hom(Obj::c, Obj::b) == G("Z/2"));
    CHECK(cj_hom(Obj::c, Obj::c) == G("Z"));
}

TEST_CASE("defining relations") {
    CjMorphism rho = cj_make(Obj::a, Obj::b, 1);
    CjMorphism eta = cj_make(Obj::c, Obj::a, 1);
    CjMorphism beta = cj_make(Obj::b, Obj::c, 1);
    // beta rho = 0
    CHECK(cj_compose(beta, rho) == cj_zero(Obj::a, Obj::c));
    // rho eta beta = 2 * 1_b
    CHECK(cj_compose(rho, cj_compose(eta, beta)) == cj_make(Obj::b, Obj::b, 2));
    // generators are killed by 2
    CHECK(cj_make(Obj::a, Obj::b, 2).coeff.is_zero());
    CHECK(cj_make(Obj::c, Obj::a, 2).coeff.is_zero());
    CHECK(cj_make(Obj::b, Obj::c, 2).coeff.is_zero());
    // identity composition leaves morphisms unchanged
    for (Obj x : cj_objects())
        for (Obj y : cj_objects())
            for (const Int& c : coeffs(x, y)) {
                CjMorphism u = cj_make(x, y, c);
                CHECK(cj_compose(u, cj_identity(x)) == u);
                CHECK(cj_compose(cj_identity(y), u) == u);
            }
}

TEST_CASE("composition is associative and bilinear over all generator triples") {
    for (Obj w : cj_objects())
        for (Obj x : cj_objects())
            for (Obj y : cj_objects())
                for (Obj z : cj_objects())
                    for (const Int& c1 : coeffs(w, x))
                        for (const Int& c2 : coeffs(x, y))
                            for (const Int& c3 : coeffs(y, z)) {
                                CjMorphism f = cj_make(w, x, c1), g = cj_make(x, y, c2),
                                           h = cj_make(y, z, c3);
                                CHECK(cj_compose(cj_compose(h, g), f) ==
                                      cj_compose(h, cj_compose(g, f)));
                            }
    // bilinearity
    for (Obj x : cj_objects())
        for (Obj y : cj_objects())
            for (Obj z : cj_objects())
                for (const Int& c1 : coeffs(x, y))
                    for (const Int& c2 : coeffs(x, y))
                        for (const Int& c3 : coeffs(y, z)) {
                            CjMorphism f1 = cj_make(x, y, c1), f2 = cj_make(x, y, c2),
                                       g = cj_make(y, z, c3);
                            CHECK(cj_compose(g, cj_add(f1, f2)) ==
                                  cj_add(cj_compose(g, f1), cj_compose(g, f2)));
                        }
}

TEST_CASE("representable diagrams match the fixed displays") {
    SUBCASE("F_b") {
        ExtEtaDiagram fb = representable(Obj::b);
        CHECK(fb.A == G("Z/2"));
        CHECK(fb.B == G("Z/4"));
        CHECK(fb.C == G("Z/2"));
        CHECK(fb.eta == Hom::identity(G("Z/2")));
        CHECK(fb.chi.matrix() == Mat{{2}});
        CHECK(fb.psi.matrix() == Mat{{1}});
        CHECK(is_exact(fb));
    }
    SUBCASE("F_c") {
        ExtEtaDiagram fc = representable(Obj::c);
        CHECK(fc.A == G("0"));
        CHECK(fc.B == G("Z/2"));
        CHECK(fc.C == G("Z"));
        CHECK(fc.chi.matrix() == Mat{{1}});
        CHECK(fc.psi.is_zero());
        CHECK(is_exact(fc));
    }
    SUBCASE("F_a") {
        ExtEtaDiagram fa = representable(Obj::a);
        CHECK(fa.A == G("Z"));
        CHECK(fa.B == G("Z/2"));
        CHECK(fa.C == G("Z/2"));
        CHECK(fa.psi.is_zero());
        CHECK(fa.eta.matrix() == Mat{{1}});
        CHECK(fa.chi == Hom::identity(G("Z/2")));
        CHECK(is_exact(fa));
    }
    SUBCASE("evaluating F_w at x gives J(x, w)") {
        for (Obj w : cj_objects())
            for (Obj x : cj_objects())
                CHECK(cj_eval_obj(representable(w), x) == cj_hom(x, w));
    }
}

TEST_CASE("the morphism square between the representables") {
    // F_beta: F_b -> F_c
    DiagramMorphism fbeta = representable_mor(cj_make(Obj::b, Obj::c, 1));
    CHECK(fbeta.g->matrix() == Mat{{1}});  // Z/4 ->> Z/2
    CHECK(fbeta.f.matrix().rows() == 0);  // Z/2 -> 0
    CHECK(fbeta.h->is_zero());             // Z/2 -> Z is zero
    // F_eta: F_c -> F_a
    DiagramMorphism feta = representable_mor(cj_make(Obj::c, Obj::a, 1));
    CHECK(feta.g->matrix() == Mat{{1}});  // Z/2 -> Z/2
    CHECK(feta.h->matrix() == Mat{{1}});  // Z ->> Z/2
    // F_rho: F_a -> F_b
    DiagramMorphism frho = representable_mor(cj_make(Obj::a, Obj::b, 1));
    CHECK(frho.f.matrix() == Mat{{1}});   // Z ->> Z/2
    CHECK(frho.g->matrix() == Mat{{2}});  // Z/2 >--2--> Z/4
    CHECK(frho.h->matrix() == Mat{{1}});  // Z/2 -> Z/2
}

TEST_CASE("representable_mor is functorial") {
    for (Obj x : cj_objects()) {
        CHECK(representable_mor(cj_identity(x)) == identity_mor(representable(x)));
    }
    for (Obj x : cj_objects())
        for (Obj y : cj_objects())
            for (Obj z : cj_objects())
                for (const Int& c1 : coeffs(x, y))
                    for (const Int& c2 : coeffs(y, z)) {
                        CjMorphism u = cj_make(x, y, c1), v = cj_make(y, z, c2);
                        CHECK(representable_mor(cj_compose(v, u)) ==
                              compose_mor(representable_mor(v), representable_mor(u)));
                    }
}

TEST_CASE("functor evaluation of an EED") {
    ExtEtaDiagram fb = representable(Obj::b);
    // contravariant functoriality on sampled pairs
    for (Obj x : cj_objects())
        for (Obj y : cj_objects())
            for (Obj z : cj_objects())
                for (const Int& c1 : coeffs(x, y))
                    for (const Int& c2 : coeffs(y, z)) {
                        CjMorphism u = cj_make(x, y, c1), v = cj_make(y, z, c2);
                        CHECK(cj_eval_mor(fb, cj_compose(v, u)) ==
                              compose(cj_eval_mor(fb, u), cj_eval_mor(fb, v)));
                    }
}

TEST_CASE("yoneda bijection") {
    SUBCASE("EED(F_b, F_b) has 4 elements matching N(b) = Z/4") {
        ExtEtaDiagram fb = representable(Obj::b);
        auto morphisms = hom_set(fb, fb);
        CHECK(morphisms.size() == 4);
        std::set<GroupElement> values;
        for (const DiagramMorphism& m : morphisms) {
            GroupElement v = yoneda_evaluate(Obj::b, fb, m);
            values.insert(v);
            CHECK(yoneda_morphism(Obj::b, fb, v) == m);
        }
        CHECK(values.size() == 4);
    }
    SUBCASE("x = a against H(Z/2, Z/2): |N(a)| = 2") {
        ExtEtaDiagram n = spp_H(SppObject{G("Z/2"), G("Z/2")});
        for (const GroupElement& v : elements(n.A)) {
            DiagramMorphism m = yoneda_morphism(Obj::a, n, v);
            CHECK(yoneda_evaluate(Obj::a, n, m) == v);
        }
        CHECK(elements(n.A).size() == 2);
    }
    SUBCASE("the zero diagram gives a singleton") {
        FgGroup z;
        ExtEtaDiagram n{z, z, z, Hom::zero(z, z), Hom::zero(z, z), Hom::zero(z, z)};
        CHECK(hom_set(representable(Obj::b), n).size() == 1);
    }
}

TEST_CASE("delta is a contravariant involution") {
    CHECK(delta_obj(Obj::a) == Obj::c);
    CHECK(delta_obj(Obj::b) == Obj::b);
    CHECK(delta_obj(Obj::c) == Obj::a);
    // delta(rho) = beta
    CHECK(delta_mor(cj_make(Obj::a, Obj::b, 1)) == cj_make(Obj::b, Obj::c, 1));
    // delta(eta) = eta
    CHECK(delta_mor(cj_make(Obj::c, Obj::a, 1)) == cj_make(Obj::c, Obj::a, 1));
    // delta(2 * 1_b) = 2 * 1_b
    CHECK(delta_mor(cj_make(Obj::b, Obj::b, 2)) == cj_make(Obj::b, Obj::b, 2));
    for (Obj x : cj_objects())
        for (Obj y : cj_objects())
            for (const Int& c : coeffs(x, y)) {
                CjMorphism u = cj_make(x, y, c);
                CHECK(delta_mor(delta_mor(u)) == u);
            }
    // contravariance on all composable pairs
    for (Obj x : cj_objects())
        for (Obj y : cj_objects())
            for (Obj z : cj_objects())
                for (const Int& c1 : coeffs(x, y))
                    for (const Int& c2 : coeffs(y, z)) {
                        CjMorphism u = cj_make(x, y, c1), v = cj_make(y, z, c2);
                        CHECK(delta_mor(cj_compose(v, u)) ==
                              cj_compose(delta_mor(u), delta_mor(v)));
                    }
}
