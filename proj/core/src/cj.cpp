#include "moorediag/cj.hpp"

namespace moorediag {

namespace {

using Obj = CjObject;

int idx(Obj x) { return static_cast<int>(x); }

// cyclic orders of the nine hom groups, row = source, column = target
// (0 encodes Z, 1 the zero group)
constexpr long long kHomOrder[3][3] = {
    /* a -> */ {0, 2, 1},
    /* b -> */ {2, 4, 2},
    /* c -> */ {2, 2, 0},
};

constexpr const char* kGenName[3][3] = {
    {"1_a", "rho", "0"},
    {"eta*beta", "1_b", "beta"},
    {"eta", "rho*eta", "1_c"},
};

// coefficient of gen(x,z) in gen(y,z) . gen(x,y); composition is generated
// by beta rho = 0 and rho eta beta = 2 * 1_b
Int gen_mult(Obj x, Obj y, Obj z) {
    if (cj_hom_order(x, y).is_one() || cj_hom_order(y, z).is_one()) return Int(0);
    if (x == y || y == z) return Int(1);  // composing with an identity generator
    struct Entry {
        Obj x, y, z;
        long long c;
    };
    static constexpr Entry table[] = {
        {Obj::a, Obj::b, Obj::a, 0},  // (eta beta) rho = 0
        {Obj::a, Obj::b, Obj::c, 0},  // beta rho = 0
        {Obj::b, Obj::a, Obj::b, 2},  // rho (eta beta) = 2
        {Obj::b, Obj::c, Obj::b, 2},  // (rho eta) beta = 2
        {Obj::b, Obj::c, Obj::a, 1},  // eta beta
        {Obj::c, Obj::a, Obj::b, 1},  // rho eta
        {Obj::c, Obj::b, Obj::a, 0},  // (eta beta)(rho eta) = 0
        {Obj::c, Obj::b, Obj::c, 0},  // beta (rho eta) = 0
    };
    for (const Entry& e : table)
        if (e.x == x && e.y == y && e.z == z) return Int(e.c);
    throw DomainError("cj: missing composition entry");
}

}  // namespace

std::vector<CjObject> cj_objects() { return {Obj::a, Obj::b, Obj::c}; }

Int cj_hom_order(CjObject x, CjObject y) { return Int(kHomOrder[idx(x)][idx(y)]); }

FgGroup cj_hom(CjObject x, CjObject y) {
    Int o = cj_hom_order(x, y);
    if (o.is_one()) return FgGroup();
    return FgGroup::from_invariant_factors({o});
}

std::string cj_generator_name(CjObject x, CjObject y) { return kGenName[idx(x)][idx(y)]; }

CjMorphism cj_make(CjObject src, CjObject dst, Int coeff) {
    Int o = cj_hom_order(src, dst);
    if (o.is_one()) coeff = Int(0);
    return CjMorphism{src, dst, Int::mod_reduce(coeff, o)};
}

CjMorphism cj_identity(CjObject x) { return cj_make(x, x, Int(1)); }

CjMorphism cj_zero(CjObject src, CjObject dst) { return cj_make(src, dst, Int(0)); }

CjMorphism cj_add(const CjMorphism& u, const CjMorphism& v) {
    if (u.src != v.src || u.dst != v.dst) throw DomainError("cj: sum of unparallel morphisms");
    return cj_make(u.src, u.dst, u.coeff + v.coeff);
}

CjMorphism cj_compose(const CjMorphism& g, const CjMorphism& f) {
    if (f.dst != g.src) throw DomainError("cj: composition endpoint mismatch");
    return cj_make(f.src, g.dst, gen_mult(f.src, f.dst, g.dst) * f.coeff * g.coeff);
}

std::string cj_to_string(const CjMorphism& u) {
    if (u.coeff.is_zero()) return "0";
    std::string g = cj_generator_name(u.src, u.dst);
    if (u.coeff.is_one()) return g;
    return u.coeff.to_string() + "*" + g;
}

ExtEtaDiagram representable(CjObject x) {
    FgGroup A = cj_hom(Obj::a, x), B = cj_hom(Obj::b, x), C = cj_hom(Obj::c, x);
    auto component = [&](Obj w, Obj wx, const FgGroup& dom, const FgGroup& cod) {
        // F_x(gen(w, wx)): J(wx, x) -> J(w, x), v |-> v . gen
        Mat m(cod.rank(), dom.rank());
        if (m.rows() && m.cols()) m.at(0, 0) = gen_mult(w, wx, x);
        return Hom::make(dom, cod, std::move(m));
    };
    Hom psi = component(Obj::a, Obj::b, B, A);  // precompose with rho
    Hom eta = component(Obj::c, Obj::a, A, C);  // precompose with eta
    Hom chi = component(Obj::b, Obj::c, C, B);  // precompose with beta
    ExtEtaDiagram n{A, B, C, std::move(eta), std::move(chi), std::move(psi)};
    validate(n).require();
    return n;
}

DiagramMorphism representable_mor(const CjMorphism& u) {
    ExtEtaDiagram fx = representable(u.src), fy = representable(u.dst);
    auto component = [&](Obj w, const FgGroup& dom, const FgGroup& cod) {
        Mat m(cod.rank(), dom.rank());
        if (m.rows() && m.cols()) m.at(0, 0) = gen_mult(w, u.src, u.dst) * u.coeff;
        return Hom::make(dom, cod, std::move(m));
    };
    DiagramMorphism out{component(Obj::a, fx.A, fy.A), component(Obj::b, fx.B, fy.B),
                        component(Obj::c, fx.C, fy.C)};
    if (!commutes(fx, fy, out)) throw DomainError("internal: representable morphism is invalid");
    return out;
}

const FgGroup& cj_eval_obj(const ExtEtaDiagram& n, CjObject x) {
    switch (x) {
        case Obj::a: return n.A;
        case Obj::b: return n.B;
        default: return n.C;
    }
}

Hom cj_eval_mor(const ExtEtaDiagram& n, const CjMorphism& u) {
    const FgGroup& dom = cj_eval_obj(n, u.dst);
    const FgGroup& cod = cj_eval_obj(n, u.src);
    Hom base = [&]() -> Hom {
        switch (idx(u.src) * 3 + idx(u.dst)) {
            case 0: return Hom::identity(n.A);                  // 1_a
            case 4: return Hom::identity(n.B);                  // 1_b
            case 8: return Hom::identity(n.C);                  // 1_c
            case 1: return n.psi;                               // rho: N(b) -> N(a)
            case 6: return n.eta;                               // eta: N(a) -> N(c)
            case 5: return n.chi;                               // beta: N(c) -> N(b)
            case 3: return compose(n.chi, n.eta);               // eta*beta: N(a) -> N(b)
            case 7: return compose(n.eta, n.psi);               // rho*eta: N(b) -> N(c)
            default: return Hom::zero(dom, cod);                // the zero hom group (a, c)
        }
    }();
    return base.scaled(u.coeff);
}

GroupElement yoneda_evaluate(CjObject x, const ExtEtaDiagram& n, const DiagramMorphism& m) {
    ExtEtaDiagram fx = representable(x);
    if (!commutes(fx, n, m)) throw DomainError("yoneda: not a morphism from the representable");
    GroupElement one = GroupElement::unit(cj_eval_obj(fx, x), 0);
    switch (x) {
        case Obj::a: return m.f(one);
        case Obj::b: return (*m.g)(one);
        default: return (*m.h)(one);
    }
}

DiagramMorphism yoneda_morphism(CjObject x, const ExtEtaDiagram& n, const GroupElement& value) {
    if (value.parent() != cj_eval_obj(n, x)) throw DomainError("yoneda: value not in N(x)");
    ExtEtaDiagram fx = representable(x);
    auto component = [&](Obj w) {
        const FgGroup& dom = cj_eval_obj(fx, w);  // J(w, x)
        const FgGroup& cod = cj_eval_obj(n, w);
        Mat m(cod.rank(), dom.rank());
        if (dom.rank()) {
            GroupElement img = cj_eval_mor(n, cj_make(w, x, Int(1)))(value);
            m.set_col(0, img.coeffs());
        }
        return Hom::make(dom, cod, std::move(m));
    };
    DiagramMorphism out{component(Obj::a), component(Obj::b), component(Obj::c)};
    if (!commutes(fx, n, out)) throw DomainError("internal: yoneda morphism is invalid");
    return out;
}

CjObject delta_obj(CjObject x) {
    switch (x) {
        case Obj::a: return Obj::c;
        case Obj::b: return Obj::b;
        default: return Obj::a;
    }
}

CjMorphism delta_mor(const CjMorphism& u) {
    return cj_make(delta_obj(u.dst), delta_obj(u.src), u.coeff);
}

}  // namespace moorediag
