#include "moorediag/duality.hpp"

#include <set>

namespace moorediag {

namespace {

FgGroup z2() { return FgGroup::from_invariant_factors({Int(2)}); }
FgGroup z4() { return FgGroup::from_invariant_factors({Int(4)}); }
FgGroup zfree() { return FgGroup::from_invariant_factors({Int(0)}); }

Hom map_s() { return Hom::make(z4(), z2(), Mat{{1}}); }  // unique nonzero Z/4 -> Z/2
Hom map_t() { return Hom::make(z2(), z4(), Mat{{2}}); }  // unique nonzero Z/2 -> Z/4
Hom proj_z2() { return Hom::make(zfree(), z2(), Mat{{1}}); }

// h: X -> Z/2 with t h = q, for q: X -> Z/4 landing in 2(Z/4)
Hom halve_through_t(const Hom& q) {
    if (q.cod() != z4()) throw DomainError("halve_through_t: codomain must be Z/4");
    Mat m(1, q.dom().rank());
    for (size_t j = 0; j < q.dom().rank(); ++j) {
        const Int& v = q.matrix().at(0, j);
        if (!v.divisible_by(Int(2)))
            throw DomainError("halve_through_t: map does not land in 2(Z/4)");
        m.at(0, j) = v / Int(2);
    }
    return Hom::make(q.dom(), z2(), std::move(m));
}

}  // namespace

FgGroup character_dual(const FgGroup& u) {
    if (!u.is_finite()) throw InfiniteGroupError("character dual of " + u.to_string());
    return u;
}

Rational character_pairing(const GroupElement& x, const GroupElement& chi) {
    if (x.parent() != chi.parent())
        throw DomainError("character pairing: mismatched groups");
    if (!x.parent().is_finite())
        throw InfiniteGroupError("character pairing on " + x.parent().to_string());
    Rational sum;
    for (size_t j = 0; j < x.parent().rank(); ++j)
        sum = sum + Rational(x.coeffs()[j] * chi.coeffs()[j], x.parent().factor(j));
    return sum.mod1();
}

Hom dual_hom(const Hom& f) {
    const FgGroup& u = f.dom();
    const FgGroup& v = f.cod();
    if (!u.is_finite() || !v.is_finite())
        throw InfiniteGroupError("dual_hom needs finite groups");
    // <x, f*(chi)>_U = <f(x), chi>_V forces (f*)_{jk} = d_j M_{kj} / e_k
    Mat m(u.rank(), v.rank());
    for (size_t j = 0; j < u.rank(); ++j)
        for (size_t k = 0; k < v.rank(); ++k)
            m.at(j, k) = (u.factor(j) * f.matrix().at(k, j)).div_exact(v.factor(k));
    return Hom::make(v, u, std::move(m));
}

ExtEtaDiagram j_dual(const ExtEtaDiagram& n) {
    validate(n).require();
    if (!n.A.is_finite() || !n.B.is_finite() || !n.C.is_finite())
        throw InfiniteGroupError("j_dual needs a finite diagram");
    ExtEtaDiagram out{character_dual(n.C), character_dual(n.B), character_dual(n.A),
                      dual_hom(n.eta), dual_hom(n.psi), dual_hom(n.chi)};
    validate(out).require();
    return out;
}

DiagramMorphism j_double_dual_unit(const ExtEtaDiagram& n) {
    ExtEtaDiagram jj = j_dual(j_dual(n));
    if (jj != n) throw DomainError("internal: J^2 differs from the identity representation");
    DiagramMorphism unit = identity_mor(n);
    if (!commutes(n, jj, unit)) throw DomainError("internal: double-dual unit is not a morphism");
    return unit;
}

DeltaDual::DeltaDual(const ExtEtaDiagram& n)
    : source_(n),
      hb4_(n.B, z4()),
      hb2_(n.B, z2()),
      hcz_(n.C, zfree()),
      haz_(n.A, zfree()) {
    validate(n).require();

    // A' = ker( (g, h) |-> g chi - proj h )  inside Hom(B,Z/2) + Hom(C,Z)
    da_ = direct_sum({hb2_.group(), hcz_.group()});
    HomGroup hcz2(n.C, z2());
    Hom ta = compose(conjugation_map(hb2_, hcz2, Hom::identity(z2()), n.chi), da_.pr[0]) -
             compose(conjugation_map(hcz_, hcz2, proj_z2(), Hom::identity(n.C)), da_.pr[1]);
    ka_ = kernel(ta);

    // C' = ker( (f, g) |-> proj f - g chi eta )  inside Hom(A,Z) + Hom(B,Z/2)
    dc_ = direct_sum({haz_.group(), hb2_.group()});
    HomGroup ha2(n.A, z2());
    Hom tc = compose(conjugation_map(haz_, ha2, proj_z2(), Hom::identity(n.A)), dc_.pr[0]) -
             compose(conjugation_map(hb2_, ha2, Hom::identity(z2()), compose(n.chi, n.eta)),
                     dc_.pr[1]);
    kc_ = kernel(tc);

    // psi'(g) = (s g, 0)
    Hom psi_raw = compose(da_.in[0], conjugation_map(hb4_, hb2_, map_s(), Hom::identity(n.B)));
    Hom psi = corestrict(psi_raw, ka_.incl);
    // eta'(g, h) = (0, g)
    Hom eta_raw = compose(dc_.in[1], compose(da_.pr[0], ka_.incl));
    Hom eta = corestrict(eta_raw, kc_.incl);
    // chi'(f, g) = t g
    Hom chi = compose(conjugation_map(hb2_, hb4_, map_t(), Hom::identity(n.B)),
                      compose(dc_.pr[1], kc_.incl));

    diagram_ = ExtEtaDiagram{ka_.group, hb4_.group(), kc_.group, std::move(eta), std::move(chi),
                             std::move(psi)};
    validate(diagram_).require();
}

std::pair<Hom, Hom> DeltaDual::a_pair(const GroupElement& e) const {
    GroupElement x = ka_.incl(e);
    return {hb2_.elem_to_hom(da_.pr[0](x)), hcz_.elem_to_hom(da_.pr[1](x))};
}

Hom DeltaDual::b_hom(const GroupElement& e) const { return hb4_.elem_to_hom(e); }

std::pair<Hom, Hom> DeltaDual::c_pair(const GroupElement& e) const {
    GroupElement x = kc_.incl(e);
    return {haz_.elem_to_hom(dc_.pr[0](x)), hb2_.elem_to_hom(dc_.pr[1](x))};
}

GroupElement DeltaDual::a_elem(const Hom& g, const Hom& h) const {
    GroupElement x = da_.in[0](hb2_.hom_to_elem(g)) + da_.in[1](hcz_.hom_to_elem(h));
    auto e = preimage(ka_.incl, x);
    if (!e) throw DomainError("delta dual: pair does not satisfy the A' constraint");
    return *e;
}

GroupElement DeltaDual::b_elem(const Hom& g) const { return hb4_.hom_to_elem(g); }

GroupElement DeltaDual::c_elem(const Hom& f, const Hom& g) const {
    GroupElement x = dc_.in[0](haz_.hom_to_elem(f)) + dc_.in[1](hb2_.hom_to_elem(g));
    auto e = preimage(kc_.incl, x);
    if (!e) throw DomainError("delta dual: pair does not satisfy the C' constraint");
    return *e;
}

ExtEtaDiagram delta_dual_explicit(const ExtEtaDiagram& n) { return DeltaDual(n).diagram(); }

DiagramMorphism delta_dual_mor(const DeltaDual& d1, const DeltaDual& d2,
                               const DiagramMorphism& m) {
    const ExtEtaDiagram &n1 = d1.source(), &n2 = d2.source();
    if (!m.g || !m.h || !commutes(n1, n2, m))
        throw DomainError("delta_dual_mor: not an EED morphism");
    const ExtEtaDiagram &t1 = d1.diagram(), &t2 = d2.diagram();

    // every coordinate is precomposition along the corresponding component
    Mat mb(t1.B.rank(), t2.B.rank());
    for (size_t k = 0; k < t2.B.rank(); ++k) {
        Hom g = d2.b_hom(GroupElement::unit(t2.B, k));
        mb.set_col(k, d1.b_elem(compose(g, *m.g)).coeffs());
    }
    Mat ma(t1.A.rank(), t2.A.rank());
    for (size_t k = 0; k < t2.A.rank(); ++k) {
        auto [g, h] = d2.a_pair(GroupElement::unit(t2.A, k));
        ma.set_col(k, d1.a_elem(compose(g, *m.g), compose(h, *m.h)).coeffs());
    }
    Mat mc(t1.C.rank(), t2.C.rank());
    for (size_t k = 0; k < t2.C.rank(); ++k) {
        auto [f, g] = d2.c_pair(GroupElement::unit(t2.C, k));
        mc.set_col(k, d1.c_elem(compose(f, m.f), compose(g, *m.g)).coeffs());
    }
    DiagramMorphism out{Hom::make(t2.A, t1.A, std::move(ma)),
                        Hom::make(t2.B, t1.B, std::move(mb)),
                        Hom::make(t2.C, t1.C, std::move(mc))};
    if (!commutes(t2, t1, out))
        throw DomainError("internal: delta dual of a morphism does not commute");
    return out;
}

ExtEtaDiagram delta_dual_abstract(const ExtEtaDiagram& n) {
    validate(n).require();
    DiagramHomGroup ha(n, representable(delta_obj(CjObject::a)));  // EED(N, F_c)
    DiagramHomGroup hb(n, representable(delta_obj(CjObject::b)));  // EED(N, F_b)
    DiagramHomGroup hc(n, representable(delta_obj(CjObject::c)));  // EED(N, F_a)

    auto structure = [&](const DiagramHomGroup& src, const DiagramHomGroup& dst,
                         const CjMorphism& u) {
        // Delta(N)(u) is post-composition with F_{delta(u)}
        DiagramMorphism fu = representable_mor(delta_mor(u));
        Mat m(dst.group().rank(), src.group().rank());
        for (size_t k = 0; k < src.group().rank(); ++k) {
            DiagramMorphism phi = src.elem_to_mor(GroupElement::unit(src.group(), k));
            m.set_col(k, dst.mor_to_elem(compose_mor(fu, phi)).coeffs());
        }
        return Hom::make(src.group(), dst.group(), std::move(m));
    };
    // psi_abs = Delta(N)(rho): Delta(N)(b) -> Delta(N)(a), etc.
    Hom psi = structure(hb, ha, cj_make(CjObject::a, CjObject::b, Int(1)));
    Hom eta = structure(ha, hc, cj_make(CjObject::c, CjObject::a, Int(1)));
    Hom chi = structure(hc, hb, cj_make(CjObject::b, CjObject::c, Int(1)));
    ExtEtaDiagram out{ha.group(), hb.group(), hc.group(), std::move(eta), std::move(chi),
                      std::move(psi)};
    validate(out).require();
    return out;
}

DiagramMorphism delta_compare(const ExtEtaDiagram& n) {
    DeltaDual d(n);
    ExtEtaDiagram abs = delta_dual_abstract(n);
    ExtEtaDiagram fa = representable(CjObject::a), fb = representable(CjObject::b),
                  fc = representable(CjObject::c);
    DiagramHomGroup ha(n, fc), hb(n, fb), hc(n, fa);
    const ExtEtaDiagram& exp = d.diagram();

    Mat ma(abs.A.rank(), exp.A.rank());
    for (size_t k = 0; k < exp.A.rank(); ++k) {
        auto [g, h] = d.a_pair(GroupElement::unit(exp.A, k));
        DiagramMorphism m{Hom::zero(n.A, fc.A), g, h};
        ma.set_col(k, ha.mor_to_elem(m).coeffs());
    }
    Mat mb(abs.B.rank(), exp.B.rank());
    for (size_t k = 0; k < exp.B.rank(); ++k) {
        Hom g = d.b_hom(GroupElement::unit(exp.B, k));
        Hom h = halve_through_t(compose(g, n.chi));
        Hom f = compose(h, n.eta);
        DiagramMorphism m{std::move(f), g, std::move(h)};
        mb.set_col(k, hb.mor_to_elem(m).coeffs());
    }
    Mat mc(abs.C.rank(), exp.C.rank());
    for (size_t k = 0; k < exp.C.rank(); ++k) {
        auto [f, g] = d.c_pair(GroupElement::unit(exp.C, k));
        DiagramMorphism m{f, g, compose(g, n.chi)};
        mc.set_col(k, hc.mor_to_elem(m).coeffs());
    }
    DiagramMorphism out{Hom::make(exp.A, abs.A, std::move(ma)),
                        Hom::make(exp.B, abs.B, std::move(mb)),
                        Hom::make(exp.C, abs.C, std::move(mc))};
    if (!commutes(exp, abs, out))
        throw DomainError("internal: explicit/abstract comparison does not commute");
    if (!is_bijective(out.f) || !is_bijective(*out.g) || !is_bijective(*out.h))
        throw DomainError("internal: explicit/abstract comparison is not an isomorphism");
    return out;
}

DiagramMorphism delta_unit(const ExtEtaDiagram& n) {
    DeltaDual d1(n);
    DeltaDual d2(d1.diagram());
    const ExtEtaDiagram& dd = d2.diagram();

    // kappa_B(b) evaluates B' = Hom(B, Z/4) at b
    Mat mb(dd.B.rank(), n.B.rank());
    for (size_t j = 0; j < n.B.rank(); ++j) {
        GroupElement b = GroupElement::unit(n.B, j);
        Mat ev(1, d1.diagram().B.rank());
        for (size_t k = 0; k < d1.diagram().B.rank(); ++k)
            ev.at(0, k) = d1.b_hom(GroupElement::unit(d1.diagram().B, k))(b).coeffs()[0];
        Hom evaluation = Hom::make(d1.diagram().B, z4(), std::move(ev));
        mb.set_col(j, d2.b_elem(evaluation).coeffs());
    }

    // kappa_A(a) = (g |-> h_g(eta a), (f, g) |-> f(a))
    Mat ma(dd.A.rank(), n.A.rank());
    for (size_t j = 0; j < n.A.rank(); ++j) {
        GroupElement a = GroupElement::unit(n.A, j);
        GroupElement eta_a = n.eta(a);
        Mat gmat(1, d1.diagram().B.rank());
        for (size_t k = 0; k < d1.diagram().B.rank(); ++k) {
            Hom g = d1.b_hom(GroupElement::unit(d1.diagram().B, k));
            gmat.at(0, k) = halve_through_t(compose(g, n.chi))(eta_a).coeffs()[0];
        }
        Hom big_g = Hom::make(d1.diagram().B, z2(), std::move(gmat));
        Mat hmat(1, d1.diagram().C.rank());
        for (size_t k = 0; k < d1.diagram().C.rank(); ++k) {
            auto [f, g] = d1.c_pair(GroupElement::unit(d1.diagram().C, k));
            hmat.at(0, k) = f(a).coeffs()[0];
        }
        Hom big_h = Hom::make(d1.diagram().C, zfree(), std::move(hmat));
        ma.set_col(j, d2.a_elem(big_g, big_h).coeffs());
    }

    // kappa_C(c) = ((g, h) |-> h(c), g |-> h_g(c))
    Mat mc(dd.C.rank(), n.C.rank());
    for (size_t j = 0; j < n.C.rank(); ++j) {
        GroupElement c = GroupElement::unit(n.C, j);
        Mat fmat(1, d1.diagram().A.rank());
        for (size_t k = 0; k < d1.diagram().A.rank(); ++k) {
            auto [g, h] = d1.a_pair(GroupElement::unit(d1.diagram().A, k));
            fmat.at(0, k) = h(c).coeffs()[0];
        }
        Hom big_f = Hom::make(d1.diagram().A, zfree(), std::move(fmat));
        Mat gmat(1, d1.diagram().B.rank());
        for (size_t k = 0; k < d1.diagram().B.rank(); ++k) {
            Hom g = d1.b_hom(GroupElement::unit(d1.diagram().B, k));
            gmat.at(0, k) = halve_through_t(compose(g, n.chi))(c).coeffs()[0];
        }
        Hom big_g = Hom::make(d1.diagram().B, z2(), std::move(gmat));
        mc.set_col(j, d2.c_elem(big_f, big_g).coeffs());
    }

    DiagramMorphism out{Hom::make(n.A, dd.A, std::move(ma)),
                        Hom::make(n.B, dd.B, std::move(mb)),
                        Hom::make(n.C, dd.C, std::move(mc))};
    if (!commutes(n, dd, out)) throw DomainError("internal: delta unit does not commute");
    return out;
}

DiagramMorphism delta_transpose(const ExtEtaDiagram& m, const ExtEtaDiagram& n,
                                const DiagramMorphism& theta) {
    DeltaDual dn(n), dm(m);
    if (!commutes(m, dn.diagram(), theta))
        throw DomainError("delta_transpose: theta is not a morphism into Delta(N)");

    // values of theta on generators, decoded
    std::vector<Hom> gb;  // for each M.B generator: g: N.B -> Z/4
    for (size_t k = 0; k < m.B.rank(); ++k)
        gb.push_back(dn.b_hom((*theta.g)(GroupElement::unit(m.B, k))));
    std::vector<std::pair<Hom, Hom>> ac;  // for each M.A generator: (g, h) in A'_N
    for (size_t k = 0; k < m.A.rank(); ++k)
        ac.push_back(dn.a_pair(theta.f(GroupElement::unit(m.A, k))));
    std::vector<std::pair<Hom, Hom>> cc;  // for each M.C generator: (f, g) in C'_N
    for (size_t k = 0; k < m.C.rank(); ++k)
        cc.push_back(dn.c_pair((*theta.h)(GroupElement::unit(m.C, k))));

    const ExtEtaDiagram& dmd = dm.diagram();
    Mat tb(dmd.B.rank(), n.B.rank());
    for (size_t j = 0; j < n.B.rank(); ++j) {
        GroupElement nb = GroupElement::unit(n.B, j);
        Mat ev(1, m.B.rank());
        for (size_t k = 0; k < m.B.rank(); ++k) ev.at(0, k) = gb[k](nb).coeffs()[0];
        tb.set_col(j, dm.b_elem(Hom::make(m.B, z4(), std::move(ev))).coeffs());
    }
    Mat ta(dmd.A.rank(), n.A.rank());
    for (size_t j = 0; j < n.A.rank(); ++j) {
        GroupElement na = GroupElement::unit(n.A, j);
        GroupElement eta_na = n.eta(na);
        Mat gmat(1, m.B.rank());
        for (size_t k = 0; k < m.B.rank(); ++k)
            gmat.at(0, k) = halve_through_t(compose(gb[k], n.chi))(eta_na).coeffs()[0];
        Mat hmat(1, m.C.rank());
        for (size_t k = 0; k < m.C.rank(); ++k) hmat.at(0, k) = cc[k].first(na).coeffs()[0];
        ta.set_col(j, dm.a_elem(Hom::make(m.B, z2(), std::move(gmat)),
                                Hom::make(m.C, zfree(), std::move(hmat)))
                          .coeffs());
    }
    Mat tc(dmd.C.rank(), n.C.rank());
    for (size_t j = 0; j < n.C.rank(); ++j) {
        GroupElement nc = GroupElement::unit(n.C, j);
        Mat fmat(1, m.A.rank());
        for (size_t k = 0; k < m.A.rank(); ++k) fmat.at(0, k) = ac[k].second(nc).coeffs()[0];
        Mat gmat(1, m.B.rank());
        for (size_t k = 0; k < m.B.rank(); ++k)
            gmat.at(0, k) = halve_through_t(compose(gb[k], n.chi))(nc).coeffs()[0];
        tc.set_col(j, dm.c_elem(Hom::make(m.A, zfree(), std::move(fmat)),
                                Hom::make(m.B, z2(), std::move(gmat)))
                          .coeffs());
    }
    return DiagramMorphism{Hom::make(n.A, dmd.A, std::move(ta)),
                           Hom::make(n.B, dmd.B, std::move(tb)),
                           Hom::make(n.C, dmd.C, std::move(tc))};
}

bool delta_adjunction_check(const ExtEtaDiagram& m, const ExtEtaDiagram& n) {
    DeltaDual dn(n), dm(m);
    std::vector<DiagramMorphism> s1 = hom_set(m, dn.diagram());
    std::vector<DiagramMorphism> s2 = hom_set(n, dm.diagram());
    if (s1.size() != s2.size()) return false;
    DiagramHomGroup hg2(n, dm.diagram());
    std::set<GroupElement> images;
    for (const DiagramMorphism& theta : s1) {
        DiagramMorphism tau = delta_transpose(m, n, theta);
        if (!commutes(n, dm.diagram(), tau)) return false;
        // transposing twice returns theta
        DiagramMorphism back = delta_transpose(n, m, tau);
        if (back != theta) return false;
        images.insert(hg2.mor_to_elem(tau));
    }
    return images.size() == s1.size();
}

}  // namespace moorediag
