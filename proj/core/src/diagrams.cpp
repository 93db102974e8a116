#include "moorediag/diagrams.hpp"

namespace moorediag {

bool ValidationReport::ok() const {
    for (const Line& l : lines)
        if (!l.derived && !l.holds) return false;
    return true;
}

bool ValidationReport::derived_ok() const {
    for (const Line& l : lines)
        if (l.derived && !l.holds) return false;
    return true;
}

void ValidationReport::require() const {
    for (const Line& l : lines)
        if (!l.holds) throw RelationError(l.relation);
}

ValidationReport validate(const EtaDiagram& d) {
    ValidationReport r;
    if (d.eta.dom() != d.A || d.eta.cod() != d.C) throw DomainError("eta has wrong endpoints");
    r.lines.push_back({"2*eta = 0", d.eta.scaled(Int(2)).is_zero(), false});
    return r;
}

ValidationReport validate(const MooreDiagram& d) {
    if (d.phi.dom() != d.A || d.phi.cod() != d.B || d.psi.dom() != d.B || d.psi.cod() != d.A)
        throw DomainError("moore diagram maps have wrong endpoints");
    ValidationReport r;
    r.lines.push_back({"psi*phi = 0", compose(d.psi, d.phi).is_zero(), false});
    r.lines.push_back(
        {"phi*psi = 2*id_B", compose(d.phi, d.psi) == Hom::scalar(d.B, Int(2)), false});
    r.lines.push_back({"2*phi = 0 (derived)", d.phi.scaled(Int(2)).is_zero(), true});
    r.lines.push_back({"2*psi = 0 (derived)", d.psi.scaled(Int(2)).is_zero(), true});
    return r;
}

ValidationReport validate(const ExtEtaDiagram& d) {
    if (d.eta.dom() != d.A || d.eta.cod() != d.C || d.chi.dom() != d.C || d.chi.cod() != d.B ||
        d.psi.dom() != d.B || d.psi.cod() != d.A)
        throw DomainError("extended eta-diagram maps have wrong endpoints");
    ValidationReport r;
    r.lines.push_back({"2*eta = 0", d.eta.scaled(Int(2)).is_zero(), false});
    r.lines.push_back({"psi*chi = 0", compose(d.psi, d.chi).is_zero(), false});
    r.lines.push_back({"chi*eta*psi = 2*id_B",
                       compose(d.chi, compose(d.eta, d.psi)) == Hom::scalar(d.B, Int(2)), false});
    r.lines.push_back({"2*psi = 0 (derived)", d.psi.scaled(Int(2)).is_zero(), true});
    r.lines.push_back({"2*chi = 0 (derived)", d.chi.scaled(Int(2)).is_zero(), true});
    r.lines.push_back(
        {"4*id_B = 0 (derived)", Hom::scalar(d.B, Int(4)).is_zero(), true});
    return r;
}

EedInduced eed_induced(const ExtEtaDiagram& n) {
    EedInduced out{mod_two(n.C), two_torsion(n.A), Hom(), Hom()};
    out.chi_bar = factor_through_quotient(out.c2.proj, n.chi);
    out.psi_bar = corestrict(n.psi, out.a2.incl);
    return out;
}

MooreInduced moore_induced(const MooreDiagram& m) {
    MooreInduced out{mod_two(m.A), two_torsion(m.A), Hom(), Hom()};
    out.phi_bar = factor_through_quotient(out.a2q.proj, m.phi);
    out.psi_bar = corestrict(m.psi, out.a2t.incl);
    return out;
}

bool is_exact(const MooreDiagram& m) {
    validate(m).require();
    MooreInduced ind = moore_induced(m);
    return is_injective(ind.phi_bar) && is_exact_at(ind.phi_bar, ind.psi_bar) &&
           is_surjective(ind.psi_bar);
}

bool is_exact(const ExtEtaDiagram& n) {
    validate(n).require();
    EedInduced ind = eed_induced(n);
    return is_injective(ind.chi_bar) && is_exact_at(ind.chi_bar, ind.psi_bar) &&
           is_surjective(ind.psi_bar);
}

Extension eed_extension(const ExtEtaDiagram& n) {
    EedInduced ind = eed_induced(n);
    return Extension{ind.c2.group, n.B, ind.a2.group, ind.chi_bar, ind.psi_bar};
}

PhiCheck eeed_phi_check(const ExtEtaDiagram& n) {
    if (!is_exact(n)) return {false, "diagram is not exact"};
    EedInduced ind = eed_induced(n);
    Extension e = eed_extension(n);
    Hom f = phi(e);
    // eta-bar: A[2] -> A -> C -> C/2, transported through the canonical
    // identification of A[2] with (A[2])[2] and C/2 with (C/2)/2
    Subgroup t2 = two_torsion(e.U);  // (A[2])[2] = A[2]
    Quotient q2 = mod_two(e.V);      // (C/2)/2 = C/2
    Hom eta_bar = compose(ind.c2.proj, compose(n.eta, ind.a2.incl));
    Hom transported = compose(q2.proj, compose(eta_bar, t2.incl));
    if (f != transported) return {false, "Phi of the attached extension differs from eta-bar"};
    SixTerm s = six_term(e);
    for (size_t j = 0; j < 4; ++j)
        if (!s.exact_at(j)) return {false, "six-term sequence fails at joint " + std::to_string(j)};
    return {true, ""};
}

DiagramMorphism xi(const ExtEtaDiagram& n, const ExtEtaDiagram& n2, const Hom& u) {
    EedInduced a = eed_induced(n), b = eed_induced(n2);
    if (u.dom() != a.a2.group || u.cod() != b.c2.group)
        throw DomainError("xi: u must map A[2] to C'/2");
    Hom ubar = compose(b.chi_bar, compose(u, a.psi_bar));
    return DiagramMorphism{Hom::zero(n.A, n2.A), ubar, Hom::zero(n.C, n2.C)};
}

EtaDiagram pi(const ExtEtaDiagram& n) { return EtaDiagram{n.A, n.C, n.eta}; }

DiagramMorphism pi_mor(const DiagramMorphism& m) {
    return DiagramMorphism{m.f, std::nullopt, m.h};
}

bool commutes(const EtaDiagram& s, const EtaDiagram& t, const DiagramMorphism& m) {
    if (m.g || !m.h) return false;
    return compose(*m.h, s.eta) == compose(t.eta, m.f);
}

bool commutes(const MooreDiagram& s, const MooreDiagram& t, const DiagramMorphism& m) {
    if (m.h || !m.g) return false;
    return compose(*m.g, s.phi) == compose(t.phi, m.f) &&
           compose(m.f, s.psi) == compose(t.psi, *m.g);
}

bool commutes(const ExtEtaDiagram& s, const ExtEtaDiagram& t, const DiagramMorphism& m) {
    if (!m.g || !m.h) return false;
    return compose(*m.h, s.eta) == compose(t.eta, m.f) &&
           compose(*m.g, s.chi) == compose(t.chi, *m.h) &&
           compose(m.f, s.psi) == compose(t.psi, *m.g);
}

DiagramMorphism identity_mor(const ExtEtaDiagram& n) {
    return {Hom::identity(n.A), Hom::identity(n.B), Hom::identity(n.C)};
}
DiagramMorphism identity_mor(const MooreDiagram& m) {
    return {Hom::identity(m.A), Hom::identity(m.B), std::nullopt};
}
DiagramMorphism identity_mor(const EtaDiagram& d) {
    return {Hom::identity(d.A), std::nullopt, Hom::identity(d.C)};
}

DiagramMorphism compose_mor(const DiagramMorphism& g, const DiagramMorphism& f) {
    if (g.g.has_value() != f.g.has_value() || g.h.has_value() != f.h.has_value())
        throw DomainError("morphism composition: mixed diagram kinds");
    DiagramMorphism out{compose(g.f, f.f), std::nullopt, std::nullopt};
    if (f.g) out.g = compose(*g.g, *f.g);
    if (f.h) out.h = compose(*g.h, *f.h);
    return out;
}

DiagramHomGroup::DiagramHomGroup(const ExtEtaDiagram& n, const ExtEtaDiagram& n2)
    : kind_(Kind::Eed) {
    vars_.emplace_back(n.A, n2.A);
    vars_.emplace_back(n.B, n2.B);
    vars_.emplace_back(n.C, n2.C);
    std::vector<FgGroup> vgroups = {vars_[0].group(), vars_[1].group(), vars_[2].group()};
    DirectSum vs = direct_sum(vgroups);
    HomGroup e1(n.A, n2.C), e2(n.C, n2.B), e3(n.B, n2.A);
    Hom c1 = compose(conjugation_map(vars_[2], e1, Hom::identity(n2.C), n.eta), vs.pr[2]) -
             compose(conjugation_map(vars_[0], e1, n2.eta, Hom::identity(n.A)), vs.pr[0]);
    Hom c2 = compose(conjugation_map(vars_[1], e2, Hom::identity(n2.B), n.chi), vs.pr[1]) -
             compose(conjugation_map(vars_[2], e2, n2.chi, Hom::identity(n.C)), vs.pr[2]);
    Hom c3 = compose(conjugation_map(vars_[0], e3, Hom::identity(n2.A), n.psi), vs.pr[0]) -
             compose(conjugation_map(vars_[1], e3, n2.psi, Hom::identity(n.B)), vs.pr[1]);
    vsum_ = vs;
    std::vector<FgGroup> egroups = {e1.group(), e2.group(), e3.group()};
    DirectSum esum = direct_sum(egroups);
    Hom total = compose(esum.in[0], c1) + compose(esum.in[1], c2) + compose(esum.in[2], c3);
    sub_ = kernel(total);
}

DiagramHomGroup::DiagramHomGroup(const MooreDiagram& m, const MooreDiagram& m2)
    : kind_(Kind::Moore) {
    vars_.emplace_back(m.A, m2.A);
    vars_.emplace_back(m.B, m2.B);
    std::vector<FgGroup> vgroups = {vars_[0].group(), vars_[1].group()};
    DirectSum vs = direct_sum(vgroups);
    HomGroup e1(m.A, m2.B), e2(m.B, m2.A);
    Hom c1 = compose(conjugation_map(vars_[1], e1, Hom::identity(m2.B), m.phi), vs.pr[1]) -
             compose(conjugation_map(vars_[0], e1, m2.phi, Hom::identity(m.A)), vs.pr[0]);
    Hom c2 = compose(conjugation_map(vars_[0], e2, Hom::identity(m2.A), m.psi), vs.pr[0]) -
             compose(conjugation_map(vars_[1], e2, m2.psi, Hom::identity(m.B)), vs.pr[1]);
    vsum_ = vs;
    std::vector<FgGroup> egroups = {e1.group(), e2.group()};
    DirectSum esum = direct_sum(egroups);
    Hom total = compose(esum.in[0], c1) + compose(esum.in[1], c2);
    sub_ = kernel(total);
}

DiagramHomGroup::DiagramHomGroup(const EtaDiagram& d, const EtaDiagram& d2) : kind_(Kind::Eta) {
    vars_.emplace_back(d.A, d2.A);
    vars_.emplace_back(d.C, d2.C);
    std::vector<FgGroup> vgroups = {vars_[0].group(), vars_[1].group()};
    DirectSum vs = direct_sum(vgroups);
    HomGroup e1(d.A, d2.C);
    Hom c1 = compose(conjugation_map(vars_[1], e1, Hom::identity(d2.C), d.eta), vs.pr[1]) -
             compose(conjugation_map(vars_[0], e1, d2.eta, Hom::identity(d.A)), vs.pr[0]);
    vsum_ = vs;
    sub_ = kernel(c1);
}

DiagramMorphism DiagramHomGroup::elem_to_mor(const GroupElement& e) const {
    GroupElement x = sub_.incl(e);
    auto comp = [&](size_t k) { return vars_[k].elem_to_hom(vsum_.pr[k](x)); };
    switch (kind_) {
        case Kind::Eed:
            return {comp(0), comp(1), comp(2)};
        case Kind::Moore:
            return {comp(0), comp(1), std::nullopt};
        default:
            return {comp(0), std::nullopt, comp(1)};
    }
}

GroupElement DiagramHomGroup::mor_to_elem(const DiagramMorphism& m) const {
    std::vector<Hom> comps;
    comps.push_back(m.f);
    if (kind_ == Kind::Eed) {
        if (!m.g || !m.h) throw DomainError("morphism has missing components");
        comps.push_back(*m.g);
        comps.push_back(*m.h);
    } else if (kind_ == Kind::Moore) {
        if (!m.g) throw DomainError("moore morphism needs a g component");
        comps.push_back(*m.g);
    } else {
        if (!m.h) throw DomainError("eta morphism needs an h component");
        comps.push_back(*m.h);
    }
    GroupElement x = GroupElement::zero(vsum_.group);
    for (size_t k = 0; k < comps.size(); ++k)
        x = x + vsum_.in[k](vars_[k].hom_to_elem(comps[k]));
    auto e = preimage(sub_.incl, x);
    if (!e) throw DomainError("tuple is not a morphism (squares do not commute)");
    return *e;
}

namespace {

template <typename D>
std::vector<DiagramMorphism> hom_set_impl(const D& a, const D& b) {
    DiagramHomGroup hg(a, b);
    if (!hg.group().is_finite())
        throw InfiniteHomSetError("morphism group is " + hg.group().to_string());
    std::vector<DiagramMorphism> out;
    for (const GroupElement& e : elements(hg.group())) out.push_back(hg.elem_to_mor(e));
    return out;
}

}  // namespace

std::vector<DiagramMorphism> hom_set(const ExtEtaDiagram& n, const ExtEtaDiagram& n2) {
    return hom_set_impl(n, n2);
}
std::vector<DiagramMorphism> hom_set(const EtaDiagram& d, const EtaDiagram& d2) {
    return hom_set_impl(d, d2);
}
std::vector<DiagramMorphism> hom_set(const MooreDiagram& m, const MooreDiagram& m2) {
    return hom_set_impl(m, m2);
}

DiagramMorphism lift_along_pi(const ExtEtaDiagram& n, const ExtEtaDiagram& n2, const Hom& f,
                              const Hom& h) {
    if (!is_exact(n) || !is_exact(n2)) throw NotExactError("lift_along_pi needs exact diagrams");
    if (compose(h, n.eta) != compose(n2.eta, f))
        throw DomainError("lift_along_pi: (f, h) is not an eta-diagram morphism");
    HomGroup gvar(n.B, n2.B), e1(n.C, n2.B), e2(n.B, n2.A);
    Hom a1 = conjugation_map(gvar, e1, Hom::identity(n2.B), n.chi);  // g . chi
    Hom a2 = conjugation_map(gvar, e2, n2.psi, Hom::identity(n.B));  // psi' . g
    DirectSum esum = direct_sum({e1.group(), e2.group()});
    Hom big = compose(esum.in[0], a1) + compose(esum.in[1], a2);
    GroupElement rhs = esum.in[0](e1.hom_to_elem(compose(n2.chi, h))) +
                       esum.in[1](e2.hom_to_elem(compose(f, n.psi)));
    auto x = preimage(big, rhs);
    if (!x) throw DomainError("internal: no lift over an eta-morphism of exact diagrams");
    return DiagramMorphism{f, gvar.elem_to_hom(*x), h};
}

ExtEtaDiagram construct_eeed_over(const EtaDiagram& p) {
    validate(p).require();
    Subgroup t = two_torsion(p.A);
    Quotient q = mod_two(p.C);
    Hom eta_bar = compose(q.proj, compose(p.eta, t.incl));

    // the extension (Z/2)^r -> (Z/4)^r -> (Z/2)^r with Phi = identity,
    // pushed forward along eta-bar
    const size_t r = t.group.rank();
    FgGroup four = FgGroup::from_invariant_factors(std::vector<Int>(r, Int(4)));
    Extension e1{t.group, four, t.group,
                 Hom::make(t.group, four, Mat::identity(r).scaled(Int(2))),
                 Hom::make(four, t.group, Mat::identity(r))};
    Extension e = pushout(eta_bar, e1);

    ExtEtaDiagram n{p.A, e.M, p.C, p.eta, compose(e.i, q.proj), compose(t.incl, e.p)};
    validate(n).require();
    if (!is_exact(n)) throw NotExactError("internal: constructed diagram is not exact");
    return n;
}

namespace {

// Search the morphism group for an element with all components bijective.
// Torsion coordinates are exhausted; free coordinates range over [-2, 2],
// which covers every diagram this library constructs.
template <typename D>
bool isomorphic_impl(const D& a, const D& b, const std::vector<const FgGroup*>& ga,
                     const std::vector<const FgGroup*>& gb) {
    for (size_t i = 0; i < ga.size(); ++i)
        if (*ga[i] != *gb[i]) return false;
    DiagramHomGroup hg(a, b);
    const FgGroup& k = hg.group();
    std::vector<Int> lo(k.rank()), hi(k.rank());
    for (size_t i = 0; i < k.rank(); ++i) {
        if (k.factor(i).is_zero()) {
            lo[i] = Int(-2);
            hi[i] = Int(2);
        } else {
            lo[i] = Int(0);
            hi[i] = k.factor(i) - Int(1);
        }
    }
    std::vector<Int> cur = lo;
    for (;;) {
        GroupElement e(k, cur);
        DiagramMorphism m = hg.elem_to_mor(e);
        bool bij = is_bijective(m.f) && (!m.g || is_bijective(*m.g)) &&
                   (!m.h || is_bijective(*m.h));
        if (bij) return true;
        size_t i = 0;
        while (i < k.rank()) {
            cur[i] += Int(1);
            if (cur[i] <= hi[i]) break;
            cur[i] = lo[i];
            ++i;
        }
        if (i == k.rank()) break;
    }
    return false;
}

}  // namespace

bool isomorphic(const ExtEtaDiagram& a, const ExtEtaDiagram& b) {
    return isomorphic_impl(a, b, {&a.A, &a.B, &a.C}, {&b.A, &b.B, &b.C});
}
bool isomorphic(const EtaDiagram& a, const EtaDiagram& b) {
    return isomorphic_impl(a, b, {&a.A, &a.C}, {&b.A, &b.C});
}
bool isomorphic(const MooreDiagram& a, const MooreDiagram& b) {
    return isomorphic_impl(a, b, {&a.A, &a.B}, {&b.A, &b.B});
}

SppMorphism spp_identity(const SppObject& x) {
    return SppMorphism{x, x, Hom::identity(x.A), Hom::identity(x.C),
                       Hom::zero(two_torsion(x.A).group, mod_two(x.C).group)};
}

SppPlusMorphism spp_plus_identity(const SppObject& x) {
    return SppPlusMorphism{x, x, Hom::identity(x.A), Hom::identity(x.C),
                           ExtGroup(x.A, x.C).zero_class()};
}

SppMorphism spp_compose(const SppMorphism& m1, const SppMorphism& m0) {
    if (m0.dst != m1.src) throw DomainError("spp composition: endpoint mismatch");
    Hom u = compose(induced_on_mod_two(m1.h), m0.u) + compose(m1.u, induced_on_two_torsion(m0.f));
    return SppMorphism{m0.src, m1.dst, compose(m1.f, m0.f), compose(m1.h, m0.h), std::move(u)};
}

SppPlusMorphism spp_plus_compose(const SppPlusMorphism& m1, const SppPlusMorphism& m0) {
    if (m0.dst != m1.src) throw DomainError("spp+ composition: endpoint mismatch");
    ExtClass u = push_class(m1.h, m0.u) + pull_class(m0.f, m1.u);
    return SppPlusMorphism{m0.src, m1.dst, compose(m1.f, m0.f), compose(m1.h, m0.h),
                           std::move(u)};
}

SppMorphism spp_plus_to_spp(const SppPlusMorphism& m) {
    return SppMorphism{m.src, m.dst, m.f, m.h, phi(realize(m.u))};
}

ExtEtaDiagram spp_H(const SppObject& x) {
    Quotient q = mod_two(x.C);
    Subgroup t = two_torsion(x.A);
    DirectSum b = direct_sum({q.group, t.group});
    Hom chi = compose(b.in[0], q.proj);
    Hom psi = compose(t.incl, b.pr[1]);
    return ExtEtaDiagram{x.A, b.group, x.C, Hom::zero(x.A, x.C), std::move(chi), std::move(psi)};
}

DiagramMorphism spp_H_mor(const SppMorphism& m) {
    ExtEtaDiagram h0 = spp_H(m.src), h1 = spp_H(m.dst);
    Quotient q0 = mod_two(m.src.C), q1 = mod_two(m.dst.C);
    Subgroup t0 = two_torsion(m.src.A), t1 = two_torsion(m.dst.A);
    DirectSum b0 = direct_sum({q0.group, t0.group}), b1 = direct_sum({q1.group, t1.group});
    Hom hbar = induced_on_mod_two(m.h);
    Hom fbar = induced_on_two_torsion(m.f);
    Hom g = compose(b1.in[0], compose(hbar, b0.pr[0])) +
            compose(b1.in[0], compose(m.u, b0.pr[1])) +
            compose(b1.in[1], compose(fbar, b0.pr[1]));
    DiagramMorphism out{m.f, std::move(g), m.h};
    if (!commutes(h0, h1, out)) throw DomainError("internal: H of a morphism does not commute");
    return out;
}

ExtEtaDiagram emd_to_eeed(const MooreDiagram& m) {
    validate(m).require();
    Quotient q = mod_two(m.A);
    Hom phibar = factor_through_quotient(q.proj, m.phi);
    return ExtEtaDiagram{m.A, m.B, q.group, q.proj, std::move(phibar), m.psi};
}

EmdFromEeed eeed_to_emd(const ExtEtaDiagram& n) {
    validate(n).require();
    if (!is_surjective(n.eta)) throw NotInEmdPrimeError("eta is not surjective");
    Subgroup k = kernel(n.eta);
    Subgroup twice = image(Hom::scalar(n.A, Int(2)));
    if (!same_image(k.incl, twice.incl)) throw NotInEmdPrimeError("kernel of eta is not 2A");
    Quotient q = mod_two(n.A);
    Hom c_iso = factor_through_quotient(q.proj, n.eta);
    MooreDiagram m{n.A, n.B, compose(n.chi, n.eta), n.psi};
    validate(m).require();
    return EmdFromEeed{std::move(m), std::move(c_iso)};
}

Hom ed_completion(const ExtEtaDiagram& n, const ExtEtaDiagram& n2, const Hom& f) {
    if (!is_surjective(n.eta)) throw NotInEmdPrimeError("eta is not surjective");
    Subgroup k = kernel(n.eta);
    Subgroup twice = image(Hom::scalar(n.A, Int(2)));
    if (!same_image(k.incl, twice.incl)) throw NotInEmdPrimeError("kernel of eta is not 2A");
    return factor_through_quotient(n.eta, compose(n2.eta, f));
}

MooreDiagram standard_emd(const FgGroup& a) {
    // The naive B = A/2 + A[2] only satisfies phi psi = 2 id_B when
    // A[2] <= 2A (it fails for A = Z/2). Going through the eta-diagram
    // A -> A/2 always produces an exact Moore diagram and agrees with the
    // split form whenever that form is valid.
    Quotient q = mod_two(a);
    ExtEtaDiagram n = construct_eeed_over(EtaDiagram{a, q.group, q.proj});
    return eeed_to_emd(n).moore;
}

DegenerateReport classify_degenerate(const ExtEtaDiagram& n) {
    if (!is_exact(n)) throw NotExactError("classify_degenerate needs an exact diagram");
    DegenerateReport r;
    r.chi_zero = n.chi.is_zero();
    r.psi_zero = n.psi.is_zero();
    r.eta_zero = n.eta.is_zero();
    r.a_zero = n.A.is_trivial();
    r.b_zero = n.B.is_trivial();
    r.c_zero = n.C.is_trivial();
    EedInduced ind = eed_induced(n);
    if (r.chi_zero) {
        if (!ind.c2.group.is_trivial()) throw RelationError("chi = 0 forces C/2 = 0");
        if (!is_bijective(ind.psi_bar)) throw RelationError("chi = 0 forces psi-bar bijective");
        r.psi_bar_iso = ind.psi_bar;
    }
    if (r.psi_zero) {
        if (!two_torsion(n.A).group.is_trivial()) throw RelationError("psi = 0 forces A[2] = 0");
        if (!is_bijective(ind.chi_bar)) throw RelationError("psi = 0 forces chi-bar bijective");
        r.chi_bar_iso = ind.chi_bar;
    }
    if (r.eta_zero) {
        r.spp = SppObject{n.A, n.C};
        // section of psi-bar: pick a preimage of each A[2] generator
        Mat sec(n.B.rank(), ind.a2.group.rank());
        ModSolver solver(ind.psi_bar.matrix(), ind.a2.group.factors());
        for (size_t j = 0; j < ind.a2.group.rank(); ++j) {
            auto x = solver.solve(GroupElement::unit(ind.a2.group, j).coeffs());
            if (!x) throw RelationError("eta = 0: psi-bar must be surjective");
            sec.set_col(j, *x);
        }
        Hom s = Hom::make(ind.a2.group, n.B, std::move(sec));
        if (compose(ind.psi_bar, s) != Hom::identity(ind.a2.group))
            throw RelationError("eta = 0: section construction failed");
        r.spp_section = std::move(s);
    }
    return r;
}

}  // namespace moorediag
