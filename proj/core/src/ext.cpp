#include "moorediag/ext.hpp"

namespace moorediag {

void Extension::validate() const {
    if (i.dom() != V || i.cod() != M || p.dom() != M || p.cod() != U)
        throw NotExactError("extension maps have wrong endpoints");
    if (!is_injective(i)) throw NotExactError("i is not injective");
    if (!is_surjective(p)) throw NotExactError("p is not surjective");
    if (!is_exact_at(i, p)) throw NotExactError("image(i) != kernel(p)");
}

bool Extension::is_valid() const {
    try {
        validate();
        return true;
    } catch (const NotExactError&) {
        return false;
    }
}

bool ExtClass::is_zero() const {
    for (const auto& c : cosets)
        if (!c.is_zero()) return false;
    return true;
}

ExtClass operator+(const ExtClass& a, const ExtClass& b) {
    if (a.U != b.U || a.V != b.V) throw DomainError("ext class sum: different (U, V)");
    ExtClass out{a.U, a.V, {}};
    for (size_t j = 0; j < a.cosets.size(); ++j) out.cosets.push_back(a.cosets[j] + b.cosets[j]);
    return out;
}

ExtClass operator-(const ExtClass& a, const ExtClass& b) {
    if (a.U != b.U || a.V != b.V) throw DomainError("ext class difference: different (U, V)");
    ExtClass out{a.U, a.V, {}};
    for (size_t j = 0; j < a.cosets.size(); ++j) out.cosets.push_back(a.cosets[j] - b.cosets[j]);
    return out;
}

bool operator<(const ExtClass& a, const ExtClass& b) {
    if (a.U != b.U) return a.U < b.U;
    if (a.V != b.V) return a.V < b.V;
    for (size_t j = 0; j < a.cosets.size(); ++j)
        if (a.cosets[j] != b.cosets[j]) return a.cosets[j] < b.cosets[j];
    return false;
}

ExtGroup::ExtGroup(FgGroup u, FgGroup v) : u_(std::move(u)), v_(std::move(v)) {
    std::vector<FgGroup> parts;
    for (size_t j = 0; j < u_.torsion_rank(); ++j) {
        quots_.push_back(mod_n(v_, u_.factor(j)));
        parts.push_back(quots_.back().group);
    }
    sum_ = direct_sum(parts);
}

ExtClass ExtGroup::zero_class() const {
    ExtClass c{u_, v_, {}};
    for (const Quotient& q : quots_) c.cosets.push_back(GroupElement::zero(q.group));
    return c;
}

ExtClass ExtGroup::elem_to_class(const GroupElement& e) const {
    if (e.parent() != sum_.group) throw DomainError("ext indexer: element of wrong group");
    ExtClass c{u_, v_, {}};
    for (size_t j = 0; j < quots_.size(); ++j) c.cosets.push_back(sum_.pr[j](e));
    return c;
}

GroupElement ExtGroup::class_to_elem(const ExtClass& c) const {
    if (c.U != u_ || c.V != v_ || c.cosets.size() != quots_.size())
        throw DomainError("ext indexer: class of wrong shape");
    GroupElement e = GroupElement::zero(sum_.group);
    for (size_t j = 0; j < quots_.size(); ++j) e = e + sum_.in[j](c.cosets[j]);
    return e;
}

std::vector<ExtClass> ExtGroup::all_classes() const {
    std::vector<ExtClass> out;
    for (const GroupElement& e : elements(group())) out.push_back(elem_to_class(e));
    return out;
}

FgGroup ext_group(const FgGroup& u, const FgGroup& v) { return ExtGroup(u, v).group(); }

Extension realize(const ExtClass& c) {
    const FgGroup &u = c.U, &v = c.V;
    const size_t nv = v.rank(), t = u.torsion_rank(), z = u.free_rank();
    if (c.cosets.size() != t) throw DomainError("realize: coset count does not match U");
    const size_t ngens = nv + t + z;

    std::vector<std::vector<Int>> rel_cols;
    for (size_t r = 0; r < nv; ++r) {
        if (v.factor(r).is_zero()) continue;
        std::vector<Int> col(ngens);
        col[r] = v.factor(r);
        rel_cols.push_back(std::move(col));
    }
    ExtGroup eg(u, v);
    for (size_t j = 0; j < t; ++j) {
        if (c.cosets[j].parent() != eg.term(j).group)
            throw DomainError("realize: coset lives in the wrong quotient");
        auto lift = preimage(eg.term(j).proj, c.cosets[j]);
        std::vector<Int> col(ngens);
        for (size_t r = 0; r < nv; ++r) col[r] = -lift->coeffs()[r];
        col[nv + j] = u.factor(j);
        rel_cols.push_back(std::move(col));
    }
    Mat rels(ngens, rel_cols.size());
    for (size_t cidx = 0; cidx < rel_cols.size(); ++cidx) rels.set_col(cidx, rel_cols[cidx]);

    QuotientPresentation qp = quotient_presentation(ngens, rels);
    std::vector<size_t> vcols;
    for (size_t r = 0; r < nv; ++r) vcols.push_back(r);
    Hom i = Hom::make(v, qp.group, qp.to_canon.submatrix_cols(vcols));

    Mat pgen(u.rank(), ngens);
    for (size_t j = 0; j < t; ++j) pgen.at(j, nv + j) = Int(1);
    for (size_t k = 0; k < z; ++k) pgen.at(t + k, nv + t + k) = Int(1);
    Hom p = Hom::make(qp.group, u, pgen * qp.from_canon);

    return Extension{v, qp.group, u, std::move(i), std::move(p)};
}

ExtClass classify(const Extension& e) {
    e.validate();
    ExtGroup eg(e.U, e.V);
    ExtClass out{e.U, e.V, {}};
    ModSolver psolve(e.p.matrix(), e.U.factors());
    ModSolver isolve(e.i.matrix(), e.M.factors());
    for (size_t j = 0; j < e.U.torsion_rank(); ++j) {
        const Int& d = e.U.factor(j);
        auto m = psolve.solve(GroupElement::unit(e.U, j).coeffs());
        if (!m) throw NotExactError("p is not surjective");
        GroupElement dm = GroupElement(e.M, *m).scaled(d);
        auto vpre = isolve.solve(dm.coeffs());
        if (!vpre) throw NotExactError("d*m has no i-preimage");
        out.cosets.push_back(eg.term(j).proj(GroupElement(e.V, *vpre)));
    }
    return out;
}

Extension pushout(const Hom& f, const Extension& e) {
    if (f.dom() != e.V) throw DomainError("pushout: f must have domain V");
    const FgGroup& vp = f.cod();
    const size_t nvp = vp.rank(), nm = e.M.rank();
    const size_t ngens = nvp + nm;

    std::vector<std::vector<Int>> rel_cols;
    for (size_t r = 0; r < nvp; ++r) {
        if (vp.factor(r).is_zero()) continue;
        std::vector<Int> col(ngens);
        col[r] = vp.factor(r);
        rel_cols.push_back(std::move(col));
    }
    for (size_t r = 0; r < nm; ++r) {
        if (e.M.factor(r).is_zero()) continue;
        std::vector<Int> col(ngens);
        col[nvp + r] = e.M.factor(r);
        rel_cols.push_back(std::move(col));
    }
    for (size_t r = 0; r < e.V.rank(); ++r) {
        // (f(v_r), -i(v_r))
        std::vector<Int> col(ngens);
        for (size_t s = 0; s < nvp; ++s) col[s] = f.matrix().at(s, r);
        for (size_t s = 0; s < nm; ++s) col[nvp + s] = -e.i.matrix().at(s, r);
        rel_cols.push_back(std::move(col));
    }
    Mat rels(ngens, rel_cols.size());
    for (size_t cidx = 0; cidx < rel_cols.size(); ++cidx) rels.set_col(cidx, rel_cols[cidx]);
    QuotientPresentation qp = quotient_presentation(ngens, rels);

    std::vector<size_t> vcols;
    for (size_t r = 0; r < nvp; ++r) vcols.push_back(r);
    Hom ip = Hom::make(vp, qp.group, qp.to_canon.submatrix_cols(vcols));

    Mat pgen(e.U.rank(), ngens);
    for (size_t i2 = 0; i2 < e.U.rank(); ++i2)
        for (size_t s = 0; s < nm; ++s) pgen.at(i2, nvp + s) = e.p.matrix().at(i2, s);
    Hom pp = Hom::make(qp.group, e.U, pgen * qp.from_canon);
    return Extension{vp, qp.group, e.U, std::move(ip), std::move(pp)};
}

Extension pullback(const Hom& h, const Extension& e) {
    if (h.cod() != e.U) throw DomainError("pullback: h must have codomain U");
    const FgGroup& up = h.dom();
    DirectSum ds = direct_sum({e.M, up});
    Hom q = compose(e.p, ds.pr[0]) - compose(h, ds.pr[1]);
    Subgroup k = kernel(q);
    Hom ip = corestrict(compose(ds.in[0], e.i), k.incl);
    Hom pp = compose(ds.pr[1], k.incl);
    return Extension{e.V, k.group, up, std::move(ip), std::move(pp)};
}

Extension baer_sum(const Extension& a, const Extension& b) {
    if (a.U != b.U || a.V != b.V) throw DomainError("baer sum: extensions have different (U, V)");
    DirectSum dv = direct_sum({a.V, b.V});
    DirectSum dm = direct_sum({a.M, b.M});
    DirectSum du = direct_sum({a.U, b.U});
    Hom isum =
        compose(dm.in[0], compose(a.i, dv.pr[0])) + compose(dm.in[1], compose(b.i, dv.pr[1]));
    Hom psum =
        compose(du.in[0], compose(a.p, dm.pr[0])) + compose(du.in[1], compose(b.p, dm.pr[1]));
    Extension direct{dv.group, dm.group, du.group, std::move(isum), std::move(psum)};
    Hom diag = du.in[0] + du.in[1];    // U -> U + U
    Hom codiag = dv.pr[0] + dv.pr[1];  // V + V -> V
    return pushout(codiag, pullback(diag, direct));
}

ExtClass push_class(const Hom& f, const ExtClass& c) {
    if (f.dom() != c.V) throw DomainError("push_class: f must have domain V");
    ExtGroup src(c.U, c.V), dst(c.U, f.cod());
    ExtClass out{c.U, f.cod(), {}};
    for (size_t j = 0; j < src.terms(); ++j) {
        Hom induced = factor_through_quotient(src.term(j).proj, compose(dst.term(j).proj, f));
        out.cosets.push_back(induced(c.cosets[j]));
    }
    return out;
}

ExtClass pull_class(const Hom& h, const ExtClass& c) {
    if (h.cod() != c.U) throw DomainError("pull_class: h must have codomain U");
    // (h^* c)_j = sum_i (d_j H_ij / d'_i) lift(v'_i)  mod  d_j V,
    // where d_j runs over the finite factors of the new U and d'_i over those
    // of the old one; well-definedness of h makes every coefficient integral.
    const FgGroup &u_new = h.dom(), &u_old = c.U, &v = c.V;
    ExtGroup src(u_old, v), dst(u_new, v);
    std::vector<GroupElement> lifts;
    for (size_t i = 0; i < src.terms(); ++i)
        lifts.push_back(*preimage(src.term(i).proj, c.cosets[i]));
    ExtClass out{u_new, v, {}};
    for (size_t j = 0; j < u_new.torsion_rank(); ++j) {
        const Int& dj = u_new.factor(j);
        GroupElement acc = GroupElement::zero(v);
        for (size_t i = 0; i < u_old.torsion_rank(); ++i)
            acc = acc + lifts[i].scaled((dj * h.matrix().at(i, j)).div_exact(u_old.factor(i)));
        out.cosets.push_back(dst.term(j).proj(acc));
    }
    return out;
}

Hom phi(const Extension& e, bool check) {
    if (check) e.validate();
    Subgroup t = two_torsion(e.U);
    Quotient q = mod_two(e.V);
    ModSolver psolve(e.p.matrix(), e.U.factors());
    ModSolver isolve(e.i.matrix(), e.M.factors());
    Mat m(q.group.rank(), t.group.rank());
    for (size_t k = 0; k < t.group.rank(); ++k) {
        GroupElement u = t.incl(GroupElement::unit(t.group, k));
        auto mm = psolve.solve(u.coeffs());
        if (!mm) throw NotExactError("p is not surjective");
        GroupElement twice = GroupElement(e.M, *mm).scaled(Int(2));
        auto v = isolve.solve(twice.coeffs());
        if (!v) throw NotExactError("2m has no i-preimage");
        m.set_col(k, q.proj(GroupElement(e.V, *v)).coeffs());
    }
    return Hom::make(t.group, q.group, std::move(m));
}

SixTerm six_term(const Extension& e) {
    e.validate();
    SixTerm s;
    s.v2 = two_torsion(e.V);
    s.m2 = two_torsion(e.M);
    s.u2 = two_torsion(e.U);
    s.vq = mod_two(e.V);
    s.mq = mod_two(e.M);
    s.uq = mod_two(e.U);
    s.i2 = corestrict(compose(e.i, s.v2.incl), s.m2.incl);
    s.p2 = corestrict(compose(e.p, s.m2.incl), s.u2.incl);
    s.phi_map = phi(e);
    s.ibar = factor_through_quotient(s.vq.proj, compose(s.mq.proj, e.i));
    s.pbar = factor_through_quotient(s.mq.proj, compose(s.uq.proj, e.p));
    return s;
}

bool SixTerm::exact_at(size_t joint) const {
    switch (joint) {
        case 0:
            return is_exact_at(i2, p2);
        case 1:
            return is_exact_at(p2, phi_map);
        case 2:
            return is_exact_at(phi_map, ibar);
        case 3:
            return is_exact_at(ibar, pbar);
        default:
            throw DomainError("six_term: joint index out of range");
    }
}

bool SixTerm::exact() const {
    for (size_t j = 0; j < 4; ++j)
        if (!exact_at(j)) return false;
    return true;
}

std::optional<Hom> middle_fill(const Extension& e, const Extension& e2, const Hom& f,
                               const Hom& h) {
    if (f.dom() != e.V || f.cod() != e2.V) throw DomainError("middle_fill: f must map V to V'");
    if (h.dom() != e.U || h.cod() != e2.U) throw DomainError("middle_fill: h must map U to U'");
    HomGroup mm(e.M, e2.M), vm(e.V, e2.M), mu(e.M, e2.U);
    Hom a1 = hom_pull(mm, vm, e.i);   // g |-> g . i
    Hom a2 = hom_push(mm, mu, e2.p);  // g |-> p' . g
    DirectSum target = direct_sum({vm.group(), mu.group()});
    Hom big = compose(target.in[0], a1) + compose(target.in[1], a2);
    GroupElement rhs = target.in[0](vm.hom_to_elem(compose(e2.i, f))) +
                       target.in[1](mu.hom_to_elem(compose(h, e.p)));
    auto x = preimage(big, rhs);
    if (!x) return std::nullopt;
    return mm.elem_to_hom(*x);
}

}  // namespace moorediag
