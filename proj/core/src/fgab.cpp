#include "moorediag/fgab.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace moorediag {

FgGroup FgGroup::from_invariant_factors(std::vector<Int> factors) {
    bool seen_zero = false;
    const Int* prev = nullptr;
    for (const Int& d : factors) {
        if (d.is_zero()) {
            seen_zero = true;
            continue;
        }
        if (seen_zero) throw DomainError("invariant factors: zero entries must trail");
        if (d < Int(2)) throw DomainError("invariant factors: nonzero entries must be >= 2");
        if (prev && !d.divisible_by(*prev))
            throw DomainError("invariant factors: divisibility chain violated");
        prev = &d;
    }
    FgGroup g;
    g.factors_ = std::move(factors);
    return g;
}

size_t FgGroup::torsion_rank() const {
    size_t n = 0;
    while (n < factors_.size() && !factors_[n].is_zero()) ++n;
    return n;
}

std::optional<Int> FgGroup::order() const {
    if (!is_finite()) return std::nullopt;
    Int o(1);
    for (const Int& d : factors_) o *= d;
    return o;
}

Int FgGroup::exponent() const {
    if (!is_finite()) throw InfiniteGroupError("exponent of " + to_string());
    return factors_.empty() ? Int(1) : factors_.back();
}

bool operator<(const FgGroup& a, const FgGroup& b) {
    // zero factors sort as "infinite"
    size_t n = std::min(a.rank(), b.rank());
    for (size_t i = 0; i < n; ++i) {
        const Int &x = a.factor(i), &y = b.factor(i);
        if (x == y) continue;
        if (x.is_zero()) return false;
        if (y.is_zero()) return true;
        return x < y;
    }
    return a.rank() < b.rank();
}

std::string FgGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += "+";
        s += factors_[i].is_zero() ? "Z" : "Z/" + factors_[i].to_string();
    }
    return s;
}

FgGroup FgGroup::parse(const std::string& literal) {
    std::vector<Int> orders;
    size_t pos = 0;
    auto fail = [&](const std::string& why) { throw ParseError("bad group literal: " + why); };
    while (pos <= literal.size()) {
        size_t next = literal.find('+', pos);
        std::string tok = literal.substr(pos, next == std::string::npos ? next : next - pos);
        // trim
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        tok = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
        if (tok.empty()) fail("empty term");
        if (tok == "0") {
            // contributes nothing
        } else if (tok == "Z") {
            orders.push_back(Int(0));
        } else if (tok.rfind("Z/", 0) == 0) {
            std::string num = tok.substr(2);
            if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
                fail("expected Z/n with integer n in '" + tok + "'");
            Int n = Int::from_string(num);
            if (n < Int(2)) fail("Z/n needs n >= 2 in '" + tok + "'");
            orders.push_back(n);
        } else {
            fail("unrecognized term '" + tok + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return make_group(orders).group;
}

GroupElement::GroupElement(FgGroup parent, std::vector<Int> coeffs)
    : parent_(std::move(parent)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != parent_.rank())
        throw DomainError("group element: coefficient count does not match factor count");
    for (size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] = Int::mod_reduce(coeffs_[i], parent_.factor(i));
}

GroupElement GroupElement::zero(FgGroup parent) {
    std::vector<Int> c(parent.rank());
    return GroupElement(std::move(parent), std::move(c));
}

GroupElement GroupElement::unit(FgGroup parent, size_t i) {
    std::vector<Int> c(parent.rank());
    c.at(i) = Int(1);
    return GroupElement(std::move(parent), std::move(c));
}

bool GroupElement::is_zero() const {
    for (const Int& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
    if (a.parent_ != b.parent_) throw DomainError("group element sum: parents differ");
    std::vector<Int> c(a.coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return GroupElement(a.parent_, std::move(c));
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) { return a + (-b); }

GroupElement GroupElement::operator-() const {
    std::vector<Int> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return GroupElement(parent_, std::move(c));
}

GroupElement GroupElement::scaled(const Int& k) const {
    std::vector<Int> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] * k;
    return GroupElement(parent_, std::move(c));
}

bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.parent_ != b.parent_) return a.parent_ < b.parent_;
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    }
    return false;
}

std::string GroupElement::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += coeffs_[i].to_string();
    }
    return s + ")";
}

Hom Hom::make(FgGroup dom, FgGroup cod, Mat m) {
    if (m.rows() != cod.rank() || m.cols() != dom.rank())
        throw DomainError("homomorphism: matrix shape does not match factor counts");
    Hom h;
    h.dom_ = std::move(dom);
    h.cod_ = std::move(cod);
    h.m_ = std::move(m);
    for (size_t i = 0; i < h.cod_.rank(); ++i) {
        const Int& e = h.cod_.factor(i);
        for (size_t j = 0; j < h.dom_.rank(); ++j) {
            Int& v = h.m_.at(i, j);
            v = Int::mod_reduce(v, e);
            const Int& d = h.dom_.factor(j);
            if (d.is_zero()) continue;
            if (e.is_zero()) {
                if (!v.is_zero()) throw IllDefinedError(i, j);
            } else if (!(d * v % e).is_zero()) {
                throw IllDefinedError(i, j);
            }
        }
    }
    return h;
}

Hom Hom::zero(FgGroup dom, FgGroup cod) {
    Mat m(cod.rank(), dom.rank());
    return make(std::move(dom), std::move(cod), std::move(m));
}

Hom Hom::identity(FgGroup g) {
    Mat m = Mat::identity(g.rank());
    return make(g, g, std::move(m));
}

Hom Hom::scalar(FgGroup g, const Int& k) {
    Mat m(g.rank(), g.rank());
    for (size_t i = 0; i < g.rank(); ++i) m.at(i, i) = k;
    return make(g, g, std::move(m));
}

GroupElement Hom::apply(const GroupElement& x) const {
    if (x.parent() != dom_) throw DomainError("homomorphism applied to element of wrong group");
    return GroupElement(cod_, mat_vec(m_, x.coeffs()));
}

Hom operator+(const Hom& a, const Hom& b) {
    if (a.dom_ != b.dom_ || a.cod_ != b.cod_) throw DomainError("hom sum: endpoint mismatch");
    return Hom::make(a.dom_, a.cod_, a.m_ + b.m_);
}

Hom operator-(const Hom& a, const Hom& b) {
    if (a.dom_ != b.dom_ || a.cod_ != b.cod_) throw DomainError("hom difference: endpoint mismatch");
    return Hom::make(a.dom_, a.cod_, a.m_ - b.m_);
}

Hom Hom::scaled(const Int& k) const { return make(dom_, cod_, m_.scaled(k)); }

Hom compose(const Hom& g, const Hom& f) {
    if (f.cod() != g.dom()) throw DomainError("composition: codomain/domain mismatch");
    return Hom::make(f.dom(), g.cod(), g.matrix() * f.matrix());
}

QuotientPresentation quotient_presentation(size_t ngens, const Mat& relations, const Int& mod,
                                           bool relations_span_mod) {
    if (relations.rows() != ngens && !(ngens == 0 && relations.rows() == 0))
        throw DomainError("quotient presentation: relation rows must equal generator count");
    SnfNeed need;
    need.r = need.rinv = false;
    Snf s;
    if (mod.is_zero()) {
        s = snf(relations, need);
    } else if (relations_span_mod) {
        s = snf_mod(relations, mod, need);
    } else {
        // the quotient is annihilated by mod, so mod * Z^n lies in the span
        Mat with_mod(ngens, relations.cols() + ngens);
        for (size_t i = 0; i < ngens; ++i) {
            for (size_t j = 0; j < relations.cols(); ++j) with_mod.at(i, j) = relations.at(i, j);
            with_mod.at(i, relations.cols() + i) = mod;
        }
        s = snf_mod(std::move(with_mod), mod, need);
    }

    std::vector<Int> all(ngens);
    for (size_t i = 0; i < ngens; ++i) {
        Int d = i < s.rank ? s.d.at(i, i) : Int(0);
        all[i] = mod.is_zero() ? d : Int::gcd(d, mod);
    }
    std::vector<size_t> kept;
    std::vector<Int> factors;
    for (size_t i = 0; i < ngens; ++i)
        if (!all[i].is_one()) {
            kept.push_back(i);
            factors.push_back(all[i]);
        }

    QuotientPresentation out;
    out.group = FgGroup::from_invariant_factors(std::move(factors));
    out.to_canon = s.l.submatrix_rows(kept);
    for (size_t t = 0; t < kept.size(); ++t)
        for (size_t j = 0; j < ngens; ++j)
            out.to_canon.at(t, j) = Int::mod_reduce(out.to_canon.at(t, j), out.group.factor(t));
    out.from_canon = s.linv.submatrix_cols(kept);
    return out;
}

QuotientPresentation make_group(const std::vector<Int>& cyclic_orders) {
    std::vector<size_t> nz;
    Int lcm(1);
    for (size_t k = 0; k < cyclic_orders.size(); ++k)
        if (!cyclic_orders[k].is_zero()) {
            nz.push_back(k);
            lcm = Int::lcm(lcm, cyclic_orders[k]);
        }
    Mat rels(cyclic_orders.size(), nz.size());
    for (size_t c = 0; c < nz.size(); ++c) rels.at(nz[c], c) = cyclic_orders[nz[c]].abs();
    Int mod = nz.size() == cyclic_orders.size() ? lcm : Int(0);
    return quotient_presentation(cyclic_orders.size(), rels, mod);
}

namespace {

// exponent when finite, 0 otherwise; the zero group reports 1
Int mod_hint(const FgGroup& g) {
    if (!g.is_finite()) return Int(0);
    return g.is_trivial() ? Int(1) : g.factors().back();
}

Int joint_mod_hint(const FgGroup& a, const FgGroup& b) {
    Int ma = mod_hint(a), mb = mod_hint(b);
    if (ma.is_zero() || mb.is_zero()) return Int(0);
    return Int::lcm(ma, mb);
}

}  // namespace

Subgroup kernel(const Hom& f) {
    Int m1 = joint_mod_hint(f.dom(), f.cod());
    Int m2 = m1.is_zero() ? Int(0) : mod_hint(f.dom());
    Mat lattice = kernel_lattice(f.matrix(), f.cod().factors(), m1);
    Mat rels = kernel_lattice(lattice, f.dom().factors(), m2);
    QuotientPresentation qp = quotient_presentation(lattice.cols(), rels, m2);
    Mat incl = lattice * qp.from_canon;
    return Subgroup{qp.group, Hom::make(qp.group, f.dom(), std::move(incl))};
}

Quotient cokernel(const Hom& f) {
    const FgGroup& cod = f.cod();
    std::vector<size_t> nz;
    for (size_t i = 0; i < cod.rank(); ++i)
        if (!cod.factor(i).is_zero()) nz.push_back(i);
    Mat rels(cod.rank(), f.matrix().cols() + nz.size());
    for (size_t i = 0; i < cod.rank(); ++i)
        for (size_t j = 0; j < f.matrix().cols(); ++j) rels.at(i, j) = f.matrix().at(i, j);
    for (size_t s = 0; s < nz.size(); ++s)
        rels.at(nz[s], f.matrix().cols() + s) = cod.factor(nz[s]);
    QuotientPresentation qp = quotient_presentation(cod.rank(), rels, mod_hint(cod), true);
    return Quotient{qp.group, Hom::make(cod, qp.group, qp.to_canon)};
}

Subgroup image(const Hom& f) {
    Mat gens = f.matrix();
    Int m1 = joint_mod_hint(f.dom(), f.cod());
    Int m2 = m1.is_zero() ? Int(0) : mod_hint(f.dom());
    Mat rels = kernel_lattice(gens, f.cod().factors(), m1);
    QuotientPresentation qp = quotient_presentation(gens.cols(), rels, m2);
    Mat incl = gens * qp.from_canon;
    return Subgroup{qp.group, Hom::make(qp.group, f.cod(), std::move(incl))};
}

Subgroup two_torsion(const FgGroup& u) { return kernel(Hom::scalar(u, Int(2))); }

Quotient mod_two(const FgGroup& u) { return cokernel(Hom::scalar(u, Int(2))); }

Quotient mod_n(const FgGroup& u, const Int& n) { return cokernel(Hom::scalar(u, n)); }

std::optional<GroupElement> preimage(const Hom& f, const GroupElement& y) {
    if (y.parent() != f.cod()) throw DomainError("preimage: element not in codomain");
    ModSolver solver(f.matrix(), f.cod().factors(), mod_hint(f.cod()));
    auto x = solver.solve(y.coeffs());
    if (!x) return std::nullopt;
    return GroupElement(f.dom(), std::move(*x));
}

std::optional<GroupElement> preimage_alternative(const Hom& f, const GroupElement& y) {
    if (y.parent() != f.cod()) throw DomainError("preimage: element not in codomain");
    ModSolver solver(f.matrix(), f.cod().factors(), mod_hint(f.cod()));
    auto x = solver.solve_alternative(y.coeffs());
    if (!x) return std::nullopt;
    return GroupElement(f.dom(), std::move(*x));
}

bool is_injective(const Hom& f) { return kernel(f).group.is_trivial(); }

bool is_surjective(const Hom& f) { return cokernel(f).group.is_trivial(); }

bool is_bijective(const Hom& f) { return is_injective(f) && is_surjective(f); }

Hom inverse(const Hom& f) {
    ModSolver solver(f.matrix(), f.cod().factors(), mod_hint(f.cod()));
    Mat m(f.dom().rank(), f.cod().rank());
    for (size_t j = 0; j < f.cod().rank(); ++j) {
        auto x = solver.solve(GroupElement::unit(f.cod(), j).coeffs());
        if (!x) throw DomainError("inverse: homomorphism is not surjective");
        m.set_col(j, *x);
    }
    Hom g = Hom::make(f.cod(), f.dom(), std::move(m));
    if (compose(g, f) != Hom::identity(f.dom()) || compose(f, g) != Hom::identity(f.cod()))
        throw DomainError("inverse: homomorphism is not bijective");
    return g;
}

bool image_leq(const Hom& a, const Hom& b) {
    if (a.cod() != b.cod()) throw DomainError("image comparison: different ambient groups");
    ModSolver solver(b.matrix(), b.cod().factors(), mod_hint(b.cod()));
    for (size_t j = 0; j < a.matrix().cols(); ++j)
        if (!solver.solve(a.matrix().col(j))) return false;
    return true;
}

bool same_image(const Hom& a, const Hom& b) { return image_leq(a, b) && image_leq(b, a); }

bool is_exact_at(const Hom& f, const Hom& g) {
    if (f.cod() != g.dom()) throw DomainError("exactness: maps not composable");
    if (!compose(g, f).is_zero()) return false;
    return image_leq(kernel(g).incl, f);
}

Hom factor_through_quotient(const Hom& proj, const Hom& f) {
    if (proj.dom() != f.dom()) throw DomainError("factor: maps have different domains");
    ModSolver solver(proj.matrix(), proj.cod().factors(), mod_hint(proj.cod()));
    Mat m(f.cod().rank(), proj.cod().rank());
    for (size_t j = 0; j < proj.cod().rank(); ++j) {
        auto x = solver.solve(GroupElement::unit(proj.cod(), j).coeffs());
        if (!x) throw DomainError("factor: projection is not surjective");
        m.set_col(j, mat_vec(f.matrix(), *x));
    }
    Hom out = [&] {
        try {
            return Hom::make(proj.cod(), f.cod(), std::move(m));
        } catch (const IllDefinedError&) {
            throw DomainError("factor: map does not kill the kernel of the projection");
        }
    }();
    if (compose(out, proj) != f)
        throw DomainError("factor: map does not kill the kernel of the projection");
    return out;
}

Hom corestrict(const Hom& f, const Hom& incl) {
    if (f.cod() != incl.cod()) throw DomainError("corestrict: different ambient groups");
    ModSolver solver(incl.matrix(), incl.cod().factors(), mod_hint(incl.cod()));
    Mat m(incl.dom().rank(), f.dom().rank());
    for (size_t j = 0; j < f.dom().rank(); ++j) {
        auto z = solver.solve(f.matrix().col(j));
        if (!z) throw DomainError("corestrict: image is not contained in the subgroup");
        m.set_col(j, *z);
    }
    Hom out = Hom::make(f.dom(), incl.dom(), std::move(m));
    if (compose(incl, out) != f)
        throw DomainError("corestrict: image is not contained in the subgroup");
    return out;
}

DirectSum direct_sum(const std::vector<FgGroup>& parts) {
    std::vector<Int> orders;
    std::vector<size_t> offset;
    for (const FgGroup& p : parts) {
        offset.push_back(orders.size());
        for (const Int& d : p.factors()) orders.push_back(d);
    }
    QuotientPresentation qp = make_group(orders);
    DirectSum out;
    out.group = qp.group;
    for (size_t k = 0; k < parts.size(); ++k) {
        size_t nk = parts[k].rank();
        Mat inj(orders.size(), nk);
        for (size_t t = 0; t < nk; ++t) inj.at(offset[k] + t, t) = Int(1);
        out.in.push_back(Hom::make(parts[k], qp.group, qp.to_canon * inj));
        Mat prj(nk, orders.size());
        for (size_t t = 0; t < nk; ++t) prj.at(t, offset[k] + t) = Int(1);
        out.pr.push_back(Hom::make(qp.group, parts[k], prj * qp.from_canon));
    }
    return out;
}

std::vector<GroupElement> elements(const FgGroup& u) {
    if (!u.is_finite()) throw InfiniteGroupError("cannot enumerate " + u.to_string());
    std::vector<GroupElement> out;
    std::vector<Int> c(u.rank());
    for (;;) {
        out.push_back(GroupElement(u, c));
        size_t i = 0;
        while (i < u.rank()) {
            c[i] += Int(1);
            if (c[i] < u.factor(i)) break;
            c[i] = Int(0);
            ++i;
        }
        if (i == u.rank()) break;
    }
    return out;
}

HomGroup::HomGroup(FgGroup dom, FgGroup cod) : dom_(std::move(dom)), cod_(std::move(cod)) {
    std::vector<Int> orders;
    for (size_t i = 0; i < cod_.rank(); ++i) {
        const Int& e = cod_.factor(i);
        for (size_t j = 0; j < dom_.rank(); ++j) {
            const Int& d = dom_.factor(j);
            if (e.is_zero()) {
                if (d.is_zero()) {
                    raw_.push_back({i, j, Int(1), Int(0)});  // Hom(Z, Z) = Z
                    orders.push_back(Int(0));
                }
                // Hom(Z/d, Z) = 0: no component
            } else if (d.is_zero()) {
                raw_.push_back({i, j, Int(1), e});  // Hom(Z, Z/e) = Z/e
                orders.push_back(e);
            } else {
                Int g = Int::gcd(d, e);
                if (g.is_one()) continue;
                raw_.push_back({i, j, e.div_exact(g), g});
                orders.push_back(g);
            }
        }
    }
    QuotientPresentation qp = make_group(orders);
    group_ = qp.group;
    to_canon_ = qp.to_canon;
    from_canon_ = qp.from_canon;
}

Hom HomGroup::elem_to_hom(const GroupElement& e) const {
    if (e.parent() != group_) throw DomainError("hom indexer: element of wrong group");
    std::vector<Int> raw = mat_vec(from_canon_, e.coeffs());
    Mat m(cod_.rank(), dom_.rank());
    for (size_t t = 0; t < raw_.size(); ++t) m.at(raw_[t].i, raw_[t].j) = raw[t] * raw_[t].kappa;
    return Hom::make(dom_, cod_, std::move(m));
}

GroupElement HomGroup::hom_to_elem(const Hom& h) const {
    if (h.dom() != dom_ || h.cod() != cod_) throw DomainError("hom indexer: wrong endpoints");
    std::vector<Int> raw(raw_.size());
    Mat leftover = h.matrix();
    for (size_t t = 0; t < raw_.size(); ++t) {
        const RawFactor& rf = raw_[t];
        const Int& v = h.matrix().at(rf.i, rf.j);
        if (!v.divisible_by(rf.kappa))
            throw DomainError("hom indexer: entry not a generator multiple");
        raw[t] = v / rf.kappa;
        leftover.at(rf.i, rf.j) = Int(0);
    }
    if (!leftover.is_zero()) throw DomainError("hom indexer: stray entries");
    return GroupElement(group_, mat_vec(to_canon_, raw));
}

std::vector<Hom> HomGroup::generator_homs() const {
    std::vector<Hom> out;
    for (size_t k = 0; k < group_.rank(); ++k)
        out.push_back(elem_to_hom(GroupElement::unit(group_, k)));
    return out;
}

Hom hom_push(const HomGroup& src, const HomGroup& dst, const Hom& post) {
    if (src.dom() != dst.dom() || post.dom() != src.cod() || post.cod() != dst.cod())
        throw DomainError("hom_push: endpoint mismatch");
    Mat m(dst.group().rank(), src.group().rank());
    for (size_t k = 0; k < src.group().rank(); ++k) {
        Hom g = src.elem_to_hom(GroupElement::unit(src.group(), k));
        m.set_col(k, dst.hom_to_elem(compose(post, g)).coeffs());
    }
    return Hom::make(src.group(), dst.group(), std::move(m));
}

Hom hom_pull(const HomGroup& src, const HomGroup& dst, const Hom& pre) {
    if (src.cod() != dst.cod() || pre.cod() != src.dom() || pre.dom() != dst.dom())
        throw DomainError("hom_pull: endpoint mismatch");
    Mat m(dst.group().rank(), src.group().rank());
    for (size_t k = 0; k < src.group().rank(); ++k) {
        Hom g = src.elem_to_hom(GroupElement::unit(src.group(), k));
        m.set_col(k, dst.hom_to_elem(compose(g, pre)).coeffs());
    }
    return Hom::make(src.group(), dst.group(), std::move(m));
}

Hom induced_on_two_torsion(const Hom& f) {
    Subgroup s = two_torsion(f.dom()), t = two_torsion(f.cod());
    return corestrict(compose(f, s.incl), t.incl);
}

Hom induced_on_mod_two(const Hom& f) {
    Quotient s = mod_two(f.dom()), t = mod_two(f.cod());
    return factor_through_quotient(s.proj, compose(t.proj, f));
}

Hom conjugation_map(const HomGroup& src, const HomGroup& dst, const Hom& post, const Hom& pre) {
    if (post.dom() != src.cod() || post.cod() != dst.cod() || pre.cod() != src.dom() ||
        pre.dom() != dst.dom())
        throw DomainError("conjugation_map: endpoint mismatch");
    Mat m(dst.group().rank(), src.group().rank());
    for (size_t k = 0; k < src.group().rank(); ++k) {
        Hom g = src.elem_to_hom(GroupElement::unit(src.group(), k));
        m.set_col(k, dst.hom_to_elem(compose(post, compose(g, pre))).coeffs());
    }
    return Hom::make(src.group(), dst.group(), std::move(m));
}

namespace {

void partitions_rec(long long n, long long maxpart, std::vector<long long>& cur,
                    std::vector<std::vector<long long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long long p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<long long>> partitions(long long n) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

}  // namespace

std::vector<FgGroup> abelian_groups_of_order(long long n) {
    if (n < 1) throw DomainError("group order must be positive");
    std::map<long long, long long> fact;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p)
        while (m % p == 0) {
            ++fact[p];
            m /= p;
        }
    if (m > 1) ++fact[m];

    std::vector<FgGroup> out;
    // one partition choice per prime; combine descending part-by-part
    std::vector<std::pair<long long, std::vector<std::vector<long long>>>> per_prime;
    for (auto& [p, a] : fact) per_prime.emplace_back(p, partitions(a));
    std::vector<size_t> idx(per_prime.size(), 0);
    for (;;) {
        size_t nparts = 0;
        for (size_t k = 0; k < per_prime.size(); ++k)
            nparts = std::max(nparts, per_prime[k].second[idx[k]].size());
        std::vector<Int> desc(nparts, Int(1));
        for (size_t k = 0; k < per_prime.size(); ++k) {
            const auto& lambda = per_prime[k].second[idx[k]];
            for (size_t t = 0; t < lambda.size(); ++t) {
                Int pe(1);
                for (long long e = 0; e < lambda[t]; ++e) pe *= Int(per_prime[k].first);
                desc[t] *= pe;
            }
        }
        std::reverse(desc.begin(), desc.end());
        std::vector<Int> factors;
        for (const Int& d : desc)
            if (!d.is_one()) factors.push_back(d);
        out.push_back(FgGroup::from_invariant_factors(std::move(factors)));

        size_t k = 0;
        while (k < per_prime.size()) {
            if (++idx[k] < per_prime[k].second.size()) break;
            idx[k] = 0;
            ++k;
        }
        if (k == per_prime.size()) break;
        if (per_prime.empty()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FgGroup> abelian_groups_up_to_order(long long maxn) {
    std::vector<FgGroup> out;
    for (long long n = 1; n <= maxn; ++n)
        for (FgGroup& g : abelian_groups_of_order(n)) out.push_back(std::move(g));
    return out;
}

}  // namespace moorediag
