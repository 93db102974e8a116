#include "oracles.hpp"

namespace moorediag::oracle {

namespace {

// walk all matrices with entry (i,j) in [0, e_i), calling fn on each
template <typename Fn>
void walk_matrices(const FgGroup& u, const FgGroup& v, Fn&& fn) {
    const size_t n = u.rank(), m = v.rank();
    std::vector<long long> bound(m);
    for (size_t i = 0; i < m; ++i) bound[i] = v.factor(i).to_ll();
    Mat mat(m, n);
    std::vector<long long> cur(m * n, 0);
    for (;;) {
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < n; ++j) mat.at(i, j) = Int(cur[i * n + j]);
        fn(mat);
        size_t k = 0;
        while (k < cur.size()) {
            ++cur[k];
            if (cur[k] < bound[k / n]) break;
            cur[k] = 0;
            ++k;
        }
        if (k == cur.size()) break;
    }
}

bool well_defined(const FgGroup& u, const FgGroup& v, const Mat& m) {
    for (size_t i = 0; i < v.rank(); ++i)
        for (size_t j = 0; j < u.rank(); ++j) {
            Int prod = u.factor(j) * m.at(i, j);
            if (!(prod % v.factor(i)).is_zero()) return false;
        }
    return true;
}

}  // namespace

long long count_homs_exhaustive(const FgGroup& u, const FgGroup& v) {
    if (!u.is_finite() && !v.is_finite())
        throw InfiniteGroupError("oracle cannot enumerate Hom with Z on both sides");
    long long count = 0;
    walk_matrices(u, v, [&](const Mat& m) {
        if (well_defined(u, v, m)) ++count;
    });
    return count;
}

std::vector<Hom> all_homs(const FgGroup& u, const FgGroup& v) {
    std::vector<Hom> out;
    walk_matrices(u, v, [&](const Mat& m) {
        if (well_defined(u, v, m)) out.push_back(Hom::make(u, v, m));
    });
    return out;
}

std::map<long long, long long> order_profile_of_cyclic_list(
    const std::vector<long long>& orders) {
    std::map<long long, long long> profile;
    std::vector<long long> cur(orders.size(), 0);
    for (;;) {
        long long o = 1;
        for (size_t i = 0; i < orders.size(); ++i) {
            long long d = orders[i], c = cur[i];
            long long g = std::__gcd(c, d);
            long long eo = d / (g == 0 ? d : g);  // order of c in Z/d
            if (c == 0) eo = 1;
            o = o / std::__gcd(o, eo) * eo;
        }
        ++profile[o];
        size_t k = 0;
        while (k < cur.size()) {
            ++cur[k];
            if (cur[k] < orders[k]) break;
            cur[k] = 0;
            ++k;
        }
        if (k == cur.size()) break;
    }
    return profile;
}

}  // namespace moorediag::oracle
