#include "moorediag/snf.hpp"

#include <stdexcept>

namespace moorediag {

std::vector<Int> Snf::diag() const {
    size_t n = std::min(d.rows(), d.cols());
    std::vector<Int> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = d.at(i, i);
    return v;
}

namespace {

// representative of v mod m in (-m/2, m/2]; identity when m = 0
Int balanced(const Int& v, const Int& m) {
    if (m.is_zero()) return v;
    Int r = Int::mod_reduce(v, m);
    if (r + r > m) r -= m;
    return r;
}

// Bundles the worked matrix with the requested transforms so row/column
// operations stay synchronized. An op on `a` is mirrored on l/linv (rows)
// or r/rinv (cols); the inverse transform receives the inverse op on the
// opposite side. A nonzero modulus keeps every entry balanced.
struct Work {
    Mat a;
    Mat l, linv, r, rinv;
    SnfNeed need;
    Int m;

    void red(Mat& x, size_t i, size_t j) {
        if (!m.is_zero()) x.at(i, j) = balanced(x.at(i, j), m);
    }
    void red_row(Mat& x, size_t i) {
        if (m.is_zero()) return;
        for (size_t j = 0; j < x.cols(); ++j) red(x, i, j);
    }
    void red_col(Mat& x, size_t j) {
        if (m.is_zero()) return;
        for (size_t i = 0; i < x.rows(); ++i) red(x, i, j);
    }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        a.swap_rows(i, j);
        if (need.l) l.swap_rows(i, j);
        if (need.linv) linv.swap_cols(i, j);
    }
    void swap_cols(size_t i, size_t j) {
        if (i == j) return;
        a.swap_cols(i, j);
        if (need.r) r.swap_cols(i, j);
        if (need.rinv) rinv.swap_rows(i, j);
    }
    void add_row_multiple(size_t dst, size_t src, const Int& q) {
        if (q.is_zero()) return;
        a.add_row_multiple(dst, src, q);
        red_row(a, dst);
        if (need.l) {
            l.add_row_multiple(dst, src, q);
            red_row(l, dst);
        }
        if (need.linv) {
            linv.add_col_multiple(src, dst, -q);
            red_col(linv, src);
        }
    }
    void add_col_multiple(size_t dst, size_t src, const Int& q) {
        if (q.is_zero()) return;
        a.add_col_multiple(dst, src, q);
        red_col(a, dst);
        if (need.r) {
            r.add_col_multiple(dst, src, q);
            red_col(r, dst);
        }
        if (need.rinv) {
            rinv.add_row_multiple(src, dst, -q);
            red_row(rinv, src);
        }
    }
    void negate_row(size_t i) {
        a.negate_row(i);
        if (need.l) l.negate_row(i);
        if (need.linv) linv.negate_col(i);
    }
};

// Flat-int64 lane for the bounded-modulus case: entries stay in
// (-m/2, m/2], so products never approach overflow and there is no
// arbitrary-precision overhead in the inner loops.
struct SmallWork {
    size_t rows, cols;
    long long m;
    SnfNeed need;
    size_t lo = 0;  // active submatrix starts at (lo, lo); earlier rows/cols of a are settled
    std::vector<long long> a, l, linv, r, rinv;

    long long& A(size_t i, size_t j) { return a[i * cols + j]; }
    long long& L(size_t i, size_t j) { return l[i * rows + j]; }
    long long& Li(size_t i, size_t j) { return linv[i * rows + j]; }
    long long& R(size_t i, size_t j) { return r[i * cols + j]; }
    long long& Ri(size_t i, size_t j) { return rinv[i * cols + j]; }

    long long bal(long long v) const {
        if (2 * v > m || 2 * v <= -m) {
            if (v >= (m << 2) || v <= -(m << 2)) v %= m;
            while (2 * v > m) v -= m;
            while (2 * v <= -m) v += m;
        }
        return v;
    }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = lo; k < cols; ++k) std::swap(A(i, k), A(j, k));
        if (need.l)
            for (size_t k = 0; k < rows; ++k) std::swap(L(i, k), L(j, k));
        if (need.linv)
            for (size_t k = 0; k < rows; ++k) std::swap(Li(k, i), Li(k, j));
    }
    void swap_cols(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = lo; k < rows; ++k) std::swap(A(k, i), A(k, j));
        if (need.r)
            for (size_t k = 0; k < cols; ++k) std::swap(R(k, i), R(k, j));
        if (need.rinv)
            for (size_t k = 0; k < cols; ++k) std::swap(Ri(i, k), Ri(j, k));
    }
    void add_row_multiple(size_t dst, size_t src, long long q) {
        if (!q) return;
        for (size_t k = lo; k < cols; ++k) A(dst, k) = bal(A(dst, k) + q * A(src, k));
        if (need.l)
            for (size_t k = 0; k < rows; ++k) L(dst, k) = bal(L(dst, k) + q * L(src, k));
        if (need.linv)
            for (size_t k = 0; k < rows; ++k) Li(k, src) = bal(Li(k, src) - q * Li(k, dst));
    }
    void add_col_multiple(size_t dst, size_t src, long long q) {
        if (!q) return;
        for (size_t k = lo; k < rows; ++k) A(k, dst) = bal(A(k, dst) + q * A(k, src));
        if (need.r)
            for (size_t k = 0; k < cols; ++k) R(k, dst) = bal(R(k, dst) + q * R(k, src));
        if (need.rinv)
            for (size_t k = 0; k < cols; ++k) Ri(src, k) = bal(Ri(src, k) - q * Ri(dst, k));
    }
    void negate_row(size_t i) {
        for (size_t k = 0; k < cols; ++k) A(i, k) = -A(i, k);
        if (need.l)
            for (size_t k = 0; k < rows; ++k) L(i, k) = -L(i, k);
        if (need.linv)
            for (size_t k = 0; k < rows; ++k) Li(k, i) = -Li(k, i);
    }
};

Snf snf_small(const Mat& input, long long m, SnfNeed need) {
    SmallWork w;
    w.rows = input.rows();
    w.cols = input.cols();
    w.m = m;
    w.need = need;
    w.a.resize(w.rows * w.cols);
    for (size_t i = 0; i < w.rows; ++i)
        for (size_t j = 0; j < w.cols; ++j) w.A(i, j) = w.bal(Int::mod_reduce(input.at(i, j), Int(m)).to_ll());
    auto ident = [](std::vector<long long>& v, size_t n) {
        v.assign(n * n, 0);
        for (size_t i = 0; i < n; ++i) v[i * n + i] = 1;
    };
    if (need.l) ident(w.l, w.rows);
    if (need.linv) ident(w.linv, w.rows);
    if (need.r) ident(w.r, w.cols);
    if (need.rinv) ident(w.rinv, w.cols);

    size_t k = 0;
    const size_t kmax = std::min(w.rows, w.cols);
    while (k < kmax) {
        w.lo = k;
        size_t pi = 0, pj = 0;
        long long best = 0;
        for (size_t i = k; i < w.rows; ++i)
            for (size_t j = k; j < w.cols; ++j) {
                long long v = w.A(i, j);
                if (!v) continue;
                long long av = v < 0 ? -v : v;
                if (!best || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (!best) break;
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);

        for (;;) {
            bool again = false;
            for (size_t i = k + 1; i < w.rows; ++i) {
                if (!w.A(i, k)) continue;
                long long q = w.A(i, k) / w.A(k, k);
                w.add_row_multiple(i, k, -q);
                if (w.A(i, k)) {
                    w.swap_rows(i, k);
                    again = true;
                    break;
                }
            }
            if (again) continue;
            for (size_t j = k + 1; j < w.cols; ++j) {
                if (!w.A(k, j)) continue;
                long long q = w.A(k, j) / w.A(k, k);
                w.add_col_multiple(j, k, -q);
                if (w.A(k, j)) {
                    w.swap_cols(j, k);
                    again = true;
                    break;
                }
            }
            if (!again) break;
        }

        bool fixed = true;
        long long d = w.A(k, k);
        for (size_t i = k + 1; i < w.rows && fixed; ++i)
            for (size_t j = k + 1; j < w.cols && fixed; ++j)
                if (w.A(i, j) % d) {
                    w.add_row_multiple(k, i, 1);
                    fixed = false;
                }
        if (!fixed) continue;

        if (w.A(k, k) < 0) w.negate_row(k);
        ++k;
    }

    Snf out;
    out.rank = k;
    auto to_mat = [](const std::vector<long long>& v, size_t rows, size_t cols) {
        Mat m2(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) m2.at(i, j) = Int(v[i * cols + j]);
        return m2;
    };
    out.d = to_mat(w.a, w.rows, w.cols);
    if (need.l) out.l = to_mat(w.l, w.rows, w.rows);
    if (need.linv) out.linv = to_mat(w.linv, w.rows, w.rows);
    if (need.r) out.r = to_mat(w.r, w.cols, w.cols);
    if (need.rinv) out.rinv = to_mat(w.rinv, w.cols, w.cols);
    return out;
}

// Smallest nonzero |entry| in the trailing submatrix, ties broken by
// position. Returns false if the submatrix is zero.
bool find_pivot(const Mat& a, size_t k, size_t& pi, size_t& pj) {
    bool found = false;
    Int best;
    for (size_t i = k; i < a.rows(); ++i)
        for (size_t j = k; j < a.cols(); ++j) {
            const Int& v = a.at(i, j);
            if (v.is_zero()) continue;
            Int av = v.abs();
            if (!found || av < best) {
                found = true;
                best = av;
                pi = i;
                pj = j;
            }
        }
    return found;
}

Snf snf_impl(Mat a, const Int& m, SnfNeed need) {
    const size_t rows = a.rows(), cols = a.cols();
    Work w;
    w.a = std::move(a);
    w.need = need;
    w.m = m;
    if (!m.is_zero())
        for (size_t i = 0; i < rows; ++i) w.red_row(w.a, i);
    if (need.l) w.l = Mat::identity(rows);
    if (need.linv) w.linv = Mat::identity(rows);
    if (need.r) w.r = Mat::identity(cols);
    if (need.rinv) w.rinv = Mat::identity(cols);

    size_t k = 0;
    const size_t kmax = std::min(rows, cols);
    while (k < kmax) {
        size_t pi, pj;
        if (!find_pivot(w.a, k, pi, pj)) break;
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);

        for (;;) {
            bool again = false;
            for (size_t i = k + 1; i < rows; ++i) {
                if (w.a.at(i, k).is_zero()) continue;
                Int q = w.a.at(i, k) / w.a.at(k, k);
                w.add_row_multiple(i, k, -q);
                if (!w.a.at(i, k).is_zero()) {
                    // nonzero remainder is strictly smaller; make it the pivot
                    w.swap_rows(i, k);
                    again = true;
                    break;
                }
            }
            if (again) continue;
            for (size_t j = k + 1; j < cols; ++j) {
                if (w.a.at(k, j).is_zero()) continue;
                Int q = w.a.at(k, j) / w.a.at(k, k);
                w.add_col_multiple(j, k, -q);
                if (!w.a.at(k, j).is_zero()) {
                    w.swap_cols(j, k);
                    again = true;
                    break;
                }
            }
            if (!again) break;
        }

        // Divisibility: the pivot must divide every remaining entry. Folding
        // an offending row into row k and redoing the reduction replaces the
        // pivot by a strictly smaller gcd, so this terminates.
        bool fixed = true;
        for (size_t i = k + 1; i < rows && fixed; ++i)
            for (size_t j = k + 1; j < cols && fixed; ++j)
                if (!w.a.at(i, j).divisible_by(w.a.at(k, k))) {
                    w.add_row_multiple(k, i, Int(1));
                    fixed = false;
                }
        if (!fixed) continue;

        if (w.a.at(k, k).is_negative()) w.negate_row(k);
        ++k;
    }

    Snf out;
    out.rank = k;
    out.d = std::move(w.a);
    out.l = std::move(w.l);
    out.linv = std::move(w.linv);
    out.r = std::move(w.r);
    out.rinv = std::move(w.rinv);
    return out;
}

Mat augment_slack(const Mat& a, const std::vector<Int>& ann) {
    if (ann.size() != a.rows()) throw std::invalid_argument("slack: ann length mismatch");
    std::vector<size_t> slack;
    for (size_t i = 0; i < ann.size(); ++i)
        if (!ann[i].is_zero()) slack.push_back(i);
    Mat b(a.rows(), a.cols() + slack.size());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) b.at(i, j) = a.at(i, j);
    for (size_t s = 0; s < slack.size(); ++s) b.at(slack[s], a.cols() + s) = ann[slack[s]];
    return b;
}

}  // namespace

Snf snf(Mat a, SnfNeed need) { return snf_impl(std::move(a), Int(0), need); }

Snf snf_mod(Mat a, const Int& m, SnfNeed need) {
    if (m.is_zero() || m.is_negative())
        throw std::invalid_argument("snf_mod: modulus must be positive");
    if (m.is_small() && m.to_ll() <= (1LL << 20)) return snf_small(a, m.to_ll(), need);
    return snf_impl(std::move(a), m, need);
}

Mat kernel_lattice(const Mat& a, const std::vector<Int>& ann, const Int& mod, bool reduce) {
    const size_t n = a.cols();
    Mat b = augment_slack(a, ann);
    SnfNeed need;
    need.l = need.linv = need.rinv = false;
    std::vector<size_t> first_n;
    for (size_t i = 0; i < n; ++i) first_n.push_back(i);

    auto drop_zero_cols = [](const Mat& g) {
        std::vector<size_t> keep;
        for (size_t j = 0; j < g.cols(); ++j) {
            bool zero = true;
            for (size_t i = 0; i < g.rows() && zero; ++i) zero = g.at(i, j).is_zero();
            if (!zero) keep.push_back(j);
        }
        return g.submatrix_cols(keep);
    };

    if (mod.is_zero()) {
        Snf s = snf_impl(std::move(b), Int(0), need);
        std::vector<size_t> free_cols;
        for (size_t j = s.rank; j < s.r.cols(); ++j) free_cols.push_back(j);
        return drop_zero_cols(s.r.submatrix_cols(free_cols).submatrix_rows(first_n));
    }

    // mod-m path: for each diagonal entry d the solutions of d z = 0 (mod m)
    // are generated by (m / gcd(d, m)) z, and the slack structure already
    // covers m Z^n. The generator matrix is then compressed to at most n
    // columns: with G = Linv D Rinv (mod m) and span(G) containing m Z^n,
    // span(G) is generated by gcd(d_i, m) * Linv_i.
    Snf s = snf_mod(std::move(b), mod, need);
    size_t total = s.r.cols();
    Mat wide(n, total + (reduce ? 0 : n));
    for (size_t j = 0; j < total; ++j) {
        Int d = j < s.rank ? s.d.at(j, j) : Int(0);
        Int scale = mod.div_exact(Int::gcd(d, mod));
        if (scale == mod) continue;  // multiple of m: inside m Z^n
        for (size_t i = 0; i < n; ++i)
            wide.at(i, j) = balanced(s.r.at(i, j) * scale, mod);
    }
    if (!reduce) {
        // generators only (plus m Z^n): callers that just evaluate maps on
        // them can skip the compression pass
        for (size_t i = 0; i < n; ++i) wide.at(i, total + i) = mod;
        return drop_zero_cols(wide);
    }
    SnfNeed cneed;
    cneed.l = cneed.r = cneed.rinv = false;
    Snf c = snf_mod(wide, mod, cneed);
    // no balancing here: the m * Linv_i columns must survive to keep
    // m Z^n inside the span
    Mat out(n, n);
    for (size_t i = 0; i < n; ++i) {
        Int d = i < c.rank ? c.d.at(i, i) : Int(0);
        Int g = Int::gcd(d, mod);
        for (size_t row = 0; row < n; ++row) out.at(row, i) = c.linv.at(row, i) * g;
    }
    return drop_zero_cols(out);
}

ModSolver::ModSolver(Mat a, std::vector<Int> ann, Int mod)
    : nvars_(a.cols()), nrows_(a.rows()), mod_(std::move(mod)) {
    Mat b = augment_slack(a, ann);
    SnfNeed need;
    need.linv = need.rinv = false;
    s_ = mod_.is_zero() ? snf(std::move(b), need) : snf_mod(std::move(b), mod_, need);

    // kernel generators straight from the factorization already computed
    const size_t total = s_.r.cols();
    std::vector<size_t> first_n;
    for (size_t i = 0; i < nvars_; ++i) first_n.push_back(i);
    if (mod_.is_zero()) {
        std::vector<size_t> free_cols;
        for (size_t j = s_.rank; j < total; ++j) free_cols.push_back(j);
        kernel_ = s_.r.submatrix_cols(free_cols).submatrix_rows(first_n);
    } else {
        Mat wide(nvars_, total + nvars_);
        for (size_t j = 0; j < total; ++j) {
            Int d = j < s_.rank ? s_.d.at(j, j) : Int(0);
            Int scale = mod_.div_exact(Int::gcd(d, mod_));
            if (scale == mod_) continue;
            for (size_t i = 0; i < nvars_; ++i) wide.at(i, j) = s_.r.at(i, j) * scale;
        }
        for (size_t i = 0; i < nvars_; ++i) wide.at(i, total + i) = mod_;
        kernel_ = wide;
    }
    // drop columns that vanish
    std::vector<size_t> keep;
    for (size_t j = 0; j < kernel_.cols(); ++j) {
        bool zero = true;
        for (size_t i = 0; i < kernel_.rows() && zero; ++i) zero = kernel_.at(i, j).is_zero();
        if (!zero) keep.push_back(j);
    }
    kernel_ = kernel_.submatrix_cols(keep);
}

std::optional<std::vector<Int>> ModSolver::solve(const std::vector<Int>& b) const {
    if (b.size() != nrows_) throw std::invalid_argument("ModSolver::solve: length mismatch");
    std::vector<Int> y = mat_vec(s_.l, b);
    std::vector<Int> z(s_.r.cols());
    if (mod_.is_zero()) {
        for (size_t i = 0; i < y.size(); ++i) {
            if (i < s_.rank) {
                if (!y[i].divisible_by(s_.d.at(i, i))) return std::nullopt;
                z[i] = y[i] / s_.d.at(i, i);
            } else if (!y[i].is_zero()) {
                return std::nullopt;
            }
        }
    } else {
        // solve d z = y (mod m) one diagonal entry at a time
        for (size_t i = 0; i < y.size(); ++i) {
            Int d = i < s_.rank ? s_.d.at(i, i) : Int(0);
            Int g = Int::gcd(d, mod_);
            Int yi = Int::mod_reduce(y[i], mod_);
            if (!yi.divisible_by(g)) return std::nullopt;
            if (g == mod_) continue;  // d = 0 mod m: any z works, keep 0
            // with d = g * d', m = g * m', gcd(d', m') = 1:
            // z = (y / g) * inv(d') (mod m')
            Int dp = Int::mod_reduce(d, mod_).div_exact(g);
            Int mp = mod_.div_exact(g);
            // modular inverse of dp mod mp by extended euclid
            Int t0(0), t1(1), r0 = mp, r1 = Int::mod_reduce(dp, mp);
            while (!r1.is_zero()) {
                Int q = r0 / r1;
                Int tmp = t0 - q * t1;
                t0 = t1;
                t1 = tmp;
                tmp = r0 - q * r1;
                r0 = r1;
                r1 = tmp;
            }
            // r0 = gcd = 1, t0 = inverse
            z[i] = Int::mod_reduce(yi.div_exact(g) * t0, mp);
        }
    }
    std::vector<Int> x = mat_vec(s_.r, z);
    x.resize(nvars_);
    if (!mod_.is_zero())
        for (Int& v : x) v = Int::mod_reduce(v, mod_);
    return x;
}

std::optional<std::vector<Int>> ModSolver::solve_alternative(const std::vector<Int>& b) const {
    auto x = solve(b);
    if (!x || kernel_.cols() == 0) return x;
    for (size_t i = 0; i < nvars_; ++i) (*x)[i] += kernel_.at(i, 0);
    return x;
}

}  // namespace moorediag
