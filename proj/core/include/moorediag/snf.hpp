#pragma once

#include <optional>
#include <vector>

#include "moorediag/matrix.hpp"

namespace moorediag {

/// Smith normal form: l * input * r = d with d diagonal, nonnegative, each
/// diagonal entry dividing the next, and l, r unimodular. Transform matrices
/// are computed only when requested; the ones not requested are left empty.
struct Snf {
    Mat d;
    Mat l, linv;  // l * linv = identity
    Mat r, rinv;
    size_t rank = 0;  // number of nonzero diagonal entries

    std::vector<Int> diag() const;
};

struct SnfNeed {
    bool l = true;
    bool linv = true;
    bool r = true;
    bool rinv = true;
};

/// Deterministic: pivoting always selects the smallest nonzero absolute value,
/// breaking ties by row then column, so identical inputs give identical output.
Snf snf(Mat a, SnfNeed need = {});

/// SNF with every entry kept in the balanced range (-m/2, m/2]. Valid for
/// systems whose rows and columns only matter modulo divisors of m (reducing
/// an entry mod m is a column operation against the slack lattice); the
/// bounded entries keep Euclidean elimination from blowing up. Transforms are
/// invertible mod m, and l * input * r = d holds mod m.
Snf snf_mod(Mat a, const Int& m, SnfNeed need = {});

/// Generators (columns) of the lattice {x in Z^n : a*x lies in the span of
/// ann[i]*e_i}. Entries of `ann` equal to zero contribute nothing to the span,
/// i.e. those coordinates of a*x must vanish exactly. When `mod` is nonzero it
/// must be a common multiple of all nonzero ann[i] and of every modulus the
/// caller attaches to the variables; the computation then runs mod `mod`.
Mat kernel_lattice(const Mat& a, const std::vector<Int>& ann, const Int& mod = Int(0),
                   bool reduce = true);

/// Repeated-right-hand-side solver for  a*x = b  (mod ann), sharing one SNF.
/// A nonzero `mod` (a common multiple of all nonzero ann[i]) switches to the
/// bounded mod-m elimination; solutions remain exact integer solutions of the
/// original congruence system.
class ModSolver {
  public:
    ModSolver(Mat a, std::vector<Int> ann, Int mod = Int(0));

    /// A particular solution (length = a.cols()), or nullopt if inconsistent.
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;
    /// Like solve(), but when a nontrivial kernel generator exists the result
    /// is shifted by it. Used by tests that must exercise choice-independence.
    std::optional<std::vector<Int>> solve_alternative(const std::vector<Int>& b) const;
    /// Generators of {x : a*x = 0 (mod ann)} as columns.
    const Mat& kernel_gens() const { return kernel_; }

  private:
    size_t nvars_;
    size_t nrows_;
    Int mod_;
    Snf s_;
    Mat kernel_;
};

}  // namespace moorediag
