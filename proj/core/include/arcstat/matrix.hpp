#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcstat/partition.hpp"
#include "arcstat/polynomial.hpp"

namespace arcstat {

/// n x n matrix over {0,1}. Indices are 1-based throughout this module,
/// matching the usual notation for rank-control matrices.
class ZeroOneMatrix {
public:
    explicit ZeroOneMatrix(int n);
    ZeroOneMatrix(int n, const std::vector<std::vector<int>>& rows);

    int n() const { return n_; }
    int at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, int value);

    /// At most one 1 per row and per column.
    bool is_partial_permutation() const;
    bool is_strictly_upper_triangular() const;

    bool operator==(const ZeroOneMatrix&) const = default;

private:
    std::size_t idx(int i, int j) const;
    int n_;
    std::vector<std::uint8_t> e_;
};

/// Integer matrix used by the exact rational-rank oracle.
class IntMatrix {
public:
    explicit IntMatrix(int n);
    explicit IntMatrix(const ZeroOneMatrix& m);

    int n() const { return n_; }
    long long at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, long long value);

private:
    std::size_t idx(int i, int j) const;
    int n_;
    std::vector<long long> e_;
};

/// Matrix over the integers mod p, p prime. Entries are kept reduced.
class FieldMatrix {
public:
    FieldMatrix(int n, int p);
    FieldMatrix(const ZeroOneMatrix& m, int p);

    int n() const { return n_; }
    int prime() const { return p_; }
    int at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, long long value);

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);

    bool operator==(const FieldMatrix&) const = default;

private:
    std::size_t idx(int i, int j) const;
    int n_, p_;
    std::vector<int> e_;
};

/// r(k,l) is the rank of the corner submatrix on rows k..n and columns
/// 1..l. Entries are weakly increasing in l, weakly decreasing in k, and
/// bounded by min(n-k+1, l); the constructor enforces this.
class RankControlMatrix {
public:
    RankControlMatrix(int n, std::vector<int> entries);  // row-major, rows indexed by k

    int n() const { return n_; }
    int at(int k, int l) const { return r_[idx(k, l)]; }

    bool operator==(const RankControlMatrix&) const = default;

private:
    std::size_t idx(int k, int l) const;
    int n_;
    std::vector<int> r_;
};

/// m(i,j) = 1 exactly when (i,j) is an arc; strictly upper triangular
/// with one 1 per arc.
ZeroOneMatrix adjacency_matrix(const ArcDiagram& d);

/// Corner ranks of a partial-permutation matrix by direct counting:
/// r(k,l) = number of ones in rows >= k and columns <= l. Falls back to
/// the elimination oracle when the partial-permutation invariant fails.
RankControlMatrix rank_control(const ZeroOneMatrix& m);

/// Corner ranks by exact fraction-free Gaussian elimination over the
/// rationals.
RankControlMatrix rank_control_oracle(const IntMatrix& m);

/// Corner ranks by Gaussian elimination over the integers mod p.
RankControlMatrix rank_control_oracle(const FieldMatrix& m);

/// Number of antidiagonal inequalities r(i,j) != r(i-1,j+1) over
/// 2 <= i <= n, 1 <= j <= n-1. Equals the depth index for rank-control
/// matrices of adjacency matrices.
int d_statistic(const RankControlMatrix& r);

/// Number of antidiagonal equalities r(i,j) == r(i-1,j+1) over
/// 2 <= i <= j+1 <= n. Equals the intertwining number; d + e = C(n,2).
int e_statistic(const RankControlMatrix& r);

/// Entrywise comparison; the order it induces on adjacency rank-control
/// matrices is the Bruhat-Chevalley-Renner order. Throws on size mismatch.
bool leq_componentwise(const RankControlMatrix& a, const RankControlMatrix& b);

/// Draws seeded random invertible upper-triangular B, C over Z/p, forms
/// Y = B*M*C, and reports whether Y and M have equal rank-control
/// matrices over Z/p. Always true; a false return is a found
/// counterexample, not an error.
bool orbit_invariance_trial(const ZeroOneMatrix& m, int prime, std::uint64_t seed);

/// Rows as JSON arrays: [[...],[...],...].
std::string matrix_to_json(const ZeroOneMatrix& m);
std::string matrix_to_json(const RankControlMatrix& r);

}  // namespace arcstat
