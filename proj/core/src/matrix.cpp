#include "arcstat/matrix.hpp"

#include <random>
#include <stdexcept>

#include "json.hpp"

namespace arcstat {

namespace {

void check_index(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("matrix index out of range");
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Rank of the corner submatrix rows k..n, cols 1..l by fraction-free
// (Bareiss) elimination; exact over the integers.
int corner_rank_bareiss(const IntMatrix& m, int k, int l) {
    int rows = m.n() - k + 1, cols = l;
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = m.at(k + i, 1 + j);

    int rank = 0;
    BigInt prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

int corner_rank_mod_p(const FieldMatrix& m, int k, int l) {
    int rows = m.n() - k + 1, cols = l;
    long long p = m.prime();
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = m.at(k + i, 1 + j);

    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        // row_i <- pivot*row_i - a[i][c]*row_pivot, no inverses needed
        for (int i = rank + 1; i < rows; ++i) {
            long long f = a[i][c];
            if (f == 0) continue;
            for (int j = c; j < cols; ++j)
                a[i][j] = ((a[rank][c] * a[i][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

ZeroOneMatrix::ZeroOneMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw std::invalid_argument("ZeroOneMatrix: n must be positive");
}

ZeroOneMatrix::ZeroOneMatrix(int n, const std::vector<std::vector<int>>& rows) : ZeroOneMatrix(n) {
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("ZeroOneMatrix: wrong number of rows");
    for (int i = 1; i <= n; ++i) {
        if (static_cast<int>(rows[i - 1].size()) != n)
            throw std::invalid_argument("ZeroOneMatrix: wrong row length");
        for (int j = 1; j <= n; ++j) set(i, j, rows[i - 1][j - 1]);
    }
}

std::size_t ZeroOneMatrix::idx(int i, int j) const {
    check_index(n_, i, j);
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

void ZeroOneMatrix::set(int i, int j, int value) {
    if (value != 0 && value != 1) throw std::invalid_argument("ZeroOneMatrix: entry must be 0 or 1");
    e_[idx(i, j)] = static_cast<std::uint8_t>(value);
}

bool ZeroOneMatrix::is_partial_permutation() const {
    for (int i = 1; i <= n_; ++i) {
        int row = 0, col = 0;
        for (int j = 1; j <= n_; ++j) {
            row += at(i, j);
            col += at(j, i);
        }
        if (row > 1 || col > 1) return false;
    }
    return true;
}

bool ZeroOneMatrix::is_strictly_upper_triangular() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= i; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

IntMatrix::IntMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw std::invalid_argument("IntMatrix: n must be positive");
}

IntMatrix::IntMatrix(const ZeroOneMatrix& m) : IntMatrix(m.n()) {
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) set(i, j, m.at(i, j));
}

std::size_t IntMatrix::idx(int i, int j) const {
    check_index(n_, i, j);
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

void IntMatrix::set(int i, int j, long long value) { e_[idx(i, j)] = value; }

FieldMatrix::FieldMatrix(int n, int p) : n_(n), p_(p), e_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw std::invalid_argument("FieldMatrix: n must be positive");
    if (!is_prime(p)) throw std::invalid_argument("FieldMatrix: p must be prime");
}

FieldMatrix::FieldMatrix(const ZeroOneMatrix& m, int p) : FieldMatrix(m.n(), p) {
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) set(i, j, m.at(i, j));
}

std::size_t FieldMatrix::idx(int i, int j) const {
    check_index(n_, i, j);
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

void FieldMatrix::set(int i, int j, long long value) {
    e_[idx(i, j)] = static_cast<int>(((value % p_) + p_) % p_);
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.n() != b.n() || a.prime() != b.prime())
        throw std::invalid_argument("FieldMatrix product: shape or modulus mismatch");
    FieldMatrix out(a.n(), a.prime());
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.n(); ++j) {
            long long acc = 0;
            for (int k = 1; k <= a.n(); ++k)
                acc = (acc + static_cast<long long>(a.at(i, k)) * b.at(k, j)) % a.prime();
            out.set(i, j, acc);
        }
    return out;
}

RankControlMatrix::RankControlMatrix(int n, std::vector<int> entries)
    : n_(n), r_(std::move(entries)) {
    if (n < 1) throw std::invalid_argument("RankControlMatrix: n must be positive");
    if (r_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("RankControlMatrix: wrong entry count");
    for (int k = 1; k <= n_; ++k)
        for (int l = 1; l <= n_; ++l) {
            int v = at(k, l);
            if (v < 0 || v > std::min(n_ - k + 1, l))
                throw std::invalid_argument("RankControlMatrix: entry out of bounds");
            if (l > 1 && at(k, l - 1) > v)
                throw std::invalid_argument("RankControlMatrix: not increasing in l");
            if (k > 1 && at(k - 1, l) < v)
                throw std::invalid_argument("RankControlMatrix: not decreasing in k");
        }
}

std::size_t RankControlMatrix::idx(int k, int l) const {
    check_index(n_, k, l);
    return static_cast<std::size_t>(k - 1) * n_ + (l - 1);
}

ZeroOneMatrix adjacency_matrix(const ArcDiagram& d) {
    ZeroOneMatrix m(d.n());
    for (auto [i, j] : d.arcs()) m.set(i, j, 1);
    return m;
}

RankControlMatrix rank_control(const ZeroOneMatrix& m) {
    if (!m.is_partial_permutation()) return rank_control_oracle(IntMatrix(m));
    int n = m.n();
    std::vector<int> r(static_cast<std::size_t>(n) * n, 0);
    // ones in rows >= k, columns <= l, via a 2-d suffix/prefix sum
    for (int k = n; k >= 1; --k) {
        int row_ones = 0;
        for (int l = 1; l <= n; ++l) {
            row_ones += m.at(k, l);
            int below = k < n ? r[static_cast<std::size_t>(k) * n + (l - 1)] : 0;
            r[static_cast<std::size_t>(k - 1) * n + (l - 1)] = row_ones + below;
        }
    }
    return RankControlMatrix(n, std::move(r));
}

RankControlMatrix rank_control_oracle(const IntMatrix& m) {
    int n = m.n();
    std::vector<int> r(static_cast<std::size_t>(n) * n, 0);
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
            r[static_cast<std::size_t>(k - 1) * n + (l - 1)] = corner_rank_bareiss(m, k, l);
    return RankControlMatrix(n, std::move(r));
}

RankControlMatrix rank_control_oracle(const FieldMatrix& m) {
    int n = m.n();
    std::vector<int> r(static_cast<std::size_t>(n) * n, 0);
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
            r[static_cast<std::size_t>(k - 1) * n + (l - 1)] = corner_rank_mod_p(m, k, l);
    return RankControlMatrix(n, std::move(r));
}

int d_statistic(const RankControlMatrix& r) {
    int count = 0;
    for (int i = 2; i <= r.n(); ++i)
        for (int j = 1; j <= r.n() - 1; ++j)
            if (r.at(i, j) != r.at(i - 1, j + 1)) ++count;
    return count;
}

int e_statistic(const RankControlMatrix& r) {
    int count = 0;
    for (int i = 2; i <= r.n(); ++i)
        for (int j = i - 1; j <= r.n() - 1; ++j)
            if (r.at(i, j) == r.at(i - 1, j + 1)) ++count;
    return count;
}

bool leq_componentwise(const RankControlMatrix& a, const RankControlMatrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("leq_componentwise: size mismatch");
    for (int k = 1; k <= a.n(); ++k)
        for (int l = 1; l <= a.n(); ++l)
            if (a.at(k, l) > b.at(k, l)) return false;
    return true;
}

bool orbit_invariance_trial(const ZeroOneMatrix& m, int prime, std::uint64_t seed) {
    int n = m.n();
    std::mt19937_64 rng(seed);
    // deterministic across platforms: plain modulo draws
    auto draw_invertible_upper = [&] {
        FieldMatrix b(n, prime);
        for (int i = 1; i <= n; ++i) {
            b.set(i, i, 1 + static_cast<long long>(rng() % (prime - 1)));
            for (int j = i + 1; j <= n; ++j) b.set(i, j, static_cast<long long>(rng() % prime));
        }
        return b;
    };
    FieldMatrix b = draw_invertible_upper();
    FieldMatrix c = draw_invertible_upper();
    FieldMatrix x(m, prime);
    FieldMatrix y = b * x * c;
    return rank_control_oracle(y) == rank_control_oracle(x);
}

std::string matrix_to_json(const ZeroOneMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= m.n(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= m.n(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

std::string matrix_to_json(const RankControlMatrix& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (int k = 1; k <= r.n(); ++k) {
        nlohmann::json row = nlohmann::json::array();
        for (int l = 1; l <= r.n(); ++l) row.push_back(r.at(k, l));
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

}  // namespace arcstat
