#pragma once

#include "arcstat/polynomial.hpp"

namespace arcstat {

/// [k]_q = 1 + q + ... + q^(k-1); [0]_q = 0.
IntPolynomial q_integer(int k);

/// Triangle of q-Stirling numbers built eagerly from the recurrence
///   S_q(n,k) = q^(k-1) S_q(n-1,k-1) + [k]_q S_q(n-1,k),
/// with S_q(n,k) = delta(n,k) when n = 0 or k = 0. Immutable once
/// constructed, so concurrent reads are safe.
class QStirlingTable {
public:
    explicit QStirlingTable(int max_n);

    int max_n() const { return max_n_; }

    /// Zero polynomial outside 0 <= k <= n.
    const IntPolynomial& at(int n, int k) const;

private:
    int max_n_;
    std::vector<std::vector<IntPolynomial>> rows_;
};

IntPolynomial q_stirling(int n, int k);

/// Generating polynomial of the intertwining number over the partitions
/// of {1..n} with k blocks; equals q_stirling(n, k).
IntPolynomial q_stirling_enum(int n, int k);

enum class PartitionStatistic { depth_index, intertwining, dual_major };

/// X_n(q), Y_n(q) or B_n(q): the generating polynomial of the chosen
/// statistic over all partitions of {1..n}, by streaming enumeration.
IntPolynomial generating_polynomial(int n, PartitionStatistic stat);

/// X_n(-1), computed through the q = -1 specialization of the q-Stirling
/// recurrence and the sign (-1)^C(n,2). Always -1, 0 or 1, following a
/// period-12 pattern in n.
int bell_at_minus_one(int n);

/// Value of the period-12 pattern: 1 for n = 0,1,3,10, -1 for n = 4,6,7,9
/// (mod 12), 0 for n = 2 (mod 3).
int bell_at_minus_one_expected(int n);

/// H_n(q,t) = sum_k S_q(n,k) t^k.
BivariatePolynomial h_polynomial(int n);

/// Exact form of H_n(q, 1/(1-q)) = 1/(1-q)^n with cleared denominators:
/// checks sum_k S_q(n,k) (1-q)^(n-k) == 1.
bool check_h_identity(int n);

/// Point-count identity: q^C(n,2) == sum over partitions A of {1..n} of
/// q^(t(A)-a) (q-1)^a with a the number of arcs of A.
bool check_borel_point_count(int n);

}  // namespace arcstat
