#include "arcstat/qstirling.hpp"

#include <stdexcept>

#include "arcstat/enumerate.hpp"
#include "arcstat/statistics.hpp"

namespace arcstat {

IntPolynomial q_integer(int k) {
    if (k < 0) throw std::invalid_argument("q_integer: k must be nonnegative");
    return IntPolynomial(1).times_q_integer(k);
}

QStirlingTable::QStirlingTable(int max_n) : max_n_(max_n) {
    if (max_n < 0) throw std::invalid_argument("QStirlingTable: max_n must be nonnegative");
    rows_.resize(max_n + 1);
    rows_[0] = {IntPolynomial(1)};  // S_q(0,0) = 1
    for (int n = 1; n <= max_n; ++n) {
        rows_[n].resize(n + 1);
        for (int k = 1; k <= n; ++k) {
            IntPolynomial term = at(n - 1, k - 1).shifted(k - 1);
            term += at(n - 1, k).times_q_integer(k);
            rows_[n][k] = std::move(term);
        }
    }
}

const IntPolynomial& QStirlingTable::at(int n, int k) const {
    static const IntPolynomial zero;
    if (n < 0 || n > max_n_) throw std::out_of_range("QStirlingTable: n out of range");
    if (k < 0 || k > n || k >= static_cast<int>(rows_[n].size())) return zero;
    return rows_[n][k];
}

IntPolynomial q_stirling(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("q_stirling: negative arguments");
    if (k > n) return {};
    return QStirlingTable(n).at(n, k);
}

IntPolynomial q_stirling_enum(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("q_stirling_enum: bad arguments");
    if (n == 0) return IntPolynomial(k == 0 ? 1 : 0);
    if (k == 0) return {};
    std::vector<BigInt> coeffs;
    for_each_partition(n, k, [&](const SetPartition& p) {
        int e = intertwining(to_arc_diagram(p));
        if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(e + 1, 0);
        coeffs[e] += 1;
    });
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

IntPolynomial generating_polynomial(int n, PartitionStatistic stat) {
    if (n < 1) throw std::invalid_argument("generating_polynomial: n must be positive");
    std::vector<BigInt> coeffs;
    for_each_partition(n, [&](const SetPartition& p) {
        int e = 0;
        switch (stat) {
            case PartitionStatistic::depth_index: e = depth_index(to_arc_diagram(p)); break;
            case PartitionStatistic::intertwining: e = intertwining(to_arc_diagram(p)); break;
            case PartitionStatistic::dual_major: e = dual_major_index(p); break;
        }
        if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(e + 1, 0);
        coeffs[e] += 1;
    });
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

int bell_at_minus_one(int n) {
    if (n < 0) throw std::invalid_argument("bell_at_minus_one: n must be nonnegative");
    // q = -1 specialization of the recurrence: q^(k-1) becomes (-1)^(k-1)
    // and [k]_q becomes 1 for odd k, 0 for even k
    std::vector<BigInt> prev{1}, cur;  // row n = 0
    for (int row = 1; row <= n; ++row) {
        cur.assign(row + 1, 0);
        for (int k = 1; k <= row; ++k) {
            BigInt value = (k % 2 == 0) ? -prev[k - 1] : prev[k - 1];
            if (k % 2 == 1 && k < static_cast<int>(prev.size())) value += prev[k];
            cur[k] = value;
        }
        prev = cur;
    }
    BigInt sum = 0;
    for (const BigInt& v : prev) sum += v;
    if ((n * (n - 1) / 2) % 2 != 0) sum = -sum;
    if (sum < -1 || sum > 1) throw std::logic_error("bell_at_minus_one: value escaped {-1,0,1}");
    return static_cast<int>(sum);
}

int bell_at_minus_one_expected(int n) {
    if (n < 0) throw std::invalid_argument("bell_at_minus_one_expected: n must be nonnegative");
    switch (n % 12) {
        case 0: case 1: case 3: case 10: return 1;
        case 4: case 6: case 7: case 9: return -1;
        default: return 0;  // n = 2 (mod 3)
    }
}

BivariatePolynomial h_polynomial(int n) {
    if (n < 0) throw std::invalid_argument("h_polynomial: n must be nonnegative");
    QStirlingTable table(n);
    BivariatePolynomial h;
    for (int k = 0; k <= n; ++k) h.add_t_term(table.at(n, k), k);
    return h;
}

bool check_h_identity(int n) {
    if (n < 0) throw std::invalid_argument("check_h_identity: n must be nonnegative");
    QStirlingTable table(n);
    IntPolynomial one_minus_q = IntPolynomial::from_coeffs({1, -1});
    // powers of (1-q) from (1-q)^0 up
    std::vector<IntPolynomial> pow(n + 1);
    pow[0] = IntPolynomial(1);
    for (int m = 1; m <= n; ++m) pow[m] = pow[m - 1] * one_minus_q;
    IntPolynomial sum;
    for (int k = 0; k <= n; ++k) sum += table.at(n, k) * pow[n - k];
    return sum == IntPolynomial(1);
}

bool check_borel_point_count(int n) {
    if (n < 1) throw std::invalid_argument("check_borel_point_count: n must be positive");
    IntPolynomial q_minus_one = IntPolynomial::from_coeffs({-1, 1});
    std::vector<IntPolynomial> pow(n, IntPolynomial(1));  // (q-1)^a for a <= n-1
    for (int a = 1; a < n; ++a) pow[a] = pow[a - 1] * q_minus_one;
    IntPolynomial sum;
    for_each_partition(n, [&](const SetPartition& p) {
        ArcDiagram d = to_arc_diagram(p);
        int a = d.arc_count();
        int t = depth_index(d);
        sum += pow[a].shifted(t - a);
    });
    return sum == IntPolynomial::monomial(1, n * (n - 1) / 2);
}

}  // namespace arcstat
