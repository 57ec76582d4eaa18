#include "arcstat/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace arcstat {

namespace {

const BigInt kZero = 0;

// One monomial like "2*q^3", sign stripped; the caller renders the sign.
std::string monomial_text(const BigInt& coeff, int exp, std::string_view var) {
    BigInt mag = abs(coeff);
    std::ostringstream os;
    if (exp == 0) {
        os << mag;
    } else {
        if (mag != 1) os << mag << "*";
        os << var;
        if (exp > 1) os << "^" << exp;
    }
    return os.str();
}

std::string polynomial_text(const std::vector<BigInt>& coeffs, std::string_view var) {
    if (coeffs.empty()) return "0";
    std::string out;
    for (int e = 0; e < static_cast<int>(coeffs.size()); ++e) {
        const BigInt& c = coeffs[e];
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += monomial_text(c, e, var);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

IntPolynomial::IntPolynomial(long long constant) : IntPolynomial(BigInt(constant)) {}

IntPolynomial::IntPolynomial(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPolynomial IntPolynomial::from_coeffs(std::vector<BigInt> coeffs) {
    IntPolynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

IntPolynomial IntPolynomial::monomial(BigInt coeff, int exponent) {
    if (exponent < 0) throw std::invalid_argument("monomial: negative exponent");
    IntPolynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(exponent + 1, 0);
        p.coeffs_[exponent] = std::move(coeff);
    }
    return p;
}

const BigInt& IntPolynomial::coeff(int e) const {
    if (e < 0 || e >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[e];
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t e = 0; e < rhs.coeffs_.size(); ++e) coeffs_[e] += rhs.coeffs_[e];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t e = 0; e < rhs.coeffs_.size(); ++e) coeffs_[e] -= rhs.coeffs_[e];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a] == 0) continue;
        for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b) {
            if (rhs.coeffs_[b] == 0) continue;
            out[a + b] += coeffs_[a] * rhs.coeffs_[b];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

IntPolynomial IntPolynomial::shifted(int d) const {
    if (d < 0) throw std::invalid_argument("shifted: negative shift");
    if (is_zero()) return {};
    IntPolynomial p;
    p.coeffs_.assign(coeffs_.size() + d, 0);
    for (std::size_t e = 0; e < coeffs_.size(); ++e) p.coeffs_[e + d] = coeffs_[e];
    return p;
}

IntPolynomial IntPolynomial::times_q_integer(int k) const {
    if (k < 0) throw std::invalid_argument("times_q_integer: negative k");
    if (k == 0 || is_zero()) return {};
    // result[e] = sum of coeffs_[e-k+1 .. e], maintained as a running window
    IntPolynomial p;
    p.coeffs_.assign(coeffs_.size() + k - 1, 0);
    BigInt window = 0;
    for (int e = 0; e < static_cast<int>(p.coeffs_.size()); ++e) {
        if (e < static_cast<int>(coeffs_.size())) window += coeffs_[e];
        if (e - k >= 0) window -= coeffs_[e - k];
        p.coeffs_[e] = window;
    }
    p.trim();
    return p;
}

IntPolynomial IntPolynomial::reversed(int length) const {
    if (length < degree() + 1) throw std::invalid_argument("reversed: length below degree+1");
    IntPolynomial p;
    p.coeffs_.assign(length, 0);
    for (std::size_t e = 0; e < coeffs_.size(); ++e) p.coeffs_[length - 1 - e] = coeffs_[e];
    p.trim();
    return p;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPolynomial::to_string(std::string_view var) const {
    return polynomial_text(coeffs_, var);
}

std::string IntPolynomial::to_json(std::string_view var) const {
    nlohmann::json j;
    j["var"] = std::string(var);
    auto& arr = j["coeffs"] = nlohmann::json::array();
    for (const BigInt& c : coeffs_) arr.push_back(c.str());
    return j.dump();
}

void BivariatePolynomial::add_t_term(const IntPolynomial& p, int texp) {
    if (texp < 0) throw std::invalid_argument("add_t_term: negative exponent");
    if (static_cast<int>(t_coeffs_.size()) <= texp) t_coeffs_.resize(texp + 1);
    t_coeffs_[texp] += p;
    trim();
}

void BivariatePolynomial::trim() {
    while (!t_coeffs_.empty() && t_coeffs_.back().is_zero()) t_coeffs_.pop_back();
}

int BivariatePolynomial::degree_q() const {
    int d = -1;
    for (const auto& p : t_coeffs_) d = std::max(d, p.degree());
    return d;
}

const IntPolynomial& BivariatePolynomial::t_coeff(int k) const {
    static const IntPolynomial zero;
    if (k < 0 || k >= static_cast<int>(t_coeffs_.size())) return zero;
    return t_coeffs_[k];
}

IntPolynomial BivariatePolynomial::at_t_one() const {
    IntPolynomial sum;
    for (const auto& p : t_coeffs_) sum += p;
    return sum;
}

std::string BivariatePolynomial::to_string(std::string_view qvar, std::string_view tvar) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k < static_cast<int>(t_coeffs_.size()); ++k) {
        const IntPolynomial& c = t_coeffs_[k];
        if (c.is_zero()) continue;

        int nonzero_terms = 0;
        for (const BigInt& b : c.coeffs())
            if (b != 0) ++nonzero_terms;

        std::string term;
        bool negative = false;
        if (k == 0) {
            term = c.to_string(qvar);
        } else {
            std::string tpart(tvar);
            if (k > 1) tpart += "^" + std::to_string(k);
            if (nonzero_terms > 1) {
                term = "(" + c.to_string(qvar) + ")*" + tpart;
            } else {
                // single monomial a*q^e
                int e = c.degree();
                const BigInt& a = c.coeff(e);
                negative = a < 0;
                BigInt mag = abs(a);
                if (mag == 1 && e == 0) {
                    term = tpart;
                } else {
                    term = monomial_text(mag, e, qvar) + "*" + tpart;
                }
            }
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += term;
    }
    return out.empty() ? "0" : out;
}

std::string BivariatePolynomial::to_json(std::string_view qvar, std::string_view tvar) const {
    nlohmann::json j;
    j["vars"] = {std::string(qvar), std::string(tvar)};
    auto& grid = j["coeffs"] = nlohmann::json::array();
    int dq = degree_q();
    int dt = degree_t();
    for (int qe = 0; qe <= dq; ++qe) {
        auto row = nlohmann::json::array();
        for (int te = 0; te <= dt; ++te) row.push_back(t_coeff(te).coeff(qe).str());
        grid.push_back(std::move(row));
    }
    return j.dump();
}

}  // namespace arcstat
