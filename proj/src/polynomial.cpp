#include "cosmo/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cosmo {

Poly::Poly(Int constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Int coeff, int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    if (coeff == 0) return {};
    std::vector<Int> c(static_cast<std::size_t>(degree) + 1);
    c.back() = std::move(coeff);
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < coeffs_.size()) c[i] += coeffs_[i];
        if (i < o.coeffs_.size()) c[i] += o.coeffs_[i];
    }
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < coeffs_.size()) c[i] += coeffs_[i];
        if (i < o.coeffs_.size()) c[i] -= o.coeffs_[i];
    }
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::scaled(const Int& k) const {
    std::vector<Int> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * k;
    return Poly(std::move(c));
}

Poly Poly::pow(unsigned long k) const {
    Poly result(1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

Int Poly::eval(const Int& t) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Int Poly::eval_one() const {
    Int acc = 0;
    for (const Int& c : coeffs_) acc += c;
    return acc;
}

namespace {

std::string term_string(const Int& coeff, const std::string& vars) {
    const Int abs_c = abs(coeff);
    if (vars.empty()) return abs_c.get_str();
    if (abs_c == 1) return vars;
    return abs_c.get_str() + vars;
}

std::string join_terms(const std::vector<std::pair<Int, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [c, vars] = terms[i];
        if (i == 0)
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        out += term_string(c, vars);
    }
    return out;
}

std::string power_string(const std::string& var, int deg) {
    if (deg == 0) return "";
    if (deg == 1) return var;
    return var + "^" + std::to_string(deg);
}

}  // namespace

std::string Poly::to_latex(const std::string& var) const {
    std::vector<std::pair<Int, std::string>> terms;
    for (int i = 0; i <= degree(); ++i) {
        const Int c = coeff(i);
        if (c == 0) continue;
        terms.emplace_back(c, power_string(var, i));
    }
    return join_terms(terms);
}

UlcResult check_ultra_log_concave(const Poly& p, int m) {
    for (int i = 1; i <= m - 1; ++i) {
        const Int lhs = Int(i) * Int(m - i) * p.coeff(i) * p.coeff(i);
        const Int rhs = Int(i + 1) * Int(m - i + 1) * p.coeff(i - 1) * p.coeff(i + 1);
        if (lhs < rhs) return {false, i};
    }
    return {true, -1};
}

bool check_coefficient_bound(const Poly& p, int m) {
    if (p.degree() > m) return false;
    Int power_of_three = 1;
    for (int i = 0; i <= m; ++i) {
        const Int c = p.coeff(i);
        if (c < 0 || c > power_of_three * binomial(static_cast<unsigned long>(m),
                                                   static_cast<unsigned long>(i)))
            return false;
        power_of_three *= 3;
    }
    return true;
}

BivarPoly BivarPoly::constant(Int c) { return monomial(std::move(c), 0, 0); }

BivarPoly BivarPoly::monomial(Int coeff, int xdeg, int ydeg) {
    BivarPoly p;
    if (coeff != 0) p.coeffs_[{xdeg, ydeg}] = std::move(coeff);
    return p;
}

Int BivarPoly::coeff(int xdeg, int ydeg) const {
    const auto it = coeffs_.find({xdeg, ydeg});
    return it == coeffs_.end() ? Int(0) : it->second;
}

void BivarPoly::add_term(int xdeg, int ydeg, const Int& c) {
    if (c == 0) return;
    const Key key{xdeg, ydeg};
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    BivarPoly out = *this;
    for (const auto& [key, c] : o.coeffs_) out.add_term(key.first, key.second, c);
    return out;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    BivarPoly out;
    for (const auto& [ka, ca] : coeffs_)
        for (const auto& [kb, cb] : o.coeffs_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

Int BivarPoly::eval(const Int& x, const Int& y) const {
    Int acc = 0;
    for (const auto& [key, c] : coeffs_)
        acc += c * int_pow(x, static_cast<unsigned long>(key.first)) *
               int_pow(y, static_cast<unsigned long>(key.second));
    return acc;
}

Poly BivarPoly::at_y_one() const {
    std::vector<Int> c;
    for (const auto& [key, coeff] : coeffs_) {
        if (key.first >= static_cast<int>(c.size())) c.resize(static_cast<std::size_t>(key.first) + 1);
        c[static_cast<std::size_t>(key.first)] += coeff;
    }
    return Poly(std::move(c));
}

std::string BivarPoly::to_latex() const {
    std::vector<std::pair<Int, std::string>> terms;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [key, c] = *it;
        terms.emplace_back(c, power_string("x", key.first) + power_string("y", key.second));
    }
    return join_terms(terms);
}

}  // namespace cosmo
