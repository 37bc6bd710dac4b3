// Exact integer-coefficient polynomials (dense univariate, sparse bivariate)
// and the coefficient-sequence checks applied to every h*-polynomial.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cosmo/numeric.hpp"

namespace cosmo {

class Poly {
  public:
    Poly() = default;
    Poly(long constant) : Poly(Int(constant)) {}  // NOLINT: implicit by design
    Poly(Int constant);                           // NOLINT
    explicit Poly(std::vector<Int> coeffs);

    static Poly monomial(Int coeff, int degree);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // Coefficient of z^i; zero outside the stored range.
    Int coeff(int i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;  // schoolbook
    Poly scaled(const Int& c) const;
    Poly pow(unsigned long k) const;

    Int eval(const Int& t) const;
    Int eval_one() const;

    bool operator==(const Poly&) const = default;

    // "1 + 6z + 5z^2" style, ascending degree.
    std::string to_latex(const std::string& var = "z") const;

  private:
    void trim();
    std::vector<Int> coeffs_;  // index = degree, trailing entry nonzero
};

struct UlcResult {
    bool ok = true;
    int violating_index = -1;  // first i with i(m-i)h_i^2 < (i+1)(m-i+1)h_{i-1}h_{i+1}
};

// Ultra log-concavity of the coefficients h_0..h_m (implicit zeros above the
// degree): i(m-i)h_i^2 >= (i+1)(m-i+1)h_{i-1}h_{i+1} for 1 <= i <= m-1.
UlcResult check_ultra_log_concave(const Poly& p, int m);

// 0 <= h_i <= 3^i * C(m, i) for all 0 <= i <= m.
bool check_coefficient_bound(const Poly& p, int m);

class BivarPoly {
  public:
    using Key = std::pair<int, int>;  // (x-degree, y-degree)

    BivarPoly() = default;
    static BivarPoly constant(Int c);
    static BivarPoly monomial(Int coeff, int xdeg, int ydeg);

    bool is_zero() const { return coeffs_.empty(); }
    Int coeff(int xdeg, int ydeg) const;
    const std::map<Key, Int>& coeffs() const { return coeffs_; }

    void add_term(int xdeg, int ydeg, const Int& c);
    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator*(const BivarPoly& o) const;

    Int eval(const Int& x, const Int& y) const;
    // Collapse y by substituting y = 1; result is univariate in x.
    Poly at_y_one() const;

    bool operator==(const BivarPoly&) const = default;

    // "x^2 + x + y" style, x-major descending.
    std::string to_latex() const;

  private:
    std::map<Key, Int> coeffs_;  // no zero entries stored
};

}  // namespace cosmo
