#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace clusterforge {

// Univariate polynomial over the rationals.  Dense storage, constant term
// first, no trailing zeros.
class Poly {
  public:
    Poly() = default;
    Poly(int c) : Poly(mpq_class(c)) {}
    Poly(const mpq_class& c);
    explicit Poly(std::vector<mpq_class> coeffs);

    static Poly monomial(int power, const mpq_class& c = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    const mpq_class& coeff(int k) const;
    const mpq_class& lc() const { return c_.back(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    // Lowest nonzero power, i.e. the valuation at x; -1 for the zero poly.
    int x_valuation() const;

    bool is_constant() const { return c_.size() <= 1; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
    // Division that must leave no remainder.
    static Poly exact_div(const Poly& num, const Poly& den);

    std::string str() const;

  private:
    std::vector<mpq_class> c_;
    void trim();
};

}  // namespace clusterforge
