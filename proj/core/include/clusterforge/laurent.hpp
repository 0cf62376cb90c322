#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace clusterforge {

// Exact multivariate Laurent polynomial with integer coefficients; exponent
// vectors all share one fixed length.  Terms are kept canonical (no zero
// coefficients), ordered lexicographically by exponent vector.
class LaurentPoly {
public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, mpz_class>;

    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, const mpz_class& c);
    static LaurentPoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const = default;

    // Exact division; the quotient must again have integer coefficients.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    // Substitute a value polynomial per variable; requires every exponent
    // here to be non-negative.
    LaurentPoly eval_poly(const std::vector<LaurentPoly>& values) const;

    mpz_class eval_at_one() const;
    bool all_coefficients_positive() const;
    Exps min_exponents() const;  // componentwise over terms; zero vector if empty
    int term_count() const { return static_cast<int>(terms_.size()); }

    void add_term(const Exps& e, const mpz_class& c);
    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_ = 0;
    TermMap terms_;
};

}  // namespace clusterforge
