#include "clusterforge/poly.hpp"

#include <sstream>

#include "clusterforge/errors.hpp"

namespace clusterforge {

namespace {
const mpq_class kZero = 0;
}

Poly::Poly(const mpq_class& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int power, const mpq_class& c) {
    if (c == 0) return Poly();
    std::vector<mpq_class> v(power + 1, 0);
    v[power] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[k];
}

int Poly::x_valuation() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<int>(k);
    return -1;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<mpq_class> v(std::max(c_.size(), o.c_.size()), 0);
    for (size_t k = 0; k < c_.size(); ++k) v[k] = c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) v[k] += o.c_[k];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<mpq_class> v(c_.size() + o.c_.size() - 1, 0);
    for (size_t a = 0; a < c_.size(); ++a) {
        if (c_[a] == 0) continue;
        for (size_t b = 0; b < o.c_.size(); ++b) v[a + b] += c_[a] * o.c_[b];
    }
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw input_error("DivisionByZero", "polynomial division by zero");
    Poly rem = num;
    if (num.degree() < den.degree()) return {Poly(), rem};
    std::vector<mpq_class> q(num.degree() - den.degree() + 1, 0);
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int shift = rem.degree() - den.degree();
        mpq_class f = rem.lc() / den.lc();
        q[shift] = f;
        rem -= den * monomial(shift, f);
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::exact_div(const Poly& num, const Poly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw internal_error("NonExactDivision", "polynomial division left a remainder");
    return q;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const mpq_class& c = c_[k];
        if (c == 0) continue;
        mpq_class mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k > 0) {
            if (mag != 1) os << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace clusterforge
