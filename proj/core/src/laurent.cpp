#include "clusterforge/laurent.hpp"

#include <algorithm>

#include "clusterforge/errors.hpp"

namespace clusterforge {

namespace {

void require_same(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars() != b.nvars())
        throw internal_error("SizeMismatch", "Laurent polynomials over different variable sets");
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, const mpz_class& c) {
    LaurentPoly out(nvars);
    out.add_term(Exps(nvars, 0), c);
    return out;
}

LaurentPoly LaurentPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw internal_error("IndexOutOfRange", "variable index");
    LaurentPoly out(nvars);
    Exps e(nvars, 0);
    e[index] = 1;
    out.add_term(e, 1);
    return out;
}

void LaurentPoly::add_term(const Exps& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    require_same(*this, o);
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    require_same(*this, o);
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    require_same(*this, o);
    LaurentPoly out(nvars_);
    Exps e(nvars_, 0);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    require_same(*this, divisor);
    if (divisor.is_zero()) throw input_error("DivisionByZero", "Laurent division by zero");
    if (is_zero()) return LaurentPoly(nvars_);

    // Shift both operands to plain polynomials; the quotient of the shifted
    // parts is again exponent-non-negative, so long division in lex order
    // works term by term.
    Exps mf = min_exponents(), md = divisor.min_exponents();
    LaurentPoly r(nvars_), d(nvars_);
    Exps e(nvars_, 0);
    for (const auto& [ef, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) e[i] = ef[i] - mf[i];
        r.terms_[e] = c;
    }
    for (const auto& [ed, c] : divisor.terms_) {
        for (int i = 0; i < nvars_; ++i) e[i] = ed[i] - md[i];
        d.terms_[e] = c;
    }

    const auto& [lead_d, lead_dc] = *d.terms_.rbegin();
    LaurentPoly q(nvars_);
    while (!r.terms_.empty()) {
        const auto& [lead_r, lead_rc] = *r.terms_.rbegin();
        for (int i = 0; i < nvars_; ++i) {
            e[i] = lead_r[i] - lead_d[i];
            if (e[i] < 0) throw internal_error("NonExactDivision", "leading monomial not divisible");
        }
        if (!mpz_divisible_p(lead_rc.get_mpz_t(), lead_dc.get_mpz_t()))
            throw internal_error("NonExactDivision", "leading coefficient not divisible");
        LaurentPoly t(nvars_);
        t.add_term(e, lead_rc / lead_dc);
        q = q + t;
        r = r - t * d;
    }

    LaurentPoly out(nvars_);
    for (const auto& [eq, c] : q.terms_) {
        Exps shifted = eq;
        for (int i = 0; i < nvars_; ++i) shifted[i] += mf[i] - md[i];
        out.terms_[shifted] = c;
    }
    return out;
}

LaurentPoly LaurentPoly::eval_poly(const std::vector<LaurentPoly>& values) const {
    if (static_cast<int>(values.size()) != nvars_)
        throw internal_error("SizeMismatch", "one value per variable required");
    int target = values.empty() ? 0 : values[0].nvars();
    LaurentPoly out(target);
    for (const auto& [e, c] : terms_) {
        LaurentPoly term = LaurentPoly::constant(target, c);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] < 0) throw internal_error("NegativeExponent", "substitution needs a Laurent inverse");
            for (int rep = 0; rep < e[i]; ++rep) term = term * values[i];
        }
        out = out + term;
    }
    return out;
}

mpz_class LaurentPoly::eval_at_one() const {
    mpz_class total(0);
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

bool LaurentPoly::all_coefficients_positive() const {
    for (const auto& [e, c] : terms_)
        if (c <= 0) return false;
    return true;
}

LaurentPoly::Exps LaurentPoly::min_exponents() const {
    Exps out(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            out = e;
            first = false;
            continue;
        }
        for (int i = 0; i < nvars_; ++i) out[i] = std::min(out[i], e[i]);
    }
    return out;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class mag = abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        std::string factors;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += names.at(i);
            if (e[i] != 1) factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty())
            out += mag.get_str();
        else {
            if (mag != 1) out += mag.get_str() + "*";
            out += factors;
        }
    }
    return out;
}

}  // namespace clusterforge
