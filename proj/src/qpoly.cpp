#include "permstat/qpoly.hpp"

#include <stdexcept>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

using Coeff = MultiPoly::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
    Coeff r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
    return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
    return r;
}

Coeff checked_neg(Coeff a) { return checked_mul(a, -1); }

}  // namespace

int& Exponents::operator[](Var v) {
    switch (v) {
        case Var::Y: return y;
        case Var::X: return x;
        case Var::Q: return q;
    }
    throw std::invalid_argument("unknown variable");
}

int Exponents::operator[](Var v) const { return const_cast<Exponents&>(*this)[v]; }

MultiPoly MultiPoly::constant(Coeff c) { return monomial({}, c); }

MultiPoly MultiPoly::monomial(Exponents e, Coeff c) {
    if (e.y < 0 || e.x < 0 || e.q < 0) throw ValidationError("negative exponent");
    MultiPoly p;
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::variable(Var v, int power) {
    Exponents e;
    e[v] = power;
    return monomial(e);
}

Coeff MultiPoly::coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(const Exponents& e, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

bool MultiPoly::involves(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first[v] != 0; });
}

int MultiPoly::max_degree(Var v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
}

int MultiPoly::min_degree(Var v) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first[v];
    for (const auto& [e, c] : terms_) d = std::min(d, e[v]);
    return d;
}

MultiPoly MultiPoly::substitute(Var v, Coeff value) const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        Coeff factor = 1;
        for (int i = 0; i < e[v]; ++i) factor = checked_mul(factor, value);
        Exponents reduced = e;
        reduced[v] = 0;
        out.add_term(reduced, checked_mul(c, factor));
    }
    return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result = constant(1);
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return result;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, checked_neg(c));
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term({ea.y + eb.y, ea.x + eb.x, ea.q + eb.q}, checked_mul(ca, cb));
        }
    }
    return out;
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out;
    for (const auto& [e, c] : a.terms_) out.add_term(e, checked_neg(c));
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string monomial;
        const auto factor = [&monomial](char name, int power) {
            if (power == 0) return;
            if (!monomial.empty()) monomial += '*';
            monomial += name;
            if (power > 1) monomial += '^' + std::to_string(power);
        };
        factor('y', e.y);
        factor('x', e.x);
        factor('q', e.q);

        // Negating INT64_MIN would overflow; print its digits directly.
        std::string magnitude = std::to_string(c);
        if (negative) magnitude.erase(0, 1);
        if (monomial.empty()) {
            out += magnitude;
        } else if (magnitude == "1") {
            out += monomial;
        } else {
            out += magnitude + '*' + monomial;
        }
    }
    return out;
}

MultiPoly q_int(int m) {
    if (m < 0) throw ValidationError("q-integer of a negative number");
    MultiPoly p;
    for (int i = 0; i < m; ++i) p.add_term({0, 0, i}, 1);
    return p;
}

MultiPoly q_factorial(int n) {
    if (n < 0) throw ValidationError("q-factorial of a negative number");
    MultiPoly p = MultiPoly::constant(1);
    for (int i = 2; i <= n; ++i) p *= q_int(i);
    return p;
}

MultiPoly q_binomial(int a, int j) {
    if (a < 0 || j < 0) throw ValidationError("q-binomial arguments must be nonnegative");
    if (j > a) return {};
    // row[i] holds [r choose i] for the current r.
    std::vector<MultiPoly> row{MultiPoly::constant(1)};
    for (int r = 1; r <= a; ++r) {
        std::vector<MultiPoly> next(static_cast<std::size_t>(r) + 1);
        next[0] = MultiPoly::constant(1);
        next[static_cast<std::size_t>(r)] = MultiPoly::constant(1);
        for (int i = 1; i < r; ++i) {
            next[static_cast<std::size_t>(i)] =
                row[static_cast<std::size_t>(i - 1)] +
                MultiPoly::variable(Var::Q, i) * row[static_cast<std::size_t>(i)];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(j)];
}

MultiPoly q_binomial_by_division(int a, int j) {
    if (a < 0 || j < 0) throw ValidationError("q-binomial arguments must be nonnegative");
    if (j > a) return {};
    MultiPoly numerator = MultiPoly::constant(1);
    for (int i = a - j + 1; i <= a; ++i) numerator *= q_int(i);
    return divide_exact_q(numerator, q_factorial(j));
}

MultiPoly rising_factorial(int n) {
    if (n < 0) throw ValidationError("rising factorial of a negative number");
    MultiPoly p = MultiPoly::constant(1);
    for (int i = 0; i < n; ++i) p *= MultiPoly::variable(Var::Y) + MultiPoly::constant(i);
    return p;
}

std::vector<Coeff> q_coefficients(const MultiPoly& p) {
    if (p.involves(Var::X) || p.involves(Var::Y)) {
        throw ValidationError("polynomial involves x or y: " + p.to_string());
    }
    std::vector<Coeff> coeffs(p.is_zero() ? 0 : static_cast<std::size_t>(p.max_degree(Var::Q)) + 1, 0);
    for (const auto& [e, c] : p.terms()) coeffs[static_cast<std::size_t>(e.q)] = c;
    return coeffs;
}

MultiPoly from_q_coefficients(const std::vector<Coeff>& coeffs) {
    MultiPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term({0, 0, static_cast<int>(i)}, coeffs[i]);
    return p;
}

MultiPoly divide_exact_q(const MultiPoly& numerator, const MultiPoly& denominator) {
    auto rest = q_coefficients(numerator);
    const auto divisor = q_coefficients(denominator);
    if (divisor.empty()) throw ValidationError("division by the zero polynomial");
    if (rest.size() < divisor.size()) {
        if (!numerator.is_zero()) {
            throw InternalInconsistency("inexact division: " + numerator.to_string() + " by " +
                                        denominator.to_string());
        }
        return {};
    }
    const Coeff lead = divisor.back();
    std::vector<Coeff> quotient(rest.size() - divisor.size() + 1, 0);
    for (std::size_t i = quotient.size(); i-- > 0;) {
        const Coeff top = rest[i + divisor.size() - 1];
        if (top % lead != 0) {
            throw InternalInconsistency("inexact division: " + numerator.to_string() + " by " +
                                        denominator.to_string());
        }
        const Coeff factor = top / lead;
        quotient[i] = factor;
        for (std::size_t k = 0; k < divisor.size(); ++k) {
            rest[i + k] = checked_add(rest[i + k], checked_neg(checked_mul(factor, divisor[k])));
        }
    }
    if (std::any_of(rest.begin(), rest.end(), [](Coeff c) { return c != 0; })) {
        throw InternalInconsistency("inexact division: " + numerator.to_string() + " by " +
                                    denominator.to_string());
    }
    return from_q_coefficients(quotient);
}

QShape shape_q(const MultiPoly& p) {
    if (p.is_zero()) throw ValidationError("shape of the zero polynomial is undefined");
    const auto a = q_coefficients(p);
    QShape s;
    s.min_degree = p.min_degree(Var::Q);
    s.max_degree = p.max_degree(Var::Q);
    s.virtual_degree = s.min_degree + s.max_degree;

    const auto at = [&a](int d) { return a[static_cast<std::size_t>(d)]; };
    s.symmetric = true;
    for (int j = 0; j <= s.max_degree - s.min_degree; ++j) {
        if (at(s.max_degree - j) != at(s.min_degree + j)) s.symmetric = false;
    }

    // Weakly rising, then weakly falling, across [M..N] including interior zeros.
    int d = s.min_degree;
    while (d < s.max_degree && at(d) <= at(d + 1)) ++d;
    while (d < s.max_degree && at(d) >= at(d + 1)) ++d;
    s.unimodal = d == s.max_degree;
    return s;
}

}  // namespace permstat
