#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace permstat {

enum class Var { Y, X, Q };

/// Exponent triple of a monomial y^y x^x q^q.
struct Exponents {
    int y = 0;
    int x = 0;
    int q = 0;

    int& operator[](Var v);
    int operator[](Var v) const;

    friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

/// Exact sparse polynomial in y, x, q with int64 coefficients.
///
/// No zero coefficient is ever stored, so equal polynomials have equal term maps.
/// Every arithmetic step is overflow-checked and throws std::overflow_error.
/// Terms iterate in descending lexicographic order of (y, x, q).
class MultiPoly {
public:
    using Coeff = std::int64_t;
    using Terms = std::map<Exponents, Coeff, std::greater<>>;

    MultiPoly() = default;

    static MultiPoly constant(Coeff c);
    static MultiPoly monomial(Exponents e, Coeff c = 1);
    static MultiPoly variable(Var v, int power = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Coeff coefficient(const Exponents& e) const;

    /// Adds c * monomial(e) in place.
    void add_term(const Exponents& e, Coeff c);

    bool involves(Var v) const;
    /// Largest / smallest exponent of v over all terms; 0 for the zero polynomial.
    int max_degree(Var v) const;
    int min_degree(Var v) const;

    /// Evaluates v at `value`, eliminating it.
    MultiPoly substitute(Var v, Coeff value) const;

    MultiPoly pow(unsigned k) const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a);

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    /// "y^3 + y^2*x*q^2 + 2*y^2*x*q - q + 5"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    Terms terms_;
};

/// [m] = 1 + q + ... + q^(m-1); zero for m = 0.
MultiPoly q_int(int m);
/// [1][2]...[n].
MultiPoly q_factorial(int n);
/// Gaussian binomial via the Pascal recurrence; zero when j > a.
MultiPoly q_binomial(int a, int j);
/// Gaussian binomial as [a][a-1]...[a-j+1] / [j]!, by exact division.
MultiPoly q_binomial_by_division(int a, int j);
/// y(y+1)...(y+n-1).
MultiPoly rising_factorial(int n);

/// Coefficients a_0..a_N of a polynomial in q alone. Throws ValidationError if x or y appear.
std::vector<MultiPoly::Coeff> q_coefficients(const MultiPoly& p);
MultiPoly from_q_coefficients(const std::vector<MultiPoly::Coeff>& coeffs);

/// Exact quotient of two polynomials in q; throws InternalInconsistency on a nonzero remainder.
MultiPoly divide_exact_q(const MultiPoly& numerator, const MultiPoly& denominator);

struct QShape {
    int min_degree = 0;  // M
    int max_degree = 0;  // N
    int virtual_degree = 0;
    bool symmetric = false;
    bool unimodal = false;
};

/// Throws ValidationError for the zero polynomial or one involving x or y.
QShape shape_q(const MultiPoly& p);

}  // namespace permstat
