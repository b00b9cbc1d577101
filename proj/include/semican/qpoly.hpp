#pragma once

#include "semican/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace semican {

/// Polynomial in q with integer coefficients; index k holds the coefficient of q^k.
class QPoly {
public:
    QPoly() = default;
    QPoly(long c);
    QPoly(std::initializer_list<long> coeffs);
    explicit QPoly(std::vector<Integer> coeffs);

    static QPoly monomial(int degree, const Integer& coeff = 1);

    const std::vector<Integer>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Integer coefficient(int k) const;

    Integer eval(const Integer& q) const;
    /// Value at q = 1, the coefficient sum.
    Integer at_one() const;
    bool has_nonnegative_coefficients() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

/// [n]_q = 1 + q + ... + q^(n-1); zero for n <= 0.
QPoly gauss_integer(int n);

/// q-binomial coefficient; zero when k < 0 or k > m.
QPoly gauss_binom(int m, int k);

/// [n]_q! = [1]_q [2]_q ... [n]_q, the number of complete flags in F_q^n.
QPoly gauss_factorial(int n);

}  // namespace semican
