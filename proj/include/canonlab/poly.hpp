#pragma once

#include <vector>

#include "canonlab/rational.hpp"

namespace canonlab {

// Dense univariate polynomial over the rationals, coefficients ascending.
// Kept trimmed: the leading coefficient is nonzero, degree() is -1 for 0.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Rational a);
    // (t - root)
    static Poly linear_root(const Rational& root);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& a) const;

    // Euclidean division; remainder returned, quotient discarded unless asked.
    Poly remainder(const Poly& divisor) const;
    Poly quotient(const Poly& divisor) const;
    bool divisible_by(const Poly& divisor) const;

    // Monic associate (zero stays zero).
    Poly monic() const;

    // Multiplicity of `root` as a zero of the polynomial.
    int root_order(const Rational& root) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    std::string to_string() const;

  private:
    void trim();
    std::vector<Rational> c_;
};

// Monic gcd via the Euclidean algorithm.
Poly poly_gcd(Poly a, Poly b);

}  // namespace canonlab
