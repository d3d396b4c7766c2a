#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fpoly/errors.hpp"

namespace fpoly {

using BigInt = mpz_class;
using Rational = mpq_class;

// One edge variable a_e, identified by a small id (contiguous from 0 within a graph).
using EdgeVar = int;

// Product of edge variables with positive exponents, stored sorted by variable id.
// The empty factor list is the monomial 1.
class Monomial {
public:
    Monomial() = default;
    static Monomial one() { return Monomial(); }
    static Monomial var(EdgeVar v, int exp = 1);

    // exponent-wise product
    Monomial times(const Monomial& other) const;

    int degree() const;
    int exponent(EdgeVar v) const;
    bool is_one() const { return factors_.empty(); }
    bool squarefree() const;
    int max_var() const { return factors_.empty() ? -1 : factors_.back().first; }

    const std::vector<std::pair<EdgeVar, int>>& factors() const { return factors_; }

    std::string str(const std::vector<std::string>* names = nullptr) const;

    bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

private:
    std::vector<std::pair<EdgeVar, int>> factors_;
};

// Canonical term order: total degree ascending, then within equal degree the
// variable with the smaller id and larger exponent leads (so products print as
// a^2*b*c + a*b^2*c + a*b*c^2).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over edge variables with exact integer
// coefficients. Zero coefficients are never stored; the empty term map is 0.
// Values are immutable in spirit: all operations return fresh polynomials.
class Poly {
public:
    using TermMap = std::map<Monomial, BigInt, MonomialOrder>;

    Poly() = default;
    static Poly zero() { return Poly(); }
    static Poly constant(const BigInt& c);
    static Poly var(EdgeVar v);
    static Poly monomial(const Monomial& m, const BigInt& coeff);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    int max_var() const;
    int max_exponent() const;
    bool multilinear() const;

    Poly operator-() const;
    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);

    // this += scale * a * b, without building intermediates
    void add_scaled_product(const Poly& a, const Poly& b, const BigInt& scale);
    void add_term(const Monomial& m, const BigInt& coeff);

    bool operator==(const Poly& other) const { return terms_ == other.terms_; }
    bool operator!=(const Poly& other) const { return !(*this == other); }

    // Exact evaluation; assignment indexed by variable id (entries < 0 are
    // "unassigned"). Throws MissingVariable if the polynomial mentions an
    // unassigned variable.
    BigInt eval(const std::vector<BigInt>& assignment) const;
    BigInt eval(const std::map<EdgeVar, BigInt>& assignment) const;

    // Canonical text form, terms in map order: "2*a0^2*a1 + a2 - 3".
    std::string str(const std::vector<std::string>* names = nullptr) const;

private:
    TermMap terms_;
};

}  // namespace fpoly
