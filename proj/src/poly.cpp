#include "fpoly/poly.hpp"

#include <algorithm>
#include <sstream>

namespace fpoly {

Monomial Monomial::var(EdgeVar v, int exp) {
    Monomial m;
    if (exp > 0) m.factors_.push_back({v, exp});
    return m;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first) {
            out.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, other.factors_.end());
    return out;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent(EdgeVar v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

bool Monomial::squarefree() const {
    for (const auto& [v, e] : factors_)
        if (e > 1) return false;
    return true;
}

std::string Monomial::str(const std::vector<std::string>* names) const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : factors_) {
        if (!first) os << "*";
        first = false;
        if (names && v >= 0 && static_cast<std::size_t>(v) < names->size()) {
            os << (*names)[v];
        } else {
            os << "a" << v;
        }
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    auto ia = a.factors().begin(), ea = a.factors().end();
    auto ib = b.factors().begin(), eb = b.factors().end();
    while (ia != ea && ib != eb) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    // equal degree and one is a prefix of the other: impossible unless equal
    return false;
}

Poly Poly::constant(const BigInt& c) {
    Poly p;
    if (c != 0) p.terms_[Monomial::one()] = c;
    return p;
}

Poly Poly::var(EdgeVar v) {
    Poly p;
    p.terms_[Monomial::var(v)] = 1;
    return p;
}

Poly Poly::monomial(const Monomial& m, const BigInt& coeff) {
    Poly p;
    if (coeff != 0) p.terms_[m] = coeff;
    return p;
}

int Poly::max_var() const {
    int mv = -1;
    for (const auto& [m, c] : terms_) mv = std::max(mv, m.max_var());
    return mv;
}

int Poly::max_exponent() const {
    int me = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) me = std::max(me, e);
    return me;
}

bool Poly::multilinear() const { return max_exponent() <= 1; }

void Poly::add_term(const Monomial& m, const BigInt& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& other) const {
    Poly out = *this;
    out += other;
    return out;
}

Poly Poly::operator-(const Poly& other) const {
    Poly out = *this;
    out -= other;
    return out;
}

void Poly::add_scaled_product(const Poly& a, const Poly& b, const BigInt& scale) {
    if (scale == 0 || a.is_zero() || b.is_zero()) return;
    BigInt coeff;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            coeff = ca * cb * scale;
            add_term(ma.times(mb), coeff);
        }
    }
}

Poly Poly::operator*(const Poly& other) const {
    Poly out;
    out.add_scaled_product(*this, other, 1);
    return out;
}

BigInt Poly::eval(const std::vector<BigInt>& assignment) const {
    BigInt total = 0, term;
    for (const auto& [m, c] : terms_) {
        term = c;
        for (const auto& [v, e] : m.factors()) {
            if (v < 0 || static_cast<std::size_t>(v) >= assignment.size()) {
                throw MissingVariable("no value assigned to variable a" + std::to_string(v));
            }
            for (int i = 0; i < e; ++i) term *= assignment[v];
        }
        total += term;
    }
    return total;
}

BigInt Poly::eval(const std::map<EdgeVar, BigInt>& assignment) const {
    BigInt total = 0, term;
    for (const auto& [m, c] : terms_) {
        term = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                throw MissingVariable("no value assigned to variable a" + std::to_string(v));
            }
            for (int i = 0; i < e; ++i) term *= it->second;
        }
        total += term;
    }
    return total;
}

std::string Poly::str(const std::vector<std::string>* names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << m.str(names);
        }
    }
    return os.str();
}

}  // namespace fpoly
