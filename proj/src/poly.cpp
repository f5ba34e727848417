#include "canonlab/poly.hpp"

#include <sstream>

#include "canonlab/errors.hpp"

namespace canonlab {

namespace {
const Rational kZero = 0;
}

Poly Poly::constant(Rational a) {
    if (a == 0) return Poly();
    return Poly(std::vector<Rational>{std::move(a)});
}

Poly Poly::linear_root(const Rational& root) {
    return Poly(std::vector<Rational>{-root, Rational(1)});
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + c_[i];
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Rational& a) const {
    if (a == 0) return Poly();
    std::vector<Rational> out = c_;
    for (auto& x : out) x *= a;
    return Poly(std::move(out));
}

Poly Poly::remainder(const Poly& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorCode::Internal, "polynomial division by zero");
    std::vector<Rational> r = c_;
    const int dd = divisor.degree();
    const Rational& lead = divisor.c_.back();
    while (static_cast<int>(r.size()) - 1 >= dd) {
        Rational factor = r.back() / lead;
        size_t shift = r.size() - 1 - static_cast<size_t>(dd);
        for (int i = 0; i <= dd; ++i) r[shift + static_cast<size_t>(i)] -= factor * divisor.c_[static_cast<size_t>(i)];
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.empty()) break;
    }
    return Poly(std::move(r));
}

Poly Poly::quotient(const Poly& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorCode::Internal, "polynomial division by zero");
    if (degree() < divisor.degree()) return Poly();
    std::vector<Rational> r = c_;
    std::vector<Rational> q(static_cast<size_t>(degree() - divisor.degree()) + 1, Rational(0));
    const int dd = divisor.degree();
    const Rational& lead = divisor.c_.back();
    while (static_cast<int>(r.size()) - 1 >= dd && !r.empty()) {
        Rational factor = r.back() / lead;
        size_t shift = r.size() - 1 - static_cast<size_t>(dd);
        q[shift] = factor;
        for (int i = 0; i <= dd; ++i) r[shift + static_cast<size_t>(i)] -= factor * divisor.c_[static_cast<size_t>(i)];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return Poly(std::move(q));
}

bool Poly::divisible_by(const Poly& divisor) const {
    return remainder(divisor).is_zero();
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return *this * (Rational(1) / c_.back());
}

int Poly::root_order(const Rational& root) const {
    if (is_zero()) return -1;  // identically zero: infinite order
    Poly lin = linear_root(root);
    Poly p = *this;
    int order = 0;
    while (!p.is_zero() && p.eval(root) == 0) {
        p = p.quotient(lin);
        ++order;
    }
    return order;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << rational_to_string(c_[i]);
        if (i >= 1) os << "*t";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.remainder(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace canonlab
