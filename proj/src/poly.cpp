#include "idg/poly.hpp"

namespace idg {

Poly::Poly(FiniteField field, std::vector<FieldElem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::zero(const FiniteField& field) { return Poly(field, {}); }

Poly Poly::constant(const FieldElem& c) {
    Poly p(c.field(), {c});
    return p;
}

Poly Poly::monomial(const FieldElem& c, std::size_t k) {
    FiniteField f = c.field();
    std::vector<FieldElem> v(k + 1, f.zero());
    v[k] = c;
    return Poly(f, std::move(v));
}

Poly Poly::variable(const FiniteField& field) {
    return Poly(field, {field.zero(), field.one()});
}

std::size_t Poly::degree() const { return c_.empty() ? 0 : c_.size() - 1; }

FieldElem Poly::coeff(std::size_t k) const {
    if (k < c_.size()) return c_[k];
    return field_.zero();
}

FieldElem Poly::lead() const {
    if (c_.empty()) return field_.zero();
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size() && i < o.c_.size())
            r[i] = c_[i] + o.c_[i];
        else if (i < c_.size())
            r[i] = c_[i];
        else
            r[i] = o.c_[i];
    }
    return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<FieldElem> r(c_.size(), field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return zero(field_);
    std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const FieldElem& c) const {
    std::vector<FieldElem> r(c_.size(), field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * c;
    return Poly(field_, std::move(r));
}

bool Poly::operator==(const Poly& o) const { return c_ == o.c_; }

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw FieldError("polynomial division by zero");
    Poly rem = *this;
    if (rem.c_.size() < d.c_.size()) return {zero(field_), rem};
    FieldElem dlinv = d.lead().inverse();
    std::vector<FieldElem> q(rem.c_.size() - d.c_.size() + 1, field_.zero());
    while (!rem.is_zero() && rem.c_.size() >= d.c_.size()) {
        std::size_t shift = rem.c_.size() - d.c_.size();
        FieldElem f = rem.lead() * dlinv;
        q[shift] = f;
        for (std::size_t i = 0; i < d.c_.size(); ++i)
            rem.c_[shift + i] = rem.c_[shift + i] - f * d.c_[i];
        rem.normalize();
    }
    return {Poly(field_, std::move(q)), rem};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
}

Poly Poly::compose(const Poly& g) const {
    Poly acc = zero(field_);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * g + constant(c_[i]);
    }
    return acc;
}

FieldElem Poly::eval(const FieldElem& x) const {
    FieldElem acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + c_[i];
    }
    return acc;
}

Poly Poly::pow(std::uint64_t e) const {
    Poly base = *this;
    Poly r = constant(field_.one());
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

}   // namespace idg
