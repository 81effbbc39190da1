#include "idg/ratfunc.hpp"

#include <sstream>

namespace idg {

RatFunc::RatFunc(Poly num, Poly den, char var)
    : num_(std::move(num)), den_(std::move(den)), var_(var) {
    if (den_.is_zero()) throw ArithmeticError("zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(den_.field().one());
        return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_one() && !g.is_zero()) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    FieldElem lead = den_.lead();
    if (!lead.is_one()) {
        FieldElem inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::from_poly(Poly p, char var) {
    FiniteField f = p.field();
    return RatFunc(std::move(p), Poly::constant(f.one()), var);
}

RatFunc RatFunc::constant(const FieldElem& c, char var) {
    return from_poly(Poly::constant(c), var);
}

RatFunc RatFunc::zero(const FiniteField& f, char var) {
    return from_poly(Poly::zero(f), var);
}

RatFunc RatFunc::one(const FiniteField& f, char var) {
    return from_poly(Poly::constant(f.one()), var);
}

RatFunc RatFunc::variable(const FiniteField& f, char var) {
    return from_poly(Poly::variable(f), var);
}

FieldElem RatFunc::constant_value() const {
    if (!is_constant()) throw ArithmeticError("not a constant");
    return num_.is_zero() ? num_.field().zero() : num_.coeff(0);
}

void RatFunc::check_compat(const RatFunc& o) const {
    if (var_ != o.var_) throw ArithmeticError("variable mismatch");
    if (!num_.field().same_as(o.num_.field())) throw ArithmeticError("field mismatch");
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    check_compat(o);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_, var_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    check_compat(o);
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_, var_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, var_); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    check_compat(o);
    return RatFunc(num_ * o.num_, den_ * o.den_, var_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    check_compat(o);
    if (o.is_zero()) throw ArithmeticError("division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_, var_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    return RatFunc(den_, num_, var_);
}

RatFunc RatFunc::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc base = *this;
    RatFunc r = one(field(), var_);
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
    return var_ == o.var_ && num_ == o.num_ && den_ == o.den_;
}

RatFunc RatFunc::substitute(const RatFunc& g) const {
    // f = num/den with num = sum a_i x^i: evaluate both at g exactly
    RatFunc n = RatFunc::zero(g.field(), g.var());
    for (std::size_t i = num_.coeffs().size(); i-- > 0;) {
        n = n * g + RatFunc::constant(num_.coeff(i), g.var());
    }
    RatFunc d = RatFunc::zero(g.field(), g.var());
    for (std::size_t i = den_.coeffs().size(); i-- > 0;) {
        d = d * g + RatFunc::constant(den_.coeff(i), g.var());
    }
    return n / d;
}

namespace {

void print_poly(std::ostringstream& os, const Poly& p, char var) {
    if (p.is_zero()) {
        os << "0";
        return;
    }
    bool first = true;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const FieldElem& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        if (!first) os << "+";
        first = false;
        std::string cs = c.to_string();
        bool composite = cs.find('+') != std::string::npos;
        if (i == 0) {
            if (composite)
                os << "(" << cs << ")";
            else
                os << cs;
        } else {
            if (!c.is_one()) {
                if (composite)
                    os << "(" << cs << ")*";
                else
                    os << cs << "*";
            }
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
}

}   // namespace

std::string RatFunc::to_string() const {
    std::ostringstream os;
    if (den_.is_one()) {
        print_poly(os, num_, var_);
    } else {
        os << "(";
        print_poly(os, num_, var_);
        os << ")/(";
        print_poly(os, den_, var_);
        os << ")";
    }
    return os.str();
}

}   // namespace idg
