#ifndef IDG_POLY_HPP
#define IDG_POLY_HPP

#include "idg/finite_field.hpp"

#include <utility>

namespace idg {

// Dense univariate polynomial over GF(p^m), ascending coefficients, no
// trailing zeros (zero polynomial has empty coefficient vector).
class Poly {
public:
    Poly() = default;
    Poly(FiniteField field, std::vector<FieldElem> coeffs);
    static Poly zero(const FiniteField& field);
    static Poly constant(const FieldElem& c);
    static Poly monomial(const FieldElem& c, std::size_t k);
    static Poly variable(const FiniteField& field);   // the polynomial x

    const FiniteField& field() const { return field_; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    std::size_t degree() const;   // degree of 0 is 0 by convention here
    FieldElem coeff(std::size_t k) const;
    FieldElem lead() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElem& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly monic() const;

    // substitute x -> g, evaluated by Horner
    Poly compose(const Poly& g) const;
    FieldElem eval(const FieldElem& x) const;

    Poly pow(std::uint64_t e) const;

private:
    void normalize();
    FiniteField field_{2};
    std::vector<FieldElem> c_;
};

Poly gcd(const Poly& a, const Poly& b);   // monic gcd, gcd(0,0) = 0

}   // namespace idg

#endif
