#ifndef IDG_RATFUNC_HPP
#define IDG_RATFUNC_HPP

#include "idg/poly.hpp"

namespace idg {

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reduced rational function num/den over GF(p^m) in one variable (tagged
// 't' or 's'). Canonical form: den monic and nonzero, gcd(num, den) = 1,
// so equality is structural.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(Poly num, Poly den, char var);
    static RatFunc from_poly(Poly p, char var);
    static RatFunc constant(const FieldElem& c, char var);
    static RatFunc zero(const FiniteField& f, char var);
    static RatFunc one(const FiniteField& f, char var);
    static RatFunc variable(const FiniteField& f, char var);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    char var() const { return var_; }
    const FiniteField& field() const { return num_.field(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }
    // lies in the constant field K
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    FieldElem constant_value() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;
    RatFunc pow(std::int64_t e) const;

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // substitute the variable by g (possibly in another variable)
    RatFunc substitute(const RatFunc& g) const;

    std::string to_string() const;

    // degree(num) + degree(den), a crude size measure
    std::size_t size_bound() const { return num_.degree() + den_.degree(); }

private:
    void reduce();
    void check_compat(const RatFunc& o) const;
    Poly num_, den_;
    char var_ = 't';
};

}   // namespace idg

#endif
