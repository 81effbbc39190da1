#ifndef IDG_EXTENSION_HPP
#define IDG_EXTENSION_HPP

#include "idg/derivation.hpp"

namespace idg {

enum class ExtKind { Kummer, ArtinSchreier };

// Cyclic extension L = K(s) of F = K(t): Kummer s^m = t (gcd(m,p) = 1,
// needs a primitive m-th root of unity in K) or Artin-Schreier s^p - s = t.
// Elements of L are reduced rational functions in s; the derivation extends
// from F through the precomputed Taylor image theta(s).
class CyclicExtension {
public:
    static CyclicExtension kummer(const FiniteField& K, std::uint64_t m, std::size_t order_bound);
    static CyclicExtension artin_schreier(const FiniteField& K, std::size_t order_bound);

    ExtKind kind() const { return kind_; }
    const FiniteField& constants() const { return K_; }
    std::uint64_t galois_order() const { return galois_order_; }
    const FieldElem& root_of_unity() const { return zeta_; }   // Kummer only
    std::size_t order_bound() const { return N_; }
    const TruncSeries& theta_s() const { return theta_s_; }
    std::string designator() const;

    RatFunc s_elem() const { return RatFunc::variable(K_, 's'); }
    // t written as an element of L: s^m resp. s^p - s
    RatFunc t_in_s() const;
    // embed an element of F = K(t) into L
    RatFunc to_ext(const RatFunc& f) const;

    // generator action s -> zeta^j s resp. s -> s + j, applied by substitution
    RatFunc galois_apply(std::int64_t j, const RatFunc& x) const;
    bool fixed_by_galois(const RatFunc& x) const;

    // coefficient k of theta(x); agrees with the base derivation on F
    RatFunc derive(const RatFunc& x, std::size_t k) const;
    std::vector<RatFunc> derive_upto(const RatFunc& x, std::size_t k) const;

    // x in L_l, i.e., all p^j-derivatives vanish for j < l; needs p^(l-1) <= N
    bool level_member(const RatFunc& x, int l) const;

    // rewrite a Galois-invariant element as a rational function of t
    RatFunc to_base(const RatFunc& x) const;

private:
    CyclicExtension(ExtKind kind, FiniteField K, std::uint64_t galois_order, FieldElem zeta,
                    std::size_t N);
    void build_theta();

    ExtKind kind_;
    FiniteField K_;
    std::uint64_t galois_order_;
    FieldElem zeta_;
    std::size_t N_;
    TruncSeries theta_s_;
};

// "kummer(m=2)" or "artin-schreier"
CyclicExtension parse_extension(const std::string& text, const FiniteField& K,
                                std::size_t order_bound);

}   // namespace idg

#endif
