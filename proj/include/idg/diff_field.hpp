#ifndef IDG_DIFF_FIELD_HPP
#define IDG_DIFF_FIELD_HPP

#include "idg/extension.hpp"

#include <memory>

namespace idg {

// One computational arena for iterative-derivation work: either the base
// field F = K(t) or a cyclic extension L = K(s). Wraps derive / level /
// Galois so that matrix-level code does not care which one it is in.
class DiffField {
public:
    static DiffField base(FiniteField K, std::size_t order_bound = 32);
    static DiffField extension(CyclicExtension ext);

    bool is_extension() const { return ext_ != nullptr; }
    const FiniteField& constants() const { return K_; }
    char variable() const { return ext_ ? 's' : 't'; }
    std::size_t order_bound() const;
    const CyclicExtension& ext() const;

    RatFunc zero() const { return RatFunc::zero(K_, variable()); }
    RatFunc one() const { return RatFunc::one(K_, variable()); }
    RatFunc from_constant(const FieldElem& c) const { return RatFunc::constant(c, variable()); }
    // bring an element of F into this arena (substitutes the relation in
    // an extension); elements already here pass through
    RatFunc lift(const RatFunc& f) const;

    RatFunc derive(const RatFunc& x, std::size_t k) const;
    std::vector<RatFunc> derive_upto(const RatFunc& x, std::size_t k) const;
    // all p^j-derivatives vanish for j < l
    bool level_member(const RatFunc& x, int l) const;

    // Galois action; identity on the base arena
    RatFunc galois(std::int64_t j, const RatFunc& x) const;
    std::uint64_t galois_order() const { return ext_ ? ext_->galois_order() : 1; }

    std::string designator() const;

private:
    FiniteField K_{2};
    std::shared_ptr<const CyclicExtension> ext_;
    std::shared_ptr<const IterativeDerivation> base_;
};

}   // namespace idg

#endif
