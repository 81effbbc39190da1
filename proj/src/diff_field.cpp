#include "idg/diff_field.hpp"

namespace idg {

DiffField DiffField::base(FiniteField K, std::size_t order_bound) {
    DiffField d;
    d.K_ = K;
    d.base_ = std::make_shared<IterativeDerivation>(K, 't', order_bound);
    return d;
}

DiffField DiffField::extension(CyclicExtension ext) {
    DiffField d;
    d.K_ = ext.constants();
    d.ext_ = std::make_shared<CyclicExtension>(std::move(ext));
    return d;
}

std::size_t DiffField::order_bound() const {
    return ext_ ? ext_->order_bound() : base_->bound();
}

const CyclicExtension& DiffField::ext() const {
    if (!ext_) throw ArithmeticError("not an extension arena");
    return *ext_;
}

RatFunc DiffField::lift(const RatFunc& f) const {
    if (!f.field().same_as(K_)) throw ArithmeticError("field mismatch");
    if (ext_) return ext_->to_ext(f);
    if (f.var() != 't') throw ArithmeticError("extension element in a base arena");
    return f;
}

RatFunc DiffField::derive(const RatFunc& x, std::size_t k) const {
    if (ext_) return ext_->derive(lift(x), k);
    return base_->derive(x, k);
}

std::vector<RatFunc> DiffField::derive_upto(const RatFunc& x, std::size_t k) const {
    if (ext_) return ext_->derive_upto(lift(x), k);
    return base_->derive_upto(x, k);
}

bool DiffField::level_member(const RatFunc& x, int l) const {
    if (ext_) return ext_->level_member(lift(x), l);
    LevelResult r = base_->subfield_level(x);
    if (r.all_levels) return true;
    return r.level >= l;
}

RatFunc DiffField::galois(std::int64_t j, const RatFunc& x) const {
    if (ext_) return ext_->galois_apply(j, lift(x));
    return x;
}

std::string DiffField::designator() const {
    if (ext_) return K_.designator() + " / " + ext_->designator();
    return K_.designator() + " / base";
}

}   // namespace idg
