#include "idg/derivation.hpp"

namespace idg {

Poly derive_poly(const Poly& p, std::uint64_t k) {
    const FiniteField& K = p.field();
    if (k == 0) return p;
    if (p.is_zero() || p.degree() < k) return Poly::zero(K);
    std::vector<FieldElem> r(p.degree() - k + 1, K.zero());
    std::uint64_t prime = K.characteristic();
    for (std::size_t n = k; n <= p.degree(); ++n) {
        std::uint64_t binom = lucas_binom(n, k, prime);
        if (binom == 0) continue;
        r[n - k] = p.coeff(n) * K.from_int(static_cast<std::int64_t>(binom));
    }
    return Poly(K, std::move(r));
}

RatFunc RawChain::reduced(std::size_t k, char var) const {
    return RatFunc(nums.at(k), den_pows.at(k + 1), var);
}

RawChain derive_chain(const Poly& num, const Poly& den, std::size_t upto) {
    RawChain ch;
    ch.den = den;
    ch.den_pows.reserve(upto + 2);
    ch.den_pows.push_back(Poly::constant(den.field().one()));
    for (std::size_t i = 1; i <= upto + 1; ++i) ch.den_pows.push_back(ch.den_pows.back() * den);

    std::vector<Poly> dden(upto + 1, Poly::zero(den.field()));
    for (std::size_t j = 1; j <= upto; ++j) dden[j] = derive_poly(den, j);

    ch.nums.reserve(upto + 1);
    ch.nums.push_back(num);
    for (std::size_t k = 1; k <= upto; ++k) {
        // n_k = d^(k)(a) b^k - sum_{j=1..k} n_{k-j} d^(j)(b) b^(j-1)
        Poly acc = derive_poly(num, k) * ch.den_pows[k];
        for (std::size_t j = 1; j <= k; ++j) {
            if (dden[j].is_zero() || ch.nums[k - j].is_zero()) continue;
            acc = acc - ch.nums[k - j] * dden[j] * ch.den_pows[j - 1];
        }
        ch.nums.push_back(std::move(acc));
    }
    return ch;
}

void IterativeDerivation::check_order(std::size_t k) const {
    if (k > bound_)
        throw TruncationError("derivative order " + std::to_string(k) +
                              " exceeds truncation bound " + std::to_string(bound_));
}

RatFunc IterativeDerivation::derive(const RatFunc& f, std::size_t k) const {
    check_order(k);
    if (k == 0) return f;
    if (f.is_poly()) return RatFunc::from_poly(derive_poly(f.num(), k), var_);
    RawChain ch = derive_chain(f.num(), f.den(), k);
    return ch.reduced(k, var_);
}

std::vector<RatFunc> IterativeDerivation::derive_upto(const RatFunc& f, std::size_t k) const {
    check_order(k);
    std::vector<RatFunc> out;
    out.reserve(k + 1);
    if (f.is_poly()) {
        for (std::size_t i = 0; i <= k; ++i)
            out.push_back(RatFunc::from_poly(derive_poly(f.num(), i), var_));
        return out;
    }
    RawChain ch = derive_chain(f.num(), f.den(), k);
    for (std::size_t i = 0; i <= k; ++i) out.push_back(ch.reduced(i, var_));
    return out;
}

TruncSeries IterativeDerivation::taylor(const RatFunc& f, std::size_t order) const {
    return TruncSeries(derive_upto(f, order), order);
}

LevelResult IterativeDerivation::subfield_level(const RatFunc& f) const {
    LevelResult res;
    if (f.is_zero()) {
        res.all_levels = true;
        res.zero_input = true;
        return res;
    }
    if (f.is_constant()) {
        res.all_levels = true;
        return res;
    }
    std::uint64_t p = field_.characteristic();
    // a nonconstant member of F_l has both degrees divisible by p^l, so the
    // first failing p-power derivative appears within this bound
    std::uint64_t bound = f.num().degree() + f.den().degree() + 1;
    std::uint64_t pj = 1;
    int j = 0;
    while (pj <= bound) {
        RatFunc d;
        if (f.is_poly())
            d = RatFunc::from_poly(derive_poly(f.num(), pj), var_);
        else {
            RawChain ch = derive_chain(f.num(), f.den(), pj);
            d = ch.reduced(pj, var_);
        }
        if (!d.is_zero()) {
            res.level = j;
            return res;
        }
        ++j;
        pj *= p;
    }
    throw ArithmeticError("level search exhausted its sound bound on nonconstant input");
}

namespace {

// equality of n1/d1^(k1) and n2/d2^(k2) by cross multiplication
bool cross_equal(const Poly& n1, const Poly& d1, const Poly& n2, const Poly& d2) {
    return n1 * d2 == n2 * d1;
}

}   // namespace

AxiomReport IterativeDerivation::verify_axioms(const std::vector<RatFunc>& samples,
                                               std::size_t order) const {
    check_order(order);
    AxiomReport rep;
    if (samples.empty()) return rep;
    std::uint64_t p = field_.characteristic();

    std::vector<RawChain> chains;
    chains.reserve(samples.size());
    for (const RatFunc& f : samples) chains.push_back(derive_chain(f.num(), f.den(), order));

    auto fail = [&](const std::string& axiom, const RatFunc& f, const RatFunc* g, long i, long j) {
        rep.ok = false;
        rep.witness = AxiomWitness{axiom, f.to_string(), g ? g->to_string() : "", i, j};
    };

    for (std::size_t idx = 0; idx < samples.size() && rep.ok; ++idx) {
        const RatFunc& f = samples[idx];
        const RawChain& cf = chains[idx];
        const RatFunc& g = samples[(idx + 1) % samples.size()];
        const RawChain& cg = chains[(idx + 1) % samples.size()];

        // additivity on the pair (f, g): chain of f+g in unreduced form
        {
            Poly hn = f.num() * g.den() + g.num() * f.den();
            Poly hd = f.den() * g.den();
            RawChain ch = derive_chain(hn, hd, order);
            for (std::size_t k = 0; k <= order && rep.ok; ++k) {
                // n_h[k]/hd^{k+1} == n_f[k]/df^{k+1} + n_g[k]/dg^{k+1}
                Poly rhs_num = cf.nums[k] * cg.den_pows[k + 1] + cg.nums[k] * cf.den_pows[k + 1];
                Poly rhs_den = cf.den_pows[k + 1] * cg.den_pows[k + 1];
                if (!cross_equal(ch.nums[k], ch.den_pows[k + 1], rhs_num, rhs_den))
                    fail("additivity", f, &g, static_cast<long>(k), 0);
                ++rep.additivity_checks;
            }
        }

        // Leibniz on the pair
        {
            Poly hn = f.num() * g.num();
            Poly hd = f.den() * g.den();
            RawChain ch = derive_chain(hn, hd, order);
            for (std::size_t k = 0; k <= order && rep.ok; ++k) {
                Poly acc = Poly::zero(field_);
                for (std::size_t i = 0; i <= k; ++i) {
                    std::size_t j = k - i;
                    if (cf.nums[i].is_zero() || cg.nums[j].is_zero()) continue;
                    acc = acc + cf.nums[i] * cg.nums[j] * cf.den_pows[j] * cg.den_pows[i];
                }
                // RHS = acc / (df dg)^{k+1}; LHS = ch.nums[k] / hd^{k+1} with hd = df dg
                if (!(ch.nums[k] == acc)) fail("leibniz", f, &g, static_cast<long>(k), 0);
                ++rep.leibniz_checks;
            }
        }

        // composition law on f alone: d^(j) d^(i) = C(i+j,i) d^(i+j)
        for (std::size_t i = 0; i <= order && rep.ok; ++i) {
            RawChain inner = derive_chain(cf.nums[i], cf.den_pows[i + 1], order - i);
            for (std::size_t j = 1; i + j <= order && rep.ok; ++j) {
                std::uint64_t binom = lucas_binom(i + j, i, p);
                Poly rhs = cf.nums[i + j] * field_.from_int(static_cast<std::int64_t>(binom));
                // inner.nums[j] / (df^{i+1})^{j+1} == binom * nf[i+j] / df^{i+j+1}
                if (!cross_equal(inner.nums[j], inner.den_pows[j + 1], rhs,
                                 cf.den_pows[i + j + 1]))
                    fail("composition", f, nullptr, static_cast<long>(i), static_cast<long>(j));
                ++rep.composition_checks;
            }
        }

        // trivial p-curvature: applying d^(k) exactly p times yields 0
        for (std::size_t k = 1; k * p <= order && rep.ok; ++k) {
            RatFunc cur = f;
            for (std::uint64_t step = 0; step < p; ++step) cur = derive(cur, k);
            if (!cur.is_zero()) fail("p-curvature", f, nullptr, static_cast<long>(k), 0);
            ++rep.pcurvature_checks;
        }
    }
    return rep;
}

}   // namespace idg
