#ifndef IDG_DERIVATION_HPP
#define IDG_DERIVATION_HPP

#include "idg/series.hpp"

#include <optional>

namespace idg {

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// k-th higher derivative of a polynomial: x^n -> C(n,k) x^(n-k)
Poly derive_poly(const Poly& p, std::uint64_t k);

// Derivative chain of a fraction num/den without intermediate reduction:
// the k-th derivative is nums[k] / den^(k+1). Quotients follow the Leibniz
// recurrence; keeping the power-of-den form avoids gcd work in bulk checks.
struct RawChain {
    Poly den;                 // base denominator b
    std::vector<Poly> nums;   // nums[k] = numerator of the k-th derivative over b^(k+1)
    std::vector<Poly> den_pows;   // b^0 .. b^(K+1)

    RatFunc reduced(std::size_t k, char var) const;
};

RawChain derive_chain(const Poly& num, const Poly& den, std::size_t upto);

struct LevelResult {
    bool all_levels = false;   // input lies in the constant field K
    bool zero_input = false;   // reported distinctly, still all-levels
    int level = 0;             // meaningful when !all_levels
};

struct AxiomWitness {
    std::string axiom;
    std::string f, g;
    long i = 0, j = 0;
};

struct AxiomReport {
    bool ok = true;
    long additivity_checks = 0;
    long leibniz_checks = 0;
    long composition_checks = 0;
    long pcurvature_checks = 0;
    std::optional<AxiomWitness> witness;
};

// The iterative derivation on K(t) (or any tagged variable), with a
// truncation bound on requested orders.
class IterativeDerivation {
public:
    IterativeDerivation(FiniteField field, char variable = 't', std::size_t bound = 32)
        : field_(std::move(field)), var_(variable), bound_(bound) {
        if (bound_ < 1) throw TruncationError("derivation bound must be >= 1");
    }

    const FiniteField& field() const { return field_; }
    char variable() const { return var_; }
    std::size_t bound() const { return bound_; }

    RatFunc derive(const RatFunc& f, std::size_t k) const;
    std::vector<RatFunc> derive_upto(const RatFunc& f, std::size_t k) const;
    TruncSeries taylor(const RatFunc& f, std::size_t order) const;

    // largest l with f in F_l, or all-levels for constants; sound via the
    // degree bound deg(num)+deg(den)+1
    LevelResult subfield_level(const RatFunc& f) const;

    AxiomReport verify_axioms(const std::vector<RatFunc>& samples, std::size_t order) const;

private:
    void check_order(std::size_t k) const;
    FiniteField field_;
    char var_;
    std::size_t bound_;
};

}   // namespace idg

#endif
