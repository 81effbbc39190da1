#ifndef IDG_SERIES_HPP
#define IDG_SERIES_HPP

#include "idg/ratfunc.hpp"

namespace idg {

// Truncated power series in a formal variable T with RatFunc coefficients;
// arithmetic discards every term of degree > N.
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(std::vector<RatFunc> coeffs, std::size_t order);
    static TruncSeries constant(const RatFunc& c, std::size_t order);
    static TruncSeries zero(const FiniteField& f, char var, std::size_t order);

    std::size_t order() const { return c_.empty() ? 0 : c_.size() - 1; }
    const std::vector<RatFunc>& coeffs() const { return c_; }
    const RatFunc& coeff(std::size_t k) const { return c_.at(k); }

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator/(const TruncSeries& o) const;   // needs invertible constant term
    TruncSeries pow(std::uint64_t e) const;
    TruncSeries truncate(std::size_t new_order) const;

    bool operator==(const TruncSeries& o) const { return c_ == o.c_; }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::vector<RatFunc> c_;   // length order+1
};

}   // namespace idg

#endif
