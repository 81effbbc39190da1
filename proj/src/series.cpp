#include "idg/series.hpp"

#include <sstream>

namespace idg {

TruncSeries::TruncSeries(std::vector<RatFunc> coeffs, std::size_t order) : c_(std::move(coeffs)) {
    if (c_.empty()) throw ArithmeticError("series needs a field-carrying coefficient");
    const RatFunc& base = c_[0];
    c_.resize(order + 1, RatFunc::zero(base.field(), base.var()));
}

TruncSeries TruncSeries::constant(const RatFunc& c, std::size_t order) {
    return TruncSeries({c}, order);
}

TruncSeries TruncSeries::zero(const FiniteField& f, char var, std::size_t order) {
    return TruncSeries({RatFunc::zero(f, var)}, order);
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    std::size_t n = std::min(order(), o.order());
    std::vector<RatFunc> r(n + 1, c_[0]);
    for (std::size_t i = 0; i <= n; ++i) r[i] = c_[i] + o.c_[i];
    return TruncSeries(std::move(r), n);
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    std::size_t n = std::min(order(), o.order());
    std::vector<RatFunc> r(n + 1, c_[0]);
    for (std::size_t i = 0; i <= n; ++i) r[i] = c_[i] - o.c_[i];
    return TruncSeries(std::move(r), n);
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    std::size_t n = std::min(order(), o.order());
    RatFunc z = RatFunc::zero(c_[0].field(), c_[0].var());
    std::vector<RatFunc> r(n + 1, z);
    for (std::size_t i = 0; i <= n; ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (o.c_[j].is_zero()) continue;
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
    }
    return TruncSeries(std::move(r), n);
}

TruncSeries TruncSeries::operator/(const TruncSeries& o) const {
    std::size_t n = std::min(order(), o.order());
    if (o.c_[0].is_zero()) throw ArithmeticError("series division needs invertible constant term");
    RatFunc inv0 = o.c_[0].inverse();
    RatFunc z = RatFunc::zero(c_[0].field(), c_[0].var());
    std::vector<RatFunc> q(n + 1, z);
    for (std::size_t k = 0; k <= n; ++k) {
        RatFunc acc = c_[k];
        for (std::size_t j = 1; j <= k; ++j) {
            if (o.c_[j].is_zero() || q[k - j].is_zero()) continue;
            acc = acc - o.c_[j] * q[k - j];
        }
        q[k] = acc * inv0;
    }
    return TruncSeries(std::move(q), n);
}

TruncSeries TruncSeries::pow(std::uint64_t e) const {
    TruncSeries r = constant(RatFunc::one(c_[0].field(), c_[0].var()), order());
    TruncSeries base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

TruncSeries TruncSeries::truncate(std::size_t new_order) const {
    std::vector<RatFunc> r(c_.begin(), c_.begin() + std::min(c_.size(), new_order + 1));
    return TruncSeries(std::move(r), new_order);
}

std::string TruncSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = c_[i].to_string();
        bool composite = cs.find_first_of("+-*/") != std::string::npos;
        if (i == 0) {
            os << cs;
        } else {
            if (!c_[i].is_one()) {
                if (composite)
                    os << "(" << cs << ")*";
                else
                    os << cs << "*";
            }
            os << "T";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}   // namespace idg
