#include "idg/finite_field.hpp"

#include <algorithm>
#include <sstream>

namespace idg {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t lucas_binom(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    // digit-wise: C(n,k) = prod C(n_i, k_i) mod p over base-p digits
    std::uint64_t result = 1;
    while (k > 0 || n > 0) {
        std::uint64_t ni = n % p, ki = k % p;
        if (ki > ni) return 0;
        // C(ni, ki) mod p with ni, ki < p: small factorial arithmetic
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t i = 0; i < ki; ++i) {
            num = (num * ((ni - i) % p)) % p;
            den = (den * ((i + 1) % p)) % p;
        }
        // den is invertible mod p (product of 1..ki < p)
        std::uint64_t deninv = 1, b = den, e = p - 2;
        while (e) {
            if (e & 1) deninv = (deninv * b) % p;
            b = (b * b) % p;
            e >>= 1;
        }
        result = (result * ((num * deninv) % p)) % p;
        if (result == 0) return 0;
        n /= p;
        k /= p;
    }
    return result;
}

namespace {

using Vec = std::vector<std::uint64_t>;

void trim(Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// polynomial arithmetic over GF(p), ascending coefficients
Vec poly_mul_p(const Vec& a, const Vec& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

Vec poly_mod_p(Vec a, const Vec& mod, std::uint64_t p) {
    trim(a);
    if (mod.empty()) throw FieldError("modulus is zero");
    std::uint64_t lead = mod.back();
    // assume monic modulus (checked at construction)
    (void)lead;
    while (a.size() >= mod.size()) {
        std::uint64_t c = a.back();
        std::size_t shift = a.size() - mod.size();
        if (c != 0) {
            for (std::size_t i = 0; i < mod.size(); ++i) {
                std::uint64_t sub = (c * mod[i]) % p;
                a[shift + i] = (a[shift + i] + p - sub % p) % p;
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() < mod.size()) break;
    }
    trim(a);
    return a;
}

bool poly_is_irreducible_p(const Vec& f, std::uint64_t p) {
    // trial division by all monic polynomials of degree <= deg(f)/2
    if (f.size() < 2) return false;           // constants are not irreducible
    std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // enumerate monic g of degree d: p^d variants
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) {
            count *= p;
            if (count > 100000000ULL) throw FieldError("modulus degree too large for irreducibility check");
        }
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Vec g(d + 1, 0);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = v % p;
                v /= p;
            }
            g[d] = 1;
            if (poly_mod_p(f, g, p).empty()) return false;
        }
    }
    return true;
}

}   // namespace

FiniteField::FiniteField(std::uint64_t p) {
    if (!is_prime(p)) throw FieldError("characteristic must be prime, got " + std::to_string(p));
    data_ = std::make_shared<Data>(Data{p, 1, {}});
}

FiniteField::FiniteField(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus) {
    if (!is_prime(p)) throw FieldError("characteristic must be prime, got " + std::to_string(p));
    if (m == 0) throw FieldError("extension degree must be positive");
    if (m == 1) {
        data_ = std::make_shared<Data>(Data{p, 1, {}});
        return;
    }
    if (m > 8) throw FieldError("extension degree capped at 8");
    for (auto& c : modulus) c %= p;
    trim(modulus);
    if (modulus.size() != m + 1) throw FieldError("modulus must have degree m");
    if (modulus.back() != 1) throw FieldError("modulus must be monic");
    if (!poly_is_irreducible_p(modulus, p)) throw FieldError("modulus is reducible over GF(p)");
    data_ = std::make_shared<Data>(Data{p, m, std::move(modulus)});
}

std::uint64_t FiniteField::order() const {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < data_->m; ++i) q *= data_->p;
    return q;
}

bool FiniteField::same_as(const FiniteField& other) const {
    return data_->p == other.data_->p && data_->m == other.data_->m &&
           data_->modulus == other.data_->modulus;
}

FieldElem FiniteField::zero() const { return FieldElem(data_, Vec(data_->m, 0)); }

FieldElem FiniteField::one() const {
    Vec c(data_->m, 0);
    c[0] = 1;
    return FieldElem(data_, std::move(c));
}

FieldElem FiniteField::from_int(std::int64_t v) const {
    std::int64_t p = static_cast<std::int64_t>(data_->p);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    Vec c(data_->m, 0);
    c[0] = static_cast<std::uint64_t>(r);
    return FieldElem(data_, std::move(c));
}

FieldElem FiniteField::from_coeffs(std::vector<std::uint64_t> coeffs) const {
    for (auto& c : coeffs) c %= data_->p;
    trim(coeffs);
    if (coeffs.size() > data_->m) {
        if (data_->m == 1) throw FieldError("prime field takes a single coefficient");
        coeffs = poly_mod_p(coeffs, data_->modulus, data_->p);
    }
    coeffs.resize(data_->m, 0);
    return FieldElem(data_, std::move(coeffs));
}

FieldElem FiniteField::generator() const {
    if (data_->m == 1) throw FieldError("prime field has no extension generator");
    Vec c(data_->m, 0);
    c[1] = 1;
    return FieldElem(data_, std::move(c));
}

std::string FiniteField::designator() const {
    std::ostringstream os;
    if (data_->m == 1) {
        os << "GF(" << data_->p << ")";
    } else {
        os << "GF(" << data_->p << "^" << data_->m << "; modulus=";
        bool first = true;
        for (std::size_t i = data_->modulus.size(); i-- > 0;) {
            std::uint64_t c = data_->modulus[i];
            if (c == 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0) {
                os << c;
            } else {
                if (c != 1) os << c << "*";
                os << "a";
                if (i > 1) os << "^" << i;
            }
        }
        os << ")";
    }
    return os.str();
}

FiniteField FieldElem::field() const {
    if (fd_->m == 1) return FiniteField(fd_->p);
    return FiniteField(fd_->p, fd_->m, fd_->modulus);
}

void FieldElem::check_same(const FieldElem& o) const {
    if (!fd_ || !o.fd_) throw FieldError("uninitialized field element");
    if (fd_->p != o.fd_->p || fd_->m != o.fd_->m || fd_->modulus != o.fd_->modulus)
        throw FieldError("field mismatch");
}

bool FieldElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint64_t x) { return x == 0; });
}

bool FieldElem::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(o);
    Vec r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + o.c_[i]) % fd_->p;
    return FieldElem(fd_, std::move(r));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same(o);
    Vec r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + fd_->p - o.c_[i]) % fd_->p;
    return FieldElem(fd_, std::move(r));
}

FieldElem FieldElem::operator-() const {
    Vec r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = (fd_->p - c_[i]) % fd_->p;
    return FieldElem(fd_, std::move(r));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(o);
    if (fd_->m == 1) {
        return FieldElem(fd_, {(c_[0] * o.c_[0]) % fd_->p});
    }
    Vec prod = poly_mul_p(c_, o.c_, fd_->p);
    prod = poly_mod_p(std::move(prod), fd_->modulus, fd_->p);
    prod.resize(fd_->m, 0);
    return FieldElem(fd_, std::move(prod));
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw FieldError("division by zero in field");
    if (fd_->m == 1) {
        // Fermat
        std::uint64_t r = 1, b = c_[0], e = fd_->p - 2;
        while (e) {
            if (e & 1) r = (r * b) % fd_->p;
            b = (b * b) % fd_->p;
            e >>= 1;
        }
        return FieldElem(fd_, {r});
    }
    // a^(q-2) via square-and-multiply
    std::uint64_t q = 1;
    for (unsigned i = 0; i < fd_->m; ++i) q *= fd_->p;
    return pow(q - 2);
}

FieldElem FieldElem::pow(std::uint64_t e) const {
    FieldElem base = *this;
    Vec one_c(fd_->m, 0);
    one_c[0] = 1;
    FieldElem r(fd_, std::move(one_c));
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    check_same(o);
    return *this * o.inverse();
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (!fd_ || !o.fd_) return fd_ == o.fd_;
    return fd_->p == o.fd_->p && fd_->m == o.fd_->m && fd_->modulus == o.fd_->modulus &&
           c_ == o.c_;
}

std::string FieldElem::to_string() const {
    if (fd_->m == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c_[i];
        } else {
            if (c_[i] != 1) os << c_[i] << "*";
            os << "a";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::uint64_t FieldElem::mult_order() const {
    if (is_zero()) throw FieldError("zero has no multiplicative order");
    FieldElem x = *this;
    std::uint64_t ord = 1;
    while (!x.is_one()) {
        x = x * *this;
        ++ord;
    }
    return ord;
}

FieldElem primitive_root_of_unity(const FiniteField& K, std::uint64_t m) {
    std::uint64_t q = K.order();
    if (m == 0 || (q - 1) % m != 0)
        throw FieldError("no primitive root of unity of order " + std::to_string(m) +
                         " in " + K.designator());
    // prime factors of q-1 by trial division (q <= 5^8 at desk scale)
    std::vector<std::uint64_t> factors;
    std::uint64_t rest = q - 1;
    for (std::uint64_t d = 2; d * d <= rest; ++d)
        if (rest % d == 0) {
            factors.push_back(d);
            while (rest % d == 0) rest /= d;
        }
    if (rest > 1) factors.push_back(rest);
    // scan for a multiplicative generator: x generates iff no power
    // (q-1)/prime collapses to 1
    std::uint64_t p = K.characteristic();
    unsigned deg = K.degree();
    for (std::uint64_t idx = 1; idx < q; ++idx) {
        std::vector<std::uint64_t> c(deg, 0);
        std::uint64_t v = idx;
        for (unsigned i = 0; i < deg; ++i) {
            c[i] = v % p;
            v /= p;
        }
        FieldElem x = K.from_coeffs(c);
        if (x.is_zero()) continue;
        bool generates = true;
        for (std::uint64_t f : factors)
            if (x.pow((q - 1) / f).is_one()) {
                generates = false;
                break;
            }
        if (generates) return x.pow((q - 1) / m);
    }
    throw FieldError("no multiplicative generator found");   // unreachable for a field
}

}   // namespace idg
