#ifndef IDG_FINITE_FIELD_HPP
#define IDG_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace idg {

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Binomial coefficient C(n,k) mod p via base-p digit products.
/// Zero whenever any digit of k exceeds the matching digit of n.
std::uint64_t lucas_binom(std::uint64_t n, std::uint64_t k, std::uint64_t p);

bool is_prime(std::uint64_t p);

class FieldElem;

// GF(p^m) in polynomial basis over GF(p). The modulus is a monic irreducible
// polynomial of degree m (coefficients ascending, length m+1), required for
// m > 1 and checked by exhaustive factor search (desk scale, m <= 8).
class FiniteField {
public:
    explicit FiniteField(std::uint64_t p);
    FiniteField(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus);

    std::uint64_t characteristic() const { return data_->p; }
    unsigned degree() const { return data_->m; }
    const std::vector<std::uint64_t>& modulus() const { return data_->modulus; }
    std::uint64_t order() const;   // p^m

    bool same_as(const FiniteField& other) const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(std::int64_t v) const;
    // element a^i * coeff patterns: coeffs ascending in the generator a
    FieldElem from_coeffs(std::vector<std::uint64_t> coeffs) const;
    FieldElem generator() const;   // the class of a; requires m > 1

    std::string designator() const;   // "GF(p)" or "GF(p^m; modulus=...)"

    struct Data {
        std::uint64_t p;
        unsigned m;
        std::vector<std::uint64_t> modulus;   // ascending, monic, size m+1 (empty when m == 1)
    };
    std::shared_ptr<const Data> data() const { return data_; }

private:
    std::shared_ptr<const Data> data_;
};

class FieldElem {
public:
    FieldElem() = default;
    FieldElem(std::shared_ptr<const FiniteField::Data> fd, std::vector<std::uint64_t> c)
        : fd_(std::move(fd)), c_(std::move(c)) {}

    bool valid() const { return fd_ != nullptr; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::shared_ptr<const FiniteField::Data> field_data() const { return fd_; }
    FiniteField field() const;

    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem inverse() const;
    FieldElem pow(std::uint64_t e) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string to_string() const;   // "2" for prime fields, "2*a+1" for extensions

    // multiplicative order; element must be nonzero
    std::uint64_t mult_order() const;

private:
    void check_same(const FieldElem& o) const;
    std::shared_ptr<const FiniteField::Data> fd_;
    std::vector<std::uint64_t> c_;   // ascending, length m, entries in [0,p)
};

// primitive m-th root of unity in K, requires m | order(K)-1
FieldElem primitive_root_of_unity(const FiniteField& K, std::uint64_t m);

}   // namespace idg

#endif
