#ifndef IDG_MATRIX_HPP
#define IDG_MATRIX_HPP

#include "idg/diff_field.hpp"

#include <functional>

namespace idg {

// Square matrix with RatFunc entries. Invertibility is decided exactly via
// the determinant.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t n, const RatFunc& fill);
    static Matrix identity(std::size_t n, const FiniteField& f, char var);
    static Matrix from_rows(std::vector<std::vector<RatFunc>> rows);

    std::size_t dim() const { return n_; }
    const RatFunc& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    RatFunc& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const RatFunc& c) const;
    bool operator==(const Matrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    RatFunc det() const;
    bool invertible() const { return !det().is_zero(); }
    Matrix inverse() const;

    bool is_identity() const;

    // entry-wise maps
    Matrix map(const std::function<RatFunc(const RatFunc&)>& fn) const;
    Matrix derive(const DiffField& ctx, std::size_t k) const;
    Matrix galois(const DiffField& ctx, std::int64_t j) const;
    bool level_member(const DiffField& ctx, int l) const;

    std::string to_string() const;

private:
    void check_shape(const Matrix& o) const;
    std::size_t n_ = 0;
    std::vector<RatFunc> e_;
};

}   // namespace idg

#endif
