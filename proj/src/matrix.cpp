#include "idg/matrix.hpp"

#include <sstream>

namespace idg {

Matrix::Matrix(std::size_t n, const RatFunc& fill) : n_(n), e_(n * n, fill) {}

Matrix Matrix::identity(std::size_t n, const FiniteField& f, char var) {
    Matrix m(n, RatFunc::zero(f, var));
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc::one(f, var);
    return m;
}

Matrix Matrix::from_rows(std::vector<std::vector<RatFunc>> rows) {
    std::size_t n = rows.size();
    if (n == 0) throw ArithmeticError("empty matrix");
    Matrix m(n, rows[0][0]);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw ArithmeticError("matrix must be square");
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

void Matrix::check_shape(const Matrix& o) const {
    if (n_ != o.n_) throw ArithmeticError("matrix shape mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_shape(o);
    Matrix r(n_, RatFunc::zero(e_[0].field(), e_[0].var()));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::scaled(const RatFunc& c) const {
    Matrix r = *this;
    for (auto& x : r.e_) x = x * c;
    return r;
}

RatFunc Matrix::det() const {
    // fraction-field Gaussian elimination
    Matrix a = *this;
    RatFunc result = RatFunc::one(e_[0].field(), e_[0].var());
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n_) return RatFunc::zero(e_[0].field(), e_[0].var());
        if (pivot != col) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            result = -result;
        }
        result = result * a.at(col, col);
        RatFunc inv = a.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n_; ++i) {
            if (a.at(i, col).is_zero()) continue;
            RatFunc f = a.at(i, col) * inv;
            for (std::size_t j = col; j < n_; ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(col, j);
        }
    }
    return result;
}

Matrix Matrix::inverse() const {
    Matrix a = *this;
    Matrix inv = identity(n_, e_[0].field(), e_[0].var());
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n_) throw ArithmeticError("matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        RatFunc d = a.at(col, col).inverse();
        for (std::size_t j = 0; j < n_; ++j) {
            a.at(col, j) = a.at(col, j) * d;
            inv.at(col, j) = inv.at(col, j) * d;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            RatFunc f = a.at(i, col);
            for (std::size_t j = 0; j < n_; ++j) {
                a.at(i, j) = a.at(i, j) - f * a.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool Matrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

Matrix Matrix::map(const std::function<RatFunc(const RatFunc&)>& fn) const {
    Matrix r = *this;
    for (auto& x : r.e_) x = fn(x);
    return r;
}

Matrix Matrix::derive(const DiffField& ctx, std::size_t k) const {
    return map([&](const RatFunc& x) { return ctx.derive(x, k); });
}

Matrix Matrix::galois(const DiffField& ctx, std::int64_t j) const {
    return map([&](const RatFunc& x) { return ctx.galois(j, x); });
}

bool Matrix::level_member(const DiffField& ctx, int l) const {
    for (const auto& x : e_)
        if (!ctx.level_member(x, l)) return false;
    return true;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string();
        }
    }
    os << "]";
    return os.str();
}

}   // namespace idg
