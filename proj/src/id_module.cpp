#include "idg/id_module.hpp"

namespace idg {

Matrix ProjectiveSystem::partial_product(std::size_t l) const {
    Matrix P = D.at(0);
    for (std::size_t i = 1; i <= l; ++i) P = P * D[i];
    return P;
}

SystemCheck check_projective_system(const ProjectiveSystem& sys) {
    SystemCheck res;
    for (std::size_t l = 0; l < sys.D.size(); ++l) {
        const Matrix& Dl = sys.D[l];
        if (Dl.dim() != sys.dim()) {
            res.ok = false;
            res.failed_level = static_cast<int>(l);
            res.reason = "shape mismatch";
            return res;
        }
        if (!Dl.invertible()) {
            res.ok = false;
            res.failed_level = static_cast<int>(l);
            res.reason = "singular transition matrix";
            return res;
        }
        for (std::size_t i = 0; i < Dl.dim(); ++i)
            for (std::size_t j = 0; j < Dl.dim(); ++j) {
                if (!sys.ctx.level_member(Dl.at(i, j), static_cast<int>(l))) {
                    res.ok = false;
                    res.failed_level = static_cast<int>(l);
                    res.failed_entry =
                        "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    res.reason = "entry not at level " + std::to_string(l);
                    return res;
                }
            }
    }
    return res;
}

IdeCoefficients ide_from_projective(const ProjectiveSystem& sys) {
    IdeCoefficients out;
    std::uint64_t p = sys.ctx.constants().characteristic();
    Matrix P = sys.D.at(0);
    std::uint64_t pl = 1;
    for (std::size_t l = 0; l < sys.D.size(); ++l) {
        if (l > 0) {
            P = P * sys.D[l];
            pl *= p;
        }
        if (pl > sys.ctx.order_bound())
            throw TruncationError("IDE level exceeds the derivation bound");
        Matrix dP = P.derive(sys.ctx, pl);
        out.A.push_back(dP * P.inverse());
    }
    return out;
}

SystemCheck check_fundamental(const Matrix& Y, const IdeCoefficients& A, const DiffField& y_ctx) {
    SystemCheck res;
    if (!Y.invertible()) {
        res.ok = false;
        res.reason = "fundamental matrix is singular";
        return res;
    }
    std::uint64_t p = y_ctx.constants().characteristic();
    std::uint64_t pl = 1;
    for (std::size_t l = 0; l < A.A.size(); ++l) {
        Matrix Al = A.A[l].map([&](const RatFunc& x) { return y_ctx.lift(x); });
        Matrix lhs = Y.derive(y_ctx, pl);
        Matrix rhs = Al * Y;
        if (lhs != rhs) {
            res.ok = false;
            res.failed_level = static_cast<int>(l);
            res.reason = "derivative does not match A_l Y";
            return res;
        }
        pl *= p;
    }
    return res;
}

ProjectiveSystem gauge_transform(const ProjectiveSystem& sys, const std::vector<Matrix>& C) {
    std::size_t L1 = sys.D.size();
    if (C.size() != L1 && C.size() != L1 + 1)
        throw ArithmeticError("gauge needs L+1 or L+2 matrices");
    for (std::size_t l = 0; l < C.size(); ++l) {
        if (!C[l].invertible()) throw ArithmeticError("gauge matrix " + std::to_string(l) + " is singular");
        if (!C[l].level_member(sys.ctx, static_cast<int>(l)))
            throw ArithmeticError("gauge matrix " + std::to_string(l) + " is not at its level");
    }
    ProjectiveSystem out{sys.ctx, {}};
    for (std::size_t l = 0; l < L1; ++l) {
        Matrix next = (l + 1 < C.size())
                          ? C[l + 1]
                          : Matrix::identity(sys.dim(), sys.ctx.constants(), sys.ctx.variable());
        out.D.push_back(C[l] * sys.D[l] * next.inverse());
    }
    SystemCheck chk = check_projective_system(out);
    if (!chk.ok) throw ArithmeticError("gauge output failed validation: " + chk.reason);
    return out;
}

bool pv_equivalent(const std::vector<Matrix>& U, const std::vector<Matrix>& Uprime,
                   std::size_t level_count, const FormMembership& member) {
    if (U.size() < level_count || Uprime.size() < level_count)
        throw ArithmeticError("sequences shorter than the requested level count");
    Matrix P = U.at(0);
    Matrix Q = Uprime.at(0);
    for (std::size_t l = 0; l < level_count; ++l) {
        if (l > 0) {
            P = P * U[l];
            Q = Q * Uprime[l];
        }
        if (!member(P.inverse() * Q, static_cast<int>(l) + 1)) return false;
    }
    return true;
}

}   // namespace idg
