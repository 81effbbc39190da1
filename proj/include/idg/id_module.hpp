#ifndef IDG_ID_MODULE_HPP
#define IDG_ID_MODULE_HPP

#include "idg/matrix.hpp"

namespace idg {

struct SystemCheck {
    bool ok = true;
    int failed_level = -1;
    std::string failed_entry;   // "(i,j)" of the first offending entry
    std::string reason;
};

// Finite prefix D_0..D_L of a projective system: every D_l invertible with
// entries at level l.
struct ProjectiveSystem {
    DiffField ctx;
    std::vector<Matrix> D;

    std::size_t levels() const { return D.size(); }          // L+1
    std::size_t dim() const { return D.empty() ? 0 : D[0].dim(); }
    // P_l = D_0 ... D_l
    Matrix partial_product(std::size_t l) const;
};

SystemCheck check_projective_system(const ProjectiveSystem& sys);

struct IdeCoefficients {
    std::vector<Matrix> A;   // A_l = d^(p^l)(P_l) P_l^(-1)
};

IdeCoefficients ide_from_projective(const ProjectiveSystem& sys);

// d^(p^l)(Y) = A_l Y for every available level; Y may live in an extension
// of the system's field, in which case the coefficients are lifted.
SystemCheck check_fundamental(const Matrix& Y, const IdeCoefficients& A, const DiffField& y_ctx);

// D~_l = C_l D_l C_(l+1)^(-1); C has length L+2, or L+1 with C_(L+1) = I
// by convention. The result is re-validated.
ProjectiveSystem gauge_transform(const ProjectiveSystem& sys, const std::vector<Matrix>& C);

// level-indexed membership predicate of a twisted form, supplied by the
// equivariance layer
using FormMembership = std::function<bool(const Matrix&, int level)>;

// (U_0...U_l)^(-1) (U'_0...U'_l) lies in the form at level l+1, for every l
bool pv_equivalent(const std::vector<Matrix>& U, const std::vector<Matrix>& Uprime,
                   std::size_t level_count, const FormMembership& member);

}   // namespace idg

#endif
