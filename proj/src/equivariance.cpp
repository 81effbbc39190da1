#include "idg/equivariance.hpp"

#include "idg/rng.hpp"

namespace idg {

const char* group_shape_name(GroupShape s) {
    switch (s) {
        case GroupShape::FullGL: return "full-gl";
        case GroupShape::DiagonalTorus: return "diagonal-torus";
        case GroupShape::UpperUnitriangular: return "upper-unitriangular";
    }
    return "?";
}

GroupShape parse_group_shape(const std::string& text) {
    if (text == "full-gl") return GroupShape::FullGL;
    if (text == "diagonal-torus") return GroupShape::DiagonalTorus;
    if (text == "upper-unitriangular") return GroupShape::UpperUnitriangular;
    throw ArithmeticError("unknown group shape '" + text + "'");
}

bool shape_member(GroupShape shape, const Matrix& g) {
    switch (shape) {
        case GroupShape::FullGL:
            return g.invertible();
        case GroupShape::DiagonalTorus:
            for (std::size_t i = 0; i < g.dim(); ++i)
                for (std::size_t j = 0; j < g.dim(); ++j) {
                    if (i == j && g.at(i, j).is_zero()) return false;
                    if (i != j && !g.at(i, j).is_zero()) return false;
                }
            return true;
        case GroupShape::UpperUnitriangular:
            for (std::size_t i = 0; i < g.dim(); ++i)
                for (std::size_t j = 0; j < g.dim(); ++j) {
                    if (i == j && !g.at(i, j).is_one()) return false;
                    if (i > j && !g.at(i, j).is_zero()) return false;
                }
            return true;
    }
    return false;
}

GaloisSection::GaloisSection(DiffField L, Matrix C, GroupShape container)
    : L_(std::move(L)), container_(container) {
    for (std::size_t i = 0; i < C.dim(); ++i)
        for (std::size_t j = 0; j < C.dim(); ++j)
            if (!C.at(i, j).is_constant())
                throw ArithmeticError("section matrix entries must be constants");
    if (!C.invertible()) throw ArithmeticError("section matrix must be invertible");
    std::uint64_t ord = L_.galois_order();
    Matrix id = Matrix::identity(C.dim(), L_.constants(), L_.variable());
    powers_.push_back(id);
    Matrix acc = id;
    for (std::uint64_t j = 1; j < ord; ++j) {
        acc = acc * C;
        powers_.push_back(acc);
    }
    // over the base arena the galois group is trivial, so only the identity
    // section exists
    if (!(acc * C).is_identity())
        throw ArithmeticError("section matrix does not have order dividing the galois order");
}

const Matrix& GaloisSection::at(std::int64_t j) const {
    std::int64_t ord = static_cast<std::int64_t>(powers_.size());
    return powers_[static_cast<std::size_t>(((j % ord) + ord) % ord)];
}

bool GaloisSection::generator_has_exact_order() const {
    for (std::size_t j = 1; j < powers_.size(); ++j)
        if (powers_[j].is_identity()) return false;
    return true;
}

EquivarianceReport check_equivariant(const EquivariantSystem& es) {
    EquivarianceReport rep;
    const DiffField& L = es.chi.arena();
    for (std::size_t l = 0; l < es.sys.D.size(); ++l) {
        const Matrix& Dl = es.sys.D[l];
        bool level_fine = true;
        for (std::uint64_t j = 1; j < es.chi.order() && level_fine; ++j) {
            Matrix lhs = Dl.galois(L, static_cast<std::int64_t>(j));
            Matrix rhs = es.chi.at(static_cast<std::int64_t>(j)).inverse() * Dl *
                         es.chi.at(static_cast<std::int64_t>(j));
            if (lhs != rhs) {
                level_fine = false;
                if (rep.ok) {
                    rep.ok = false;
                    rep.failed_level = static_cast<int>(l);
                    rep.failed_power = static_cast<int>(j);
                    for (std::size_t a = 0; a < Dl.dim() && rep.failed_entry.empty(); ++a)
                        for (std::size_t b = 0; b < Dl.dim(); ++b)
                            if (lhs.at(a, b) != rhs.at(a, b)) {
                                rep.failed_entry =
                                    "(" + std::to_string(a) + "," + std::to_string(b) + ")";
                                break;
                            }
                }
            }
        }
        rep.level_ok.push_back(level_fine);
    }
    return rep;
}

Matrix star_action(const GaloisSection& chi, std::int64_t j, const Matrix& g) {
    const DiffField& L = chi.arena();
    return chi.at(j) * g.galois(L, j) * chi.at(j).inverse();
}

bool form_membership(const GaloisSection& chi, const Matrix& g, int level) {
    if (!shape_member(chi.container(), g)) return false;
    if (!g.level_member(chi.arena(), level)) return false;
    for (std::uint64_t j = 1; j < chi.order(); ++j)
        if (star_action(chi, static_cast<std::int64_t>(j), g) != g) return false;
    return true;
}

bool direct_equivariance(const GaloisSection& chi, const Matrix& g) {
    const DiffField& L = chi.arena();
    for (std::uint64_t j = 1; j < chi.order(); ++j) {
        std::int64_t jj = static_cast<std::int64_t>(j);
        if (g.galois(L, jj) != chi.at(jj).inverse() * g * chi.at(jj)) return false;
    }
    return true;
}

Matrix hilbert90_solve(const GaloisSection& chi, std::uint64_t seed, int level,
                       int retry_budget) {
    const DiffField& L = chi.arena();
    const FiniteField& K = L.constants();
    std::uint64_t p = K.characteristic();
    std::size_t n = chi.at(0).dim();
    Rng rng(seed);

    std::int64_t step = 1;
    for (int i = 0; i < level; ++i) step *= static_cast<std::int64_t>(p);
    RatFunc spl = RatFunc::variable(K, 's').pow(step);   // generator of the level-l arena

    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        Matrix c(n, RatFunc::zero(K, 's'));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                // random polynomial of degree <= 2 in the level generator
                RatFunc acc = RatFunc::zero(K, 's');
                for (int d = 2; d >= 0; --d)
                    acc = acc * spl + RatFunc::constant(
                                          K.from_int(static_cast<std::int64_t>(rng.below(K.order()))),
                                          's');
                c.at(i, j) = acc;
            }
        // averaging: Z = sum over the group of eta^i(c) C^(-i)
        Matrix Z(n, RatFunc::zero(K, 's'));
        for (std::uint64_t i = 0; i < chi.order(); ++i) {
            std::int64_t ii = static_cast<std::int64_t>(i);
            Z = Z + c.galois(L, ii) * chi.at(-ii);
        }
        if (!Z.invertible()) continue;
        // re-verify the cocycle equation before returning
        for (std::uint64_t j = 1; j < chi.order(); ++j) {
            std::int64_t jj = static_cast<std::int64_t>(j);
            if (Z.galois(L, jj) != Z * chi.at(jj))
                throw ArithmeticError("averaged matrix fails its cocycle equation");
        }
        if (!Z.level_member(L, level))
            throw ArithmeticError("averaged matrix escapes its level");
        return Z;
    }
    throw ArithmeticError("no invertible cocycle solution within the retry budget");
}

ProjectiveSystem compose_solution(const std::vector<Matrix>& Z, const EquivariantSystem& es) {
    const DiffField& L = es.chi.arena();
    EquivarianceReport eq = check_equivariant(es);
    if (!eq.ok)
        throw ArithmeticError("system is not equivariant at level " +
                              std::to_string(eq.failed_level) + ", entry " + eq.failed_entry);
    if (Z.size() != es.sys.D.size() + 1)
        throw ArithmeticError("need one cocycle solution per level plus one");
    for (std::size_t l = 0; l < Z.size(); ++l) {
        if (!Z[l].invertible()) throw ArithmeticError("cocycle solution is singular");
        if (!Z[l].level_member(L, static_cast<int>(l)))
            throw ArithmeticError("cocycle solution escapes level " + std::to_string(l));
        for (std::uint64_t j = 1; j < es.chi.order(); ++j) {
            std::int64_t jj = static_cast<std::int64_t>(j);
            if (Z[l].galois(L, jj) != Z[l] * es.chi.at(jj))
                throw ArithmeticError("cocycle equation fails at level " + std::to_string(l));
        }
    }
    ProjectiveSystem out{DiffField::base(L.constants(), L.order_bound()), {}};
    for (std::size_t l = 0; l < es.sys.D.size(); ++l) {
        Matrix composed = Z[l] * es.sys.D[l] * Z[l + 1].inverse();
        // the whole point of the construction: the result is fixed by the
        // galois action and stays at its level, so it lives over the base
        if (L.is_extension()) {
            const CyclicExtension& ext = L.ext();
            for (std::size_t i = 0; i < composed.dim(); ++i)
                for (std::size_t j = 0; j < composed.dim(); ++j) {
                    if (!ext.fixed_by_galois(composed.at(i, j)))
                        throw ArithmeticError("composed entry is not galois fixed at level " +
                                              std::to_string(l));
                }
        }
        if (!composed.level_member(L, static_cast<int>(l)))
            throw ArithmeticError("composed matrix escapes level " + std::to_string(l));
        if (L.is_extension()) {
            const CyclicExtension& ext = L.ext();
            out.D.push_back(composed.map([&](const RatFunc& x) { return ext.to_base(x); }));
        } else {
            out.D.push_back(composed);
        }
    }
    SystemCheck chk = check_projective_system(out);
    if (!chk.ok)
        throw ArithmeticError("composed system failed validation: " + chk.reason);
    return out;
}

std::vector<Matrix> hat_transform(const std::vector<Matrix>& Y, const std::vector<Matrix>& U,
                                  const EquivariantSystem& es) {
    const DiffField& L = es.chi.arena();
    if (Y.size() != U.size() + 1)
        throw ArithmeticError("need one fundamental matrix per level plus one");
    if (es.sys.D.size() < U.size())
        throw ArithmeticError("system too short for the requested transform");
    for (std::size_t l = 0; l + 1 < Y.size(); ++l) {
        if (Y[l + 1] != es.sys.D[l].inverse() * Y[l])
            throw ArithmeticError("fundamental recurrence fails at level " + std::to_string(l));
    }
    for (std::size_t l = 0; l < U.size(); ++l)
        if (!direct_equivariance(es.chi, U[l]))
            throw ArithmeticError("input matrix is not equivariant at level " + std::to_string(l));
    std::vector<Matrix> out;
    out.reserve(U.size());
    for (std::size_t l = 0; l < U.size(); ++l) {
        Matrix hat = Y[l] * U[l] * Y[l + 1].inverse();
        // sanity from the construction: the output stays equivariant
        if (!direct_equivariance(es.chi, hat))
            throw ArithmeticError("transformed matrix lost equivariance at level " +
                                  std::to_string(l));
        (void)L;
        out.push_back(std::move(hat));
    }
    return out;
}

bool conjugate_membership(const std::vector<Matrix>& U, const std::vector<Matrix>& Ytilde,
                          const GaloisSection& chi) {
    if (U.size() > Ytilde.size()) throw ArithmeticError("conjugator sequence too short");
    for (std::size_t l = 0; l < U.size(); ++l) {
        if (!Ytilde[l].invertible()) throw ArithmeticError("singular conjugator");
        Matrix conj = Ytilde[l] * U[l] * Ytilde[l].inverse();
        if (!form_membership(chi, conj, static_cast<int>(l))) return false;
    }
    return true;
}

HEffectiveReport h_effective_check(const HEffectiveData& data, const GaloisSection& chi,
                                   GroupShape group) {
    HEffectiveReport rep;
    const DiffField& L = chi.arena();

    // condition 1: the Z_l solve the cocycle at their level and the induced
    // section is an isomorphism onto the image of the generator's powers
    rep.cocycle_section = !data.Z.empty() && chi.generator_has_exact_order();
    for (std::size_t l = 0; l < data.Z.size() && rep.cocycle_section; ++l) {
        if (!data.Z[l].invertible() || !data.Z[l].level_member(L, static_cast<int>(l))) {
            rep.cocycle_section = false;
            rep.detail = "cocycle solution invalid at level " + std::to_string(l);
            break;
        }
        for (std::uint64_t j = 1; j < chi.order(); ++j) {
            std::int64_t jj = static_cast<std::int64_t>(j);
            if (data.Z[l].galois(L, jj) != data.Z[l] * chi.at(jj)) {
                rep.cocycle_section = false;
                rep.detail = "cocycle equation fails at level " + std::to_string(l);
                break;
            }
        }
    }

    // condition 2: D_l in the declared group at level l, equivariant, and
    // the supplied Y_l are fundamental for them
    rep.equivariant_defining = !data.D.empty() && data.Y.size() == data.D.size() + 1;
    if (!rep.equivariant_defining && rep.detail.empty()) rep.detail = "missing defining data";
    if (rep.equivariant_defining) {
        ProjectiveSystem dsys{L, data.D};
        EquivariantSystem es{chi, dsys};
        SystemCheck sc = check_projective_system(dsys);
        EquivarianceReport er = check_equivariant(es);
        bool shapes = true;
        for (const Matrix& Dl : data.D) shapes = shapes && shape_member(group, Dl);
        bool recurrence = true;
        for (std::size_t l = 0; l < data.D.size(); ++l)
            recurrence = recurrence && (data.Y[l + 1] == data.D[l].inverse() * data.Y[l]);
        bool fundamental = false;
        if (sc.ok && recurrence) {
            IdeCoefficients A = ide_from_projective(dsys);
            fundamental = check_fundamental(data.Y[0], A, L).ok;
        }
        bool y_levels = true;
        for (std::size_t l = 0; l < data.Y.size(); ++l)
            y_levels = y_levels && data.Y[l].level_member(L, static_cast<int>(l)) &&
                       shape_member(group, data.Y[l]);
        rep.equivariant_defining =
            sc.ok && er.ok && shapes && recurrence && fundamental && y_levels;
        if (!rep.equivariant_defining && rep.detail.empty()) {
            if (!sc.ok) rep.detail = "defining matrices: " + sc.reason;
            else if (!er.ok) rep.detail = "defining matrices are not equivariant";
            else if (!shapes) rep.detail = "defining matrices leave the declared group";
            else if (!recurrence) rep.detail = "fundamental recurrence fails";
            else if (!fundamental) rep.detail = "fundamental matrix check fails";
            else rep.detail = "fundamental matrices violate level or group membership";
        }
    }

    // condition 3: Y~_l = Z_l Y_l and the claimed identification acts as
    // conjugation by Y~_0 on the generator
    rep.composed_identification =
        data.Ytilde.size() == std::min(data.Z.size(), data.Y.size());
    for (std::size_t l = 0; l < data.Ytilde.size() && rep.composed_identification; ++l) {
        if (data.Ytilde[l] != data.Z[l] * data.Y[l]) {
            rep.composed_identification = false;
            rep.detail = "composed matrices differ from Z Y at level " + std::to_string(l);
        }
    }
    if (rep.composed_identification && !data.Ytilde.empty()) {
        const Matrix& Y0 = data.Ytilde[0];
        Matrix induced = Y0.inverse() * Y0.galois(L, 1);
        if (induced != data.alpha_generator_image) {
            rep.composed_identification = false;
            rep.detail = "claimed identification differs from conjugation by the composed matrix";
        }
    }
    return rep;
}

}   // namespace idg
