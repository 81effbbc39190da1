#ifndef IDG_GROUP_HPP
#define IDG_GROUP_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace idg {

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite group on elements 0..n-1 given by its multiplication table.
// Construction validates the axioms (associativity exhaustively for n <= 64;
// larger tables must come from the associativity-preserving constructions
// below, which pass trusted = true).
class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(std::string name, std::vector<std::vector<int>> table, bool trusted = false);

    // closure of permutation generators acting on 0..degree-1
    static FiniteGroup from_permutations(std::string name,
                                         const std::vector<std::vector<int>>& gens);

    const std::string& name() const { return name_; }
    int order() const { return n_; }
    int identity() const { return id_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int elem_order(int a) const;
    bool is_abelian() const;

    const std::vector<int>& flat_table() const { return table_; }

    // all subgroups as sorted element lists (generated-subgroup closure walk)
    const std::vector<std::vector<int>>& subgroups() const;
    std::vector<std::vector<int>> maximal_subgroups() const;
    std::vector<int> subgroup_closure(std::vector<int> seed) const;
    bool is_subgroup(const std::vector<int>& elems) const;
    bool is_normal(const std::vector<int>& elems) const;

    // a small generating set, greedy
    std::vector<int> generators() const;

private:
    void finish_init(bool trusted);
    std::string name_;
    int n_ = 0;
    int id_ = 0;
    std::vector<int> table_;
    std::vector<int> inv_;
    mutable std::vector<std::vector<int>> subgroup_cache_;
};

// homomorphism given by the image of every element, validated exhaustively
struct GroupHom {
    FiniteGroup source, target;
    std::vector<int> images;

    GroupHom(FiniteGroup src, FiniteGroup dst, std::vector<int> img);
    int apply(int a) const { return images[a]; }
    bool is_surjective() const;
    bool is_injective() const;
    std::vector<int> kernel() const;
    std::vector<int> image_set() const;
};

// quotient G/N with the projection; N must be normal
std::pair<FiniteGroup, GroupHom> quotient_group(const FiniteGroup& G, const std::vector<int>& N);

// parse "(0 1 2)(3 4)" cycle notation into a permutation of 0..degree-1
std::vector<int> parse_cycles(const std::string& text, int degree);

// shipped small-group universe: cyclic Zn, dihedral Dn, V4, Q8, S3, A4
FiniteGroup catalogue_group(const std::string& name);
std::vector<std::string> catalogue_names_upto(int max_order);

}   // namespace idg

#endif
