#include "idg/group_ops.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace idg {

SubgroupView subgroup_as_group(const FiniteGroup& G, const std::vector<int>& elems,
                               const std::string& name) {
    if (!G.is_subgroup(elems)) throw GroupError("element set is not a subgroup");
    std::vector<int> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    std::map<int, int> index;
    for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
    int n = static_cast<int>(sorted.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = index.at(G.mul(sorted[a], sorted[b]));
    return SubgroupView{FiniteGroup(name, std::move(table), true), sorted};
}

std::vector<int> frattini_subgroup(const FiniteGroup& G) {
    if (G.order() > 1000) throw GroupError("frattini computation capped at order 1000");
    auto maximal = G.maximal_subgroups();
    if (maximal.empty()) {
        // no proper subgroups at all: the trivial group
        std::vector<int> all(static_cast<std::size_t>(G.order()));
        for (int i = 0; i < G.order(); ++i) all[i] = i;
        return all;
    }
    std::vector<int> inter = maximal[0];
    for (std::size_t i = 1; i < maximal.size(); ++i) {
        std::vector<int> next;
        std::set_intersection(inter.begin(), inter.end(), maximal[i].begin(), maximal[i].end(),
                              std::back_inserter(next));
        inter = std::move(next);
    }
    return inter;
}

namespace {

bool product_covers(const FiniteGroup& G, const std::vector<int>& A, const std::vector<int>& U) {
    if (A.size() * U.size() < static_cast<std::size_t>(G.order())) return false;
    std::vector<char> hit(static_cast<std::size_t>(G.order()), 0);
    int count = 0;
    for (int a : A)
        for (int u : U) {
            int g = G.mul(a, u);
            if (!hit[g]) {
                hit[g] = 1;
                ++count;
            }
        }
    return count == G.order();
}

}   // namespace

bool is_frattini_epi(const GroupHom& phi) {
    if (!phi.is_surjective()) throw GroupError("frattini test needs a surjective homomorphism");
    const FiniteGroup& G = phi.source;
    if (G.order() > 1000) throw GroupError("frattini test capped at order 1000");
    std::vector<int> ker = phi.kernel();
    for (const auto& U : G.subgroups()) {
        if (static_cast<int>(U.size()) == G.order()) continue;
        if (product_covers(G, ker, U)) return false;
    }
    return true;
}

bool frattini_criterion(const GroupHom& phi) {
    if (!phi.is_surjective()) throw GroupError("frattini criterion needs a surjective homomorphism");
    std::vector<int> ker = phi.kernel();
    std::vector<int> phi_g = frattini_subgroup(phi.source);
    return std::includes(phi_g.begin(), phi_g.end(), ker.begin(), ker.end());
}

std::vector<int> minimal_supplement(const FiniteGroup& G, const std::vector<int>& A) {
    if (!G.is_subgroup(A) || !G.is_normal(A)) throw GroupError("supplement needs a normal subgroup");
    if (G.order() > 1000) throw GroupError("supplement search capped at order 1000");
    std::vector<std::vector<int>> supplements;
    for (const auto& U : G.subgroups())
        if (product_covers(G, A, U)) supplements.push_back(U);
    // inclusion-minimal ones
    std::vector<std::vector<int>> minimal;
    for (const auto& U : supplements) {
        bool min = true;
        for (const auto& V : supplements) {
            if (V.size() >= U.size() || V == U) continue;
            if (std::includes(U.begin(), U.end(), V.begin(), V.end())) {
                min = false;
                break;
            }
        }
        if (min) minimal.push_back(U);
    }
    std::sort(minimal.begin(), minimal.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    std::vector<int> chosen = minimal.at(0);

    // induced map U -> G/A must be a Frattini epimorphism
    auto [Q, proj] = quotient_group(G, A);
    SubgroupView view = subgroup_as_group(G, chosen, "supplement");
    std::vector<int> images;
    images.reserve(chosen.size());
    for (int e : view.elems) images.push_back(proj.apply(e));
    GroupHom induced(view.group, Q, std::move(images));
    if (!is_frattini_epi(induced))
        throw GroupError("chosen supplement does not induce a Frattini epimorphism");
    return chosen;
}

int SemidirectProduct::pair_index(int n, int h) const { return n * projection.target.order() + h; }

namespace {

void check_action(const FiniteGroup& N, const FiniteGroup& H,
                  const std::vector<std::vector<int>>& action) {
    if (static_cast<int>(action.size()) != H.order())
        throw GroupError("need one automorphism per acting element");
    for (const auto& perm : action) {
        if (static_cast<int>(perm.size()) != N.order()) throw GroupError("automorphism size mismatch");
        std::vector<char> seen(static_cast<std::size_t>(N.order()), 0);
        for (int v : perm) {
            if (v < 0 || v >= N.order() || seen[v]) throw GroupError("action entry is not a permutation");
            seen[v] = 1;
        }
        for (int a = 0; a < N.order(); ++a)
            for (int b = 0; b < N.order(); ++b)
                if (perm[N.mul(a, b)] != N.mul(perm[a], perm[b]))
                    throw GroupError("action entry is not an automorphism");
    }
    for (int a = 0; a < N.order(); ++a)
        if (action[H.identity()][a] != a) throw GroupError("identity must act trivially");
    for (int h1 = 0; h1 < H.order(); ++h1)
        for (int h2 = 0; h2 < H.order(); ++h2)
            for (int a = 0; a < N.order(); ++a)
                if (action[H.mul(h1, h2)][a] != action[h1][action[h2][a]])
                    throw GroupError("action is not a homomorphism into Aut(N)");
}

}   // namespace

SemidirectProduct semidirect_product(const FiniteGroup& N, const FiniteGroup& H,
                                     const std::vector<std::vector<int>>& action) {
    check_action(N, H, action);
    int nn = N.order(), nh = H.order();
    int size = nn * nh;
    auto idx = [nh](int n, int h) { return n * nh + h; };
    std::vector<std::vector<int>> table(size, std::vector<int>(size));
    for (int n1 = 0; n1 < nn; ++n1)
        for (int h1 = 0; h1 < nh; ++h1)
            for (int n2 = 0; n2 < nn; ++n2)
                for (int h2 = 0; h2 < nh; ++h2)
                    table[idx(n1, h1)][idx(n2, h2)] =
                        idx(N.mul(n1, action[h1][n2]), H.mul(h1, h2));
    FiniteGroup G(N.name() + "x|" + H.name(), std::move(table), true);
    std::vector<int> proj_img(static_cast<std::size_t>(size));
    for (int n = 0; n < nn; ++n)
        for (int h = 0; h < nh; ++h) proj_img[idx(n, h)] = h;
    GroupHom projection(G, H, std::move(proj_img));
    std::vector<int> sect_img(static_cast<std::size_t>(nh));
    for (int h = 0; h < nh; ++h) sect_img[h] = idx(N.identity(), h);
    GroupHom section(H, G, std::move(sect_img));
    return SemidirectProduct{std::move(G), std::move(projection), std::move(section)};
}

std::vector<std::vector<int>> trivial_action(const FiniteGroup& N, const FiniteGroup& H) {
    std::vector<int> ident(static_cast<std::size_t>(N.order()));
    for (int i = 0; i < N.order(); ++i) ident[i] = i;
    return std::vector<std::vector<int>>(static_cast<std::size_t>(H.order()), ident);
}

FibreProduct fibre_product(const GroupHom& phi1, const GroupHom& phi2) {
    if (phi1.target.order() != phi2.target.order() ||
        phi1.target.flat_table() != phi2.target.flat_table())
        throw GroupError("fibre product needs a common target");
    const FiniteGroup& A = phi1.source;
    const FiniteGroup& B = phi2.source;
    std::vector<std::pair<int, int>> elems;
    std::map<std::pair<int, int>, int> index;
    for (int a = 0; a < A.order(); ++a)
        for (int b = 0; b < B.order(); ++b)
            if (phi1.apply(a) == phi2.apply(b)) {
                index[{a, b}] = static_cast<int>(elems.size());
                elems.push_back({a, b});
            }
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [a1, b1] = elems[x];
            auto [a2, b2] = elems[y];
            table[x][y] = index.at({A.mul(a1, a2), B.mul(b1, b2)});
        }
    FiniteGroup G(A.name() + "x_C" + B.name(), std::move(table), true);
    std::vector<int> left(static_cast<std::size_t>(n)), right(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        left[x] = elems[x].first;
        right[x] = elems[x].second;
    }
    GroupHom pl(G, A, std::move(left));
    GroupHom pr(G, B, std::move(right));
    return FibreProduct{std::move(G), std::move(elems), std::move(pl), std::move(pr)};
}

TypeMuResult type_mu_epi(const FiniteGroup& G, const std::vector<int>& N,
                         const std::vector<int>& H) {
    if (!G.is_subgroup(N) || !G.is_normal(N)) throw GroupError("type-mu needs a normal N");
    if (!G.is_subgroup(H)) throw GroupError("type-mu needs a subgroup H");
    if (!product_covers(G, N, H)) throw GroupError("type-mu needs N . H = G");

    SubgroupView nview = subgroup_as_group(G, N, "N");
    SubgroupView hview = subgroup_as_group(G, H, "H");
    std::map<int, int> n_index;
    for (std::size_t i = 0; i < nview.elems.size(); ++i)
        n_index[nview.elems[i]] = static_cast<int>(i);

    // H acts on N by conjugation inside G
    std::vector<std::vector<int>> action;
    for (int h_pos = 0; h_pos < hview.group.order(); ++h_pos) {
        int h = hview.elems[h_pos];
        std::vector<int> perm(nview.elems.size());
        for (std::size_t i = 0; i < nview.elems.size(); ++i) {
            int conj = G.mul(G.mul(h, nview.elems[i]), G.inv(h));
            perm[i] = n_index.at(conj);
        }
        action.push_back(std::move(perm));
    }
    SemidirectProduct sd = semidirect_product(nview.group, hview.group, action);

    std::vector<int> mu_img(static_cast<std::size_t>(sd.group.order()));
    for (int n_pos = 0; n_pos < nview.group.order(); ++n_pos)
        for (int h_pos = 0; h_pos < hview.group.order(); ++h_pos)
            mu_img[sd.pair_index(n_pos, h_pos)] = G.mul(nview.elems[n_pos], hview.elems[h_pos]);
    GroupHom mu(sd.group, G, std::move(mu_img));

    std::vector<int> kernel = mu.kernel();
    // formula: {(g^-1, g) : g in N cap H}
    std::set<int> nset(N.begin(), N.end());
    std::set<int> expected;
    for (std::size_t h_pos = 0; h_pos < hview.elems.size(); ++h_pos) {
        int g = hview.elems[h_pos];
        if (!nset.count(g)) continue;
        int ginv_pos = n_index.at(G.inv(g));
        expected.insert(sd.pair_index(ginv_pos, static_cast<int>(h_pos)));
    }
    std::set<int> got(kernel.begin(), kernel.end());
    TypeMuResult res{std::move(sd), std::move(mu), std::move(kernel), got == expected};
    return res;
}

namespace {

// words expressing every element through the chosen generators
std::vector<std::vector<int>> element_words(const FiniteGroup& G, const std::vector<int>& gens) {
    std::vector<std::vector<int>> words(static_cast<std::size_t>(G.order()));
    std::vector<char> known(static_cast<std::size_t>(G.order()), 0);
    std::vector<int> queue = {G.identity()};
    known[G.identity()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int g = queue[head];
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            int next = G.mul(g, gens[gi]);
            if (!known[next]) {
                known[next] = 1;
                words[next] = words[g];
                words[next].push_back(static_cast<int>(gi));
                queue.push_back(next);
            }
        }
    }
    for (char k : known)
        if (!k) throw GroupError("generators do not generate the group");
    return words;
}

std::optional<GroupHom> hom_from_gen_images(const FiniteGroup& G, const FiniteGroup& Q,
                                            const std::vector<int>& gens,
                                            const std::vector<std::vector<int>>& words,
                                            const std::vector<int>& images) {
    std::vector<int> full(static_cast<std::size_t>(G.order()));
    for (int g = 0; g < G.order(); ++g) {
        int acc = Q.identity();
        for (int gi : words[g]) acc = Q.mul(acc, images[gi]);
        full[g] = acc;
    }
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (full[G.mul(a, b)] != Q.mul(full[a], full[b])) return std::nullopt;
    (void)gens;
    return GroupHom(G, Q, std::move(full));
}

}   // namespace

std::vector<GroupHom> all_homs(const FiniteGroup& G, const FiniteGroup& Q) {
    std::vector<int> gens = G.generators();
    auto words = element_words(G, gens);
    std::vector<GroupHom> out;
    std::vector<int> images(gens.size(), 0);
    // pre-filter candidate images by element-order divisibility
    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        int ord = G.elem_order(gens[i]);
        for (int q = 0; q < Q.order(); ++q)
            if (ord % Q.elem_order(q) == 0) candidates[i].push_back(q);
    }
    std::vector<std::size_t> pick(gens.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][pick[i]];
        if (auto hom = hom_from_gen_images(G, Q, gens, words, images)) out.push_back(*hom);
        // advance the odometer
        std::size_t i = 0;
        while (i < pick.size()) {
            if (++pick[i] < candidates[i].size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) break;
    }
    return out;
}

std::vector<GroupHom> surjective_homs(const FiniteGroup& G, const FiniteGroup& Q) {
    std::vector<GroupHom> out;
    if (G.order() % Q.order() != 0) return out;
    for (auto& h : all_homs(G, Q))
        if (h.is_surjective()) out.push_back(std::move(h));
    return out;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& G1, const FiniteGroup& G2) {
    if (G1.order() != G2.order()) return std::nullopt;
    if (G1.order() > 200) throw GroupError("isomorphism search capped at order 200");
    std::vector<int> gens = G1.generators();
    auto words = element_words(G1, gens);
    // backtrack over images with matching element orders
    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        int ord = G1.elem_order(gens[i]);
        for (int q = 0; q < G2.order(); ++q)
            if (G2.elem_order(q) == ord) candidates[i].push_back(q);
        if (candidates[i].empty()) return std::nullopt;
    }
    std::vector<std::size_t> pick(gens.size(), 0);
    std::vector<int> images(gens.size());
    for (;;) {
        for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][pick[i]];
        if (auto hom = hom_from_gen_images(G1, G2, gens, words, images)) {
            if (hom->is_injective() && hom->is_surjective()) return hom->images;
        }
        std::size_t i = 0;
        while (i < pick.size()) {
            if (++pick[i] < candidates[i].size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) break;
    }
    return std::nullopt;
}

TripleProductReport triple_product_isos(const FiniteGroup& G0, const FiniteGroup& A,
                                        const FiniteGroup& H,
                                        const std::vector<std::vector<int>>& h_on_g0,
                                        const std::vector<std::vector<int>>& h_on_a) {
    TripleProductReport rep;
    long order = static_cast<long>(G0.order()) * A.order() * H.order();
    if (order > 200) throw GroupError("triple product comparison capped at order 200");
    rep.order = static_cast<int>(order);

    // (1) G0 x| (A x| H): A x| H acts on G0 through its H part
    SemidirectProduct ah = semidirect_product(A, H, h_on_a);
    std::vector<std::vector<int>> ah_on_g0;
    for (int x = 0; x < ah.group.order(); ++x) {
        int h = ah.projection.apply(x);
        ah_on_g0.push_back(h_on_g0[h]);
    }
    SemidirectProduct first = semidirect_product(G0, ah.group, ah_on_g0);

    // (2) (G0 x A) x| H acting diagonally
    SemidirectProduct g0a = semidirect_product(G0, A, trivial_action(G0, A));
    std::vector<std::vector<int>> h_diag;
    for (int h = 0; h < H.order(); ++h) {
        std::vector<int> perm(static_cast<std::size_t>(g0a.group.order()));
        for (int g = 0; g < G0.order(); ++g)
            for (int a = 0; a < A.order(); ++a)
                perm[g0a.pair_index(g, a)] = g0a.pair_index(h_on_g0[h][g], h_on_a[h][a]);
        h_diag.push_back(std::move(perm));
    }
    SemidirectProduct second = semidirect_product(g0a.group, H, h_diag);

    // (3) A x| (G0 x| H): G0 x| H acts on A through its H part
    SemidirectProduct g0h = semidirect_product(G0, H, h_on_g0);
    std::vector<std::vector<int>> g0h_on_a;
    for (int x = 0; x < g0h.group.order(); ++x) {
        int h = g0h.projection.apply(x);
        g0h_on_a.push_back(h_on_a[h]);
    }
    SemidirectProduct third = semidirect_product(A, g0h.group, g0h_on_a);

    if (!find_isomorphism(first.group, second.group)) {
        rep.ok = false;
        rep.detail = "first and second products are not isomorphic";
        return rep;
    }
    if (!find_isomorphism(second.group, third.group)) {
        rep.ok = false;
        rep.detail = "second and third products are not isomorphic";
        return rep;
    }
    if (!find_isomorphism(first.group, third.group)) {
        rep.ok = false;
        rep.detail = "first and third products are not isomorphic";
        return rep;
    }
    return rep;
}

}   // namespace idg
