#include "idg/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace idg {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table, bool trusted)
    : name_(std::move(name)), n_(static_cast<int>(table.size())) {
    if (n_ == 0) throw GroupError("empty multiplication table");
    table_.resize(static_cast<std::size_t>(n_) * n_);
    for (int a = 0; a < n_; ++a) {
        if (static_cast<int>(table[a].size()) != n_) throw GroupError("table is not square");
        for (int b = 0; b < n_; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n_) throw GroupError("table entry out of range");
            table_[static_cast<std::size_t>(a) * n_ + b] = v;
        }
    }
    finish_init(trusted);
}

void FiniteGroup::finish_init(bool trusted) {
    // identity
    id_ = -1;
    for (int e = 0; e < n_; ++e) {
        bool ok = true;
        for (int a = 0; a < n_ && ok; ++a)
            if (mul(e, a) != a || mul(a, e) != a) ok = false;
        if (ok) {
            id_ = e;
            break;
        }
    }
    if (id_ < 0) throw GroupError("no identity element");
    // inverses
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == id_ && mul(b, a) == id_) {
                inv_[a] = b;
                break;
            }
        if (inv_[a] < 0) throw GroupError("element without inverse");
    }
    // associativity, exhaustive up to order 64
    if (!trusted) {
        if (n_ > 64) throw GroupError("tables above order 64 must come from trusted constructions");
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw GroupError("table is not associative");
    }
}

FiniteGroup FiniteGroup::from_permutations(std::string name,
                                           const std::vector<std::vector<int>>& gens) {
    if (gens.empty()) throw GroupError("need at least one generator");
    std::size_t degree = gens[0].size();
    for (const auto& g : gens)
        if (g.size() != degree) throw GroupError("generator degree mismatch");
    std::vector<int> identity(degree);
    for (std::size_t i = 0; i < degree; ++i) identity[i] = static_cast<int>(i);

    auto compose = [](const std::vector<int>& f, const std::vector<int>& g) {
        std::vector<int> r(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[static_cast<std::size_t>(g[i])];
        return r;
    };

    std::vector<std::vector<int>> elems = {identity};
    std::map<std::vector<int>, int> index = {{identity, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            std::vector<int> prod = compose(elems[head], g);
            if (!index.count(prod)) {
                index[prod] = static_cast<int>(elems.size());
                elems.push_back(prod);
                if (elems.size() > 2000) throw GroupError("permutation closure too large");
            }
        }
    }
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
    return FiniteGroup(std::move(name), std::move(table), true);
}

int FiniteGroup::elem_order(int a) const {
    int x = a, ord = 1;
    while (x != id_) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::subgroup_closure(std::vector<int> seed) const {
    std::set<int> members(seed.begin(), seed.end());
    members.insert(id_);
    std::vector<int> frontier(members.begin(), members.end());
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier) {
            for (int b : members) {
                for (int c : {mul(a, b), mul(b, a), inv(a)}) {
                    if (!members.count(c)) {
                        members.insert(c);
                        next.push_back(c);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return {members.begin(), members.end()};
}

const std::vector<std::vector<int>>& FiniteGroup::subgroups() const {
    if (!subgroup_cache_.empty()) return subgroup_cache_;
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue = {{id_}};
    seen.insert({id_});
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<int> current = queue[head];
        std::set<int> in_current(current.begin(), current.end());
        for (int g = 0; g < n_; ++g) {
            if (in_current.count(g)) continue;
            std::vector<int> seed = current;
            seed.push_back(g);
            std::vector<int> bigger = subgroup_closure(std::move(seed));
            if (!seen.count(bigger)) {
                seen.insert(bigger);
                queue.push_back(std::move(bigger));
            }
        }
    }
    subgroup_cache_.assign(seen.begin(), seen.end());
    return subgroup_cache_;
}

std::vector<std::vector<int>> FiniteGroup::maximal_subgroups() const {
    const auto& subs = subgroups();
    std::vector<std::vector<int>> maximal;
    for (const auto& H : subs) {
        if (static_cast<int>(H.size()) == n_) continue;
        bool is_max = true;
        for (const auto& K : subs) {
            if (static_cast<int>(K.size()) == n_ || K.size() <= H.size()) continue;
            if (std::includes(K.begin(), K.end(), H.begin(), H.end())) {
                is_max = false;
                break;
            }
        }
        if (is_max) maximal.push_back(H);
    }
    return maximal;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
    std::set<int> s(elems.begin(), elems.end());
    if (!s.count(id_)) return false;
    for (int a : s)
        for (int b : s)
            if (!s.count(mul(a, b))) return false;
    for (int a : s)
        if (!s.count(inv(a))) return false;
    return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& elems) const {
    std::set<int> s(elems.begin(), elems.end());
    for (int g = 0; g < n_; ++g)
        for (int a : s)
            if (!s.count(mul(mul(g, a), inv(g)))) return false;
    return true;
}

std::vector<int> FiniteGroup::generators() const {
    std::vector<int> gens;
    std::vector<int> current = {id_};
    while (static_cast<int>(current.size()) < n_) {
        int best = -1;
        std::size_t best_size = current.size();
        std::set<int> in_current(current.begin(), current.end());
        for (int g = 0; g < n_; ++g) {
            if (in_current.count(g)) continue;
            std::vector<int> seed = gens;
            seed.push_back(g);
            std::size_t size = subgroup_closure(seed).size();
            if (size > best_size) {
                best_size = size;
                best = g;
                if (static_cast<int>(size) == n_) break;
            }
        }
        if (best < 0) throw GroupError("generator search failed");
        gens.push_back(best);
        current = subgroup_closure(gens);
    }
    if (gens.empty()) gens.push_back(id_);
    return gens;
}

GroupHom::GroupHom(FiniteGroup src, FiniteGroup dst, std::vector<int> img)
    : source(std::move(src)), target(std::move(dst)), images(std::move(img)) {
    if (static_cast<int>(images.size()) != source.order())
        throw GroupError("homomorphism needs one image per element");
    for (int v : images)
        if (v < 0 || v >= target.order()) throw GroupError("image out of range");
    for (int a = 0; a < source.order(); ++a)
        for (int b = 0; b < source.order(); ++b)
            if (images[source.mul(a, b)] != target.mul(images[a], images[b]))
                throw GroupError("map is not a homomorphism");
}

bool GroupHom::is_surjective() const {
    std::set<int> img(images.begin(), images.end());
    return static_cast<int>(img.size()) == target.order();
}

bool GroupHom::is_injective() const {
    std::set<int> img(images.begin(), images.end());
    return img.size() == images.size();
}

std::vector<int> GroupHom::kernel() const {
    std::vector<int> ker;
    for (int a = 0; a < source.order(); ++a)
        if (images[a] == target.identity()) ker.push_back(a);
    return ker;
}

std::vector<int> GroupHom::image_set() const {
    std::set<int> img(images.begin(), images.end());
    return {img.begin(), img.end()};
}

std::pair<FiniteGroup, GroupHom> quotient_group(const FiniteGroup& G, const std::vector<int>& N) {
    if (!G.is_subgroup(N) || !G.is_normal(N)) throw GroupError("quotient needs a normal subgroup");
    std::set<int> nset(N.begin(), N.end());
    // canonical representative = least element of the coset
    std::vector<int> rep(G.order(), -1);
    std::vector<int> reps;
    for (int g = 0; g < G.order(); ++g) {
        if (rep[g] >= 0) continue;
        std::vector<int> coset;
        for (int n : nset) coset.push_back(G.mul(g, n));
        int least = *std::min_element(coset.begin(), coset.end());
        for (int c : coset) rep[c] = least;
        reps.push_back(least);
    }
    std::sort(reps.begin(), reps.end());
    std::map<int, int> index;
    for (std::size_t i = 0; i < reps.size(); ++i) index[reps[i]] = static_cast<int>(i);
    int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) table[a][b] = index.at(rep[G.mul(reps[a], reps[b])]);
    FiniteGroup Q(G.name() + "/" + std::to_string(nset.size()), std::move(table), true);
    std::vector<int> images(G.order());
    for (int g = 0; g < G.order(); ++g) images[g] = index.at(rep[g]);
    GroupHom proj(G, Q, std::move(images));
    return {Q, proj};
}

std::vector<int> parse_cycles(const std::string& text, int degree) {
    std::vector<int> perm(degree);
    for (int i = 0; i < degree; ++i) perm[i] = i;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw GroupError("expected '(' in cycle notation");
        ++pos;
        std::vector<int> cycle;
        while (pos < text.size() && text[pos] != ')') {
            while (pos < text.size() && text[pos] == ' ') ++pos;
            if (pos < text.size() && text[pos] == ')') break;
            int v = 0;
            bool got = false;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                v = v * 10 + (text[pos] - '0');
                got = true;
                ++pos;
            }
            if (!got) throw GroupError("expected a point in cycle notation");
            if (v >= degree) throw GroupError("cycle point exceeds degree");
            cycle.push_back(v);
        }
        if (pos >= text.size()) throw GroupError("unterminated cycle");
        ++pos;   // ')'
        for (std::size_t i = 0; i < cycle.size(); ++i)
            perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    return perm;
}

namespace {

FiniteGroup make_cyclic(int n) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return FiniteGroup("Z" + std::to_string(n), std::move(table), true);
}

FiniteGroup make_dihedral(int n) {
    // elements r^i f^j with index i + n*j; r^n = f^2 = e, f r f = r^-1
    int size = 2 * n;
    auto idx = [n](int i, int j) { return i + n * j; };
    std::vector<std::vector<int>> table(size, std::vector<int>(size));
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // (r^i1 f^j1)(r^i2 f^j2) = r^(i1 + s i2) f^(j1+j2), s = (-1)^j1
                    int i = j1 == 0 ? (i1 + i2) % n : ((i1 - i2) % n + n) % n;
                    int j = (j1 + j2) % 2;
                    table[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
                }
    return FiniteGroup("D" + std::to_string(n), std::move(table), true);
}

FiniteGroup make_q8() {
    // 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k
    auto neg = [](int x) { return x ^ 1; };
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    // base products on {1, i, j, k} with sign tracking
    int prod[4][4];      // unit indices
    int sign[4][4];      // +1 / -1
    const int E = 0, I = 1, J = 2, Kq = 3;
    auto set = [&](int a, int b, int r, int s) {
        prod[a][b] = r;
        sign[a][b] = s;
    };
    set(E, E, E, 1); set(E, I, I, 1); set(E, J, J, 1); set(E, Kq, Kq, 1);
    set(I, E, I, 1); set(I, I, E, -1); set(I, J, Kq, 1); set(I, Kq, J, -1);
    set(J, E, J, 1); set(J, I, Kq, -1); set(J, J, E, -1); set(J, Kq, I, 1);
    set(Kq, E, Kq, 1); set(Kq, I, J, 1); set(Kq, J, I, -1); set(Kq, Kq, E, -1);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, ub = b / 2;
            int s = ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1) * sign[ua][ub];
            int r = prod[ua][ub] * 2;
            table[a][b] = s > 0 ? r : neg(r);
        }
    return FiniteGroup("Q8", std::move(table), true);
}

FiniteGroup make_v4() {
    std::vector<std::vector<int>> table(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) table[a][b] = a ^ b;
    return FiniteGroup("V4", std::move(table), true);
}

FiniteGroup make_a4() {
    return FiniteGroup::from_permutations(
        "A4", {parse_cycles("(0 1 2)", 4), parse_cycles("(0 1)(2 3)", 4)});
}

}   // namespace

FiniteGroup catalogue_group(const std::string& name) {
    if (name == "V4") return make_v4();
    if (name == "Q8") return make_q8();
    if (name == "S3") {
        FiniteGroup g = make_dihedral(3);
        return FiniteGroup("S3", [&] {
            std::vector<std::vector<int>> t(g.order(), std::vector<int>(g.order()));
            for (int a = 0; a < g.order(); ++a)
                for (int b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
            return t;
        }(), true);
    }
    if (name == "A4") return make_a4();
    if (name.size() > 1 && name[0] == 'Z') {
        int n = std::stoi(name.substr(1));
        if (n < 1 || n > 1000) throw GroupError("cyclic order out of range");
        return make_cyclic(n);
    }
    if (name.size() > 1 && name[0] == 'D') {
        int n = std::stoi(name.substr(1));
        if (n < 3 || n > 50) throw GroupError("dihedral order out of range");
        return make_dihedral(n);
    }
    throw GroupError("unknown catalogue group '" + name + "'");
}

std::vector<std::string> catalogue_names_upto(int max_order) {
    std::vector<std::string> names;
    for (int n = 1; n <= max_order; ++n) names.push_back("Z" + std::to_string(n));
    for (int n = 3; 2 * n <= max_order; ++n) names.push_back("D" + std::to_string(n));
    if (max_order >= 4) names.push_back("V4");
    if (max_order >= 8) names.push_back("Q8");
    if (max_order >= 12) names.push_back("A4");
    return names;
}

}   // namespace idg
