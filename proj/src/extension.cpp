#include "idg/extension.hpp"
#include "idg/parser.hpp"

#include <sstream>

namespace idg {

namespace {

std::uint64_t mult_order_mod(std::uint64_t p, std::uint64_t m) {
    std::uint64_t r = 1, v = p % m;
    while (v != 1) {
        v = (v * p) % m;
        ++r;
        if (r > m) throw FieldError("no multiplicative order (gcd(m,p) != 1)");
    }
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}   // namespace

CyclicExtension::CyclicExtension(ExtKind kind, FiniteField K, std::uint64_t galois_order,
                                 FieldElem zeta, std::size_t N)
    : kind_(kind), K_(std::move(K)), galois_order_(galois_order), zeta_(std::move(zeta)), N_(N) {
    build_theta();
}

CyclicExtension CyclicExtension::kummer(const FiniteField& K, std::uint64_t m,
                                        std::size_t order_bound) {
    std::uint64_t p = K.characteristic();
    if (m < 2) throw FieldError("kummer order must be >= 2");
    if (gcd_u64(m, p) != 1) throw FieldError("kummer order must be prime to the characteristic");
    std::uint64_t q = K.order();
    if ((q - 1) % m != 0) {
        std::uint64_t r = mult_order_mod(p, m);
        throw FieldError("no primitive root of unity of order " + std::to_string(m) + " in " +
                         K.designator() + "; the smallest field containing one is GF(" +
                         std::to_string(p) + "^" + std::to_string(r) + ")");
    }
    FieldElem zeta = primitive_root_of_unity(K, m);
    return CyclicExtension(ExtKind::Kummer, K, m, zeta, order_bound);
}

CyclicExtension CyclicExtension::artin_schreier(const FiniteField& K, std::size_t order_bound) {
    return CyclicExtension(ExtKind::ArtinSchreier, K, K.characteristic(), K.zero(), order_bound);
}

std::string CyclicExtension::designator() const {
    if (kind_ == ExtKind::Kummer) {
        std::ostringstream os;
        os << "kummer(m=" << galois_order_ << ")";
        return os.str();
    }
    return "artin-schreier";
}

RatFunc CyclicExtension::t_in_s() const {
    RatFunc s = s_elem();
    if (kind_ == ExtKind::Kummer) return s.pow(static_cast<std::int64_t>(galois_order_));
    return s.pow(static_cast<std::int64_t>(K_.characteristic())) - s;
}

RatFunc CyclicExtension::to_ext(const RatFunc& f) const {
    if (f.var() == 's') return f;
    return f.substitute(t_in_s());
}

void CyclicExtension::build_theta() {
    RatFunc s = s_elem();
    RatFunc one = RatFunc::one(K_, 's');
    RatFunc zero = RatFunc::zero(K_, 's');
    if (kind_ == ExtKind::ArtinSchreier) {
        // theta(s) = s - sum of T^(p^i) over p^i <= N
        std::vector<RatFunc> c(N_ + 1, zero);
        c[0] = s;
        std::uint64_t p = K_.characteristic();
        for (std::uint64_t pi = 1; pi <= N_; pi *= p) c[pi] = -one;
        theta_s_ = TruncSeries(std::move(c), N_);
        TruncSeries lhs = theta_s_.pow(p) - theta_s_;
        std::vector<RatFunc> rel(N_ + 1, zero);
        rel[0] = t_in_s();
        if (N_ >= 1) rel[1] = one;
        if (lhs != TruncSeries(rel, N_))
            throw ArithmeticError("artin-schreier taylor image fails its defining relation");
        return;
    }
    // Kummer: theta(s) = s * g with g^m = 1 + T/t, g(0) = 1, solved by
    // Hensel lifting; each coefficient comes out of a division by m
    std::uint64_t m = galois_order_;
    RatFunc t = t_in_s();
    RatFunc t_inv = t.inverse();
    FieldElem m_inv = K_.from_int(static_cast<std::int64_t>(m % K_.characteristic())).inverse();
    std::vector<RatFunc> g(N_ + 1, zero);
    g[0] = one;
    for (std::size_t k = 1; k <= N_; ++k) {
        TruncSeries partial(std::vector<RatFunc>(g.begin(), g.begin() + k + 1), k);
        TruncSeries powed = partial.pow(m);
        RatFunc rhs = (k == 1) ? t_inv : zero;
        // coefficient k of (partial + g_k T^k)^m is powed_k + m g_k
        g[k] = (rhs - powed.coeff(k)) * RatFunc::constant(m_inv, 's');
    }
    TruncSeries gs(std::move(g), N_);
    theta_s_ = TruncSeries::constant(s, N_) * gs;
    TruncSeries lhs = theta_s_.pow(m);
    std::vector<RatFunc> rel(N_ + 1, zero);
    rel[0] = t;
    if (N_ >= 1) rel[1] = one;
    if (lhs != TruncSeries(rel, N_))
        throw ArithmeticError("kummer taylor image fails its defining relation");
}

RatFunc CyclicExtension::galois_apply(std::int64_t j, const RatFunc& x) const {
    if (x.var() != 's') return x;   // base elements are fixed
    std::int64_t ord = static_cast<std::int64_t>(galois_order_);
    std::int64_t jj = ((j % ord) + ord) % ord;
    if (jj == 0) return x;
    RatFunc s = s_elem();
    RatFunc image;
    if (kind_ == ExtKind::Kummer) {
        image = RatFunc::constant(zeta_.pow(static_cast<std::uint64_t>(jj)), 's') * s;
    } else {
        image = s + RatFunc::constant(K_.from_int(jj), 's');
    }
    return x.substitute(image);
}

bool CyclicExtension::fixed_by_galois(const RatFunc& x) const {
    return galois_apply(1, x) == x;
}

std::vector<RatFunc> CyclicExtension::derive_upto(const RatFunc& x, std::size_t k) const {
    if (k > N_)
        throw TruncationError("derivative order " + std::to_string(k) +
                              " exceeds extension bound " + std::to_string(N_));
    RatFunc xs = to_ext(x);
    // theta(x) = theta(num) / theta(den), polynomials evaluated at theta(s)
    TruncSeries th = theta_s_.truncate(k);
    auto eval_poly = [&](const Poly& p) {
        TruncSeries acc = TruncSeries::zero(K_, 's', k);
        for (std::size_t i = p.coeffs().size(); i-- > 0;) {
            acc = acc * th + TruncSeries::constant(RatFunc::constant(p.coeff(i), 's'), k);
        }
        return acc;
    };
    TruncSeries num = eval_poly(xs.num());
    if (xs.is_poly()) return num.coeffs();
    TruncSeries den = eval_poly(xs.den());
    return (num / den).coeffs();
}

RatFunc CyclicExtension::derive(const RatFunc& x, std::size_t k) const {
    return derive_upto(x, k).at(k);
}

bool CyclicExtension::level_member(const RatFunc& x, int l) const {
    if (l <= 0) return true;
    std::uint64_t p = K_.characteristic();
    std::uint64_t top = 1;
    for (int j = 1; j < l; ++j) top *= p;
    if (top > N_) throw TruncationError("level check needs order p^(l-1) <= extension bound");
    std::vector<RatFunc> chain = derive_upto(x, top);
    std::uint64_t pj = 1;
    for (int j = 0; j < l; ++j) {
        if (!chain.at(pj).is_zero()) return false;
        pj *= p;
    }
    return true;
}

RatFunc CyclicExtension::to_base(const RatFunc& x) const {
    if (x.var() != 's') return x;
    if (!fixed_by_galois(x)) throw ArithmeticError("element is not Galois-invariant");
    // clear the denominator into an invariant one with the other orbit factors
    RatFunc denom = RatFunc::from_poly(x.den(), 's');
    RatFunc num = RatFunc::from_poly(x.num(), 's');
    RatFunc extra = RatFunc::one(K_, 's');
    for (std::uint64_t j = 1; j < galois_order_; ++j)
        extra = extra * galois_apply(static_cast<std::int64_t>(j), denom);
    RatFunc inv_num = num * extra;
    RatFunc inv_den = denom * extra;
    if (!inv_num.is_poly() || !inv_den.is_poly())
        throw ArithmeticError("invariant clearing produced a non-polynomial");

    auto rewrite_poly = [&](const Poly& a) {
        std::uint64_t p = K_.characteristic();
        if (kind_ == ExtKind::Kummer) {
            std::uint64_t m = galois_order_;
            std::vector<FieldElem> out;
            for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
                const FieldElem& c = a.coeffs()[i];
                if (c.is_zero()) continue;
                if (i % m != 0)
                    throw ArithmeticError("invariant polynomial has a non-multiple exponent");
                std::size_t k = i / m;
                if (out.size() <= k) out.resize(k + 1, K_.zero());
                out[k] = c;
            }
            return Poly(K_, std::move(out));
        }
        // Artin-Schreier: iterated division by u = s^p - s; the remainders
        // of an invariant polynomial are constants
        Poly u = Poly::variable(K_).pow(p) - Poly::variable(K_);
        Poly cur = a;
        std::vector<FieldElem> out;
        while (!cur.is_zero()) {
            auto [q, r] = cur.divmod(u);
            if (!r.is_constant())
                throw ArithmeticError("invariant polynomial has a non-constant remainder");
            out.push_back(r.is_zero() ? K_.zero() : r.coeff(0));
            cur = q;
        }
        return Poly(K_, std::move(out));
    };

    RatFunc result(rewrite_poly(inv_num.num()), rewrite_poly(inv_den.num()), 't');
    if (to_ext(result) != x) throw ArithmeticError("base rewrite failed its round-trip check");
    return result;
}

CyclicExtension parse_extension(const std::string& text, const FiniteField& K,
                                std::size_t order_bound) {
    if (text == "artin-schreier") return CyclicExtension::artin_schreier(K, order_bound);
    const std::string prefix = "kummer(m=";
    if (text.rfind(prefix, 0) == 0 && text.back() == ')') {
        std::string inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
        std::uint64_t m = 0;
        if (inner.empty()) throw ParseError("bad kummer order", 0);
        for (char c : inner) {
            if (c < '0' || c > '9') throw ParseError("bad kummer order", 0);
            m = m * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return CyclicExtension::kummer(K, m, order_bound);
    }
    throw ParseError("unknown extension designator '" + text + "'", 0);
}

}   // namespace idg
