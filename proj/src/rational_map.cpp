#include "charsum/rational_map.hpp"

#include <algorithm>

namespace charsum {
namespace {

bool is_inversion(const RationalMap& f) {
    return f.num == Poly{1} && f.den == Poly{0, 1};
}

bool is_squaring(const RationalMap& f) {
    return f.num == Poly{0, 0, 1} && f.den == Poly{1};
}

// Reconstruct a(g^p - g) + bX + c and compare against the candidate.
bool witness_matches(const FieldCtx& ctx, const Poly& f, const LinearityWitness& w) {
    Poly ga = poly::sub(ctx, poly::frobenius_power(ctx, w.g), w.g);
    Poly lhs = poly::scale(ctx, ga, w.a);
    Poly linear;
    if (w.b != 0) linear = Poly{w.c, w.b};
    else linear = poly::constant(w.c);
    lhs = poly::add(ctx, lhs, linear);
    return lhs == f;
}

// Bounded syntactic search for f = a(g^p - g) + bX + c with polynomial g of
// degree <= 2.  Polynomial f only; rational g is out of reach by design.
std::optional<LinearityWitness> find_linearity_witness(const FieldCtx& ctx, const Poly& f) {
    const std::uint64_t p = ctx.p();
    const unsigned d = f.empty() ? 0 : static_cast<unsigned>(poly::deg(f));

    // degree <= 1: a = 0 and the affine part alone matches
    if (poly::deg(f) <= 1) {
        LinearityWitness w;
        w.a = 0;
        w.b = f.size() > 1 ? f[1] : 0;
        w.c = f.size() > 0 ? f[0] : 0;
        w.g = Poly{};
        return w;
    }

    const auto coeff = [&](unsigned i) -> Elem { return i < f.size() ? f[i] : 0; };
    const auto pth_root = [&](Elem v) -> Elem {
        // x -> x^p permutes F_q; its inverse is x -> x^{p^{r-1}}
        Elem root = v;
        for (unsigned i = 0; i + 1 < ctx.r(); ++i) root = ctx.pow(root, p);
        return root;
    };

    // shape a(g^p - g) + bX + c with deg g = 1, g = X: monomials X^p, X, 1
    if (d == p) {
        bool shape_ok = true;
        for (unsigned i = 0; i < f.size(); ++i) {
            if (f[i] != 0 && i != 0 && i != 1 && i != d) { shape_ok = false; break; }
        }
        if (shape_ok) {
            LinearityWitness w;
            w.a = coeff(d);
            w.g = poly::identity();
            w.b = ctx.add(coeff(1), w.a);  // X coefficient of a(X^p - X) is -a
            w.c = coeff(0);
            if (witness_matches(ctx, f, w)) return w;
        }
    }

    // shape with deg g = 2
    if (d == 2 * p && p == 2) {
        // char 2: g = X^2 + g1 X gives X^4 + (g1^2 + 1)X^2 + g1 X; always solvable
        bool shape_ok = true;
        for (unsigned i = 0; i < f.size(); ++i) {
            if (f[i] != 0 && i != 0 && i != 1 && i != 2 && i != 4) { shape_ok = false; break; }
        }
        if (shape_ok) {
            LinearityWitness w;
            w.a = coeff(4);
            const Elem target = ctx.add(ctx.mul(coeff(2), ctx.inv(w.a)), 1);  // g1^2
            const Elem g1 = pth_root(target);
            w.g = poly::normalized(Poly{0, g1, 1});
            w.b = ctx.add(coeff(1), ctx.mul(w.a, g1));
            w.c = coeff(0);
            if (witness_matches(ctx, f, w)) return w;
        }
    } else if (d == 2 * p) {
        // odd p: monomials X^{2p}, X^p, X^2, X, 1 with coupled leading pair
        bool shape_ok = true;
        for (unsigned i = 0; i < f.size(); ++i) {
            if (f[i] != 0 && i != 0 && i != 1 && i != 2 && i != p && i != 2 * p) {
                shape_ok = false;
                break;
            }
        }
        const Elem f2 = coeff(2);
        if (shape_ok && f2 != 0) {
            // a g2^p = f_{2p} and -a g2 = f_2; scan g2 over F_q^*
            for (Elem g2 = 1; g2 < ctx.q(); ++g2) {
                const Elem a = ctx.neg(ctx.mul(f2, ctx.inv(g2)));
                if (ctx.mul(a, ctx.pow(g2, p)) != coeff(2 * p)) continue;
                LinearityWitness w;
                w.a = a;
                const Elem g1 = pth_root(ctx.mul(coeff(p), ctx.inv(a)));
                w.g = poly::normalized(Poly{0, g1, g2});
                w.b = ctx.add(coeff(1), ctx.mul(a, g1));
                w.c = coeff(0);
                if (witness_matches(ctx, f, w)) return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

RationalMap reduce(const FieldCtx& ctx, Poly num, Poly den) {
    num = poly::normalized(std::move(num));
    den = poly::normalized(std::move(den));
    if (den.empty()) throw ZeroDenominatorError("denominator is the zero polynomial");
    if (num.empty()) den = Poly{1};  // the zero map
    if (!num.empty()) {
        Poly g = poly::gcd(ctx, num, den);
        if (poly::deg(g) > 0) {
            num = poly::divmod(ctx, std::move(num), g).first;
            den = poly::divmod(ctx, std::move(den), g).first;
        }
    }
    // monic denominator makes equality structural
    const Elem lead_inv = ctx.inv(den.back());
    if (lead_inv != ctx.one()) {
        num = poly::scale(ctx, num, lead_inv);
        den = poly::scale(ctx, den, lead_inv);
    }
    RationalMap f;
    f.k = static_cast<unsigned>(std::max(poly::deg(num), poly::deg(den)));
    f.num = std::move(num);
    f.den = std::move(den);
    return f;
}

std::optional<Elem> eval_map(const FieldCtx& ctx, const RationalMap& f, Elem x) {
    const Elem d = poly::eval(ctx, f.den, x);
    if (d == 0) return std::nullopt;
    const Elem n = poly::eval(ctx, f.num, x);
    return ctx.mul(n, ctx.inv(d));
}

bool maps_into(const FieldCtx& ctx, const RationalMap& f, const Subset& D) {
    for (Elem d : D) {
        const auto y = eval_map(ctx, f, d);
        if (!y || !D.contains(*y)) return false;
    }
    return true;
}

Subset image(const FieldCtx& ctx, const RationalMap& f, const Subset& T) {
    std::vector<Elem> out;
    out.reserve(T.size());
    for (Elem t : T) {
        const auto y = eval_map(ctx, f, t);
        if (!y) throw PoleInSetError("pole at element " + std::to_string(t));
        out.push_back(*y);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Subset::from_sorted(std::move(out));
}

NonlinearityStatus nonlinearity_status(const FieldCtx& ctx, const RationalMap& f) {
    NonlinearityStatus st;
    if (is_inversion(f) || (is_squaring(f) && ctx.p() % 2 == 1)) {
        st.kind = NonlinearityStatus::Kind::Whitelisted;
        return st;
    }
    if (f.den == Poly{1}) {
        if (auto w = find_linearity_witness(ctx, f.num)) {
            st.kind = NonlinearityStatus::Kind::Violates;
            st.witness = std::move(*w);
            return st;
        }
    }
    st.kind = NonlinearityStatus::Kind::Unknown;
    return st;
}

RationalMap parse_rational_map(const FieldCtx& ctx, const std::string& text) {
    const auto slash = text.find('/');
    std::string num_part = text.substr(0, slash);
    std::string den_part = slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
    const auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t");
        const auto b = s.find_last_not_of(" \t");
        if (a == std::string::npos) return std::string();
        return s.substr(a, b - a + 1);
    };
    num_part = trim(num_part);
    den_part = trim(den_part);
    if (num_part.empty() || den_part.empty()) throw ValidationError("expected 'num / den'");
    return reduce(ctx, poly::parse(ctx, num_part), poly::parse(ctx, den_part));
}

std::string to_string(const RationalMap& f) {
    return poly::to_string(f.num) + " / " + poly::to_string(f.den);
}

}  // namespace charsum
