#include "charsum/polynomial.hpp"

#include <sstream>

namespace charsum {
namespace poly {

Poly normalized(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly constant(Elem c) { return c == 0 ? Poly{} : Poly{c}; }

Poly identity() { return Poly{0, 1}; }

Poly add(const FieldCtx& ctx, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Elem x = i < a.size() ? a[i] : 0;
        const Elem y = i < b.size() ? b[i] : 0;
        out[i] = ctx.add(x, y);
    }
    return normalized(std::move(out));
}

Poly sub(const FieldCtx& ctx, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Elem x = i < a.size() ? a[i] : 0;
        const Elem y = i < b.size() ? b[i] : 0;
        out[i] = ctx.sub(x, y);
    }
    return normalized(std::move(out));
}

Poly mul(const FieldCtx& ctx, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = ctx.add(out[i + j], ctx.mul(a[i], b[j]));
        }
    }
    return normalized(std::move(out));
}

Poly scale(const FieldCtx& ctx, const Poly& a, Elem c) {
    if (c == 0) return {};
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = ctx.mul(a[i], c);
    return normalized(std::move(out));
}

std::pair<Poly, Poly> divmod(const FieldCtx& ctx, Poly a, const Poly& b) {
    if (b.empty()) throw ZeroDenominatorError("polynomial division by zero");
    if (a.size() < b.size()) return {{}, std::move(a)};
    const Elem lead_inv = ctx.inv(b.back());
    Poly quot(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size()) {
        const Elem c = ctx.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - b.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = ctx.sub(a[shift + i], ctx.mul(c, b[i]));
        }
        a.pop_back();
        a = normalized(std::move(a));
        if (a.empty()) break;
    }
    return {normalized(std::move(quot)), std::move(a)};
}

Poly gcd(const FieldCtx& ctx, Poly a, Poly b) {
    a = normalized(std::move(a));
    b = normalized(std::move(b));
    while (!b.empty()) {
        Poly rem = divmod(ctx, std::move(a), b).second;
        a = std::move(b);
        b = std::move(rem);
    }
    return monic(ctx, std::move(a));
}

Poly monic(const FieldCtx& ctx, Poly f) {
    f = normalized(std::move(f));
    if (f.empty() || f.back() == ctx.one()) return f;
    return scale(ctx, f, ctx.inv(f.back()));
}

Elem eval(const FieldCtx& ctx, const Poly& f, Elem x) {
    Elem acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), f[i]);
    return acc;
}

bool equal(const Poly& a, const Poly& b) { return a == b; }

Poly frobenius_power(const FieldCtx& ctx, const Poly& f) {
    if (f.empty()) return {};
    Poly out((f.size() - 1) * ctx.p() + 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] != 0) out[i * ctx.p()] = ctx.pow(f[i], ctx.p());
    }
    return normalized(std::move(out));
}

std::string to_string(const Poly& f) {
    if (f.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << ',';
        os << f[i];
    }
    return os.str();
}

Poly parse(const FieldCtx& ctx, const std::string& text) {
    Poly out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(token, &pos);
        } catch (const std::exception&) {
            throw ValidationError("bad polynomial coefficient: '" + token + "'");
        }
        while (pos < token.size() && (token[pos] == ' ' || token[pos] == '\t')) ++pos;
        if (pos != token.size()) throw ValidationError("bad polynomial coefficient: '" + token + "'");
        if (!ctx.valid(v)) throw ValidationError("coefficient " + std::to_string(v) + " out of range");
        out.push_back(static_cast<Elem>(v));
    }
    if (out.empty()) throw ValidationError("empty polynomial");
    return normalized(std::move(out));
}

}  // namespace poly
}  // namespace charsum
