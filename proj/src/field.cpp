#include "charsum/field.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "charsum/u128.hpp"

namespace charsum {
namespace {

constexpr std::uint64_t kMaxQ = 1ULL << 40;
constexpr unsigned kMaxDegree = 24;
constexpr std::uint64_t kTraceTableLimit = 1ULL << 21;
constexpr std::uint64_t kExhaustiveLimit = 1ULL << 26;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) acc = mul_mod(acc, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return acc;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on (p, a); p prime, a != 0 mod p
    std::int64_t t0 = 0, t1 = 1;
    std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        const std::int64_t r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        const std::int64_t t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (t0 < 0) t0 += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t0);
}

// Dense polynomials over F_p: coefficient vectors, constant term first,
// no trailing zeros (empty = zero polynomial).
using PolyP = std::vector<std::uint64_t>;

void strip(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const PolyP& f) { return static_cast<int>(f.size()) - 1; }

PolyP mul_poly(const PolyP& a, const PolyP& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], p), p);
        }
    }
    strip(out);
    return out;
}

// Remainder of a modulo monic m.
PolyP mod_poly(PolyP a, const PolyP& m, std::uint64_t p) {
    const int dm = degree(m);
    while (degree(a) >= dm) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - m.size();
        if (c != 0) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                a[shift + i] = sub_mod(a[shift + i], mul_mod(c, m[i], p), p);
            }
        }
        a.pop_back();
        strip(a);
    }
    return a;
}

// Quotient and remainder; divisor need not be monic.
std::pair<PolyP, PolyP> divmod_poly(PolyP a, const PolyP& b, std::uint64_t p) {
    const int db = degree(b);
    const std::uint64_t lead_inv = inv_mod(b.back(), p);
    if (degree(a) < db) return {{}, std::move(a)};
    PolyP quot(a.size() - b.size() + 1, 0);
    while (degree(a) >= db) {
        const std::uint64_t c = mul_mod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - b.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = sub_mod(a[shift + i], mul_mod(c, b[i], p), p);
        }
        a.pop_back();
        strip(a);
    }
    strip(quot);
    return {std::move(quot), std::move(a)};
}

PolyP gcd_poly(PolyP a, PolyP b, std::uint64_t p) {
    while (!b.empty()) {
        PolyP rem = divmod_poly(std::move(a), b, p).second;
        a = std::move(b);
        b = std::move(rem);
    }
    return a;
}

PolyP powmod_poly(PolyP base, std::uint64_t e, const PolyP& m, std::uint64_t p) {
    PolyP acc{1 % p};
    strip(acc);
    base = mod_poly(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) acc = mod_poly(mul_poly(acc, base, p), m, p);
        base = mod_poly(mul_poly(base, base, p), m, p);
        e >>= 1;
    }
    return acc;
}

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// f monic of degree n >= 1 over F_p: irreducible iff X^{p^n} = X (mod f) and
// gcd(X^{p^{n/t}} - X, f) = 1 for every prime t | n.
bool is_irreducible(const PolyP& f, std::uint64_t p) {
    const unsigned n = static_cast<unsigned>(degree(f));
    if (n == 1) return true;
    const PolyP x_residue = mod_poly(PolyP{0, 1}, f, p);
    std::vector<PolyP> frob(n + 1);  // frob[k] = X^{p^k} mod f
    frob[0] = x_residue;
    for (unsigned k = 1; k <= n; ++k) frob[k] = powmod_poly(frob[k - 1], p, f, p);
    if (frob[n] != x_residue) return false;
    for (unsigned t : prime_divisors(n)) {
        PolyP diff = frob[n / t];
        // diff -= X
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = sub_mod(diff[1], 1, p);
        strip(diff);
        PolyP g = gcd_poly(f, diff, p);
        if (degree(g) > 0) return false;
    }
    return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t s : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % s == 0) return n == s;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

FieldCtx FieldCtx::make(std::uint64_t p, unsigned r) {
    if (!is_prime_u64(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    if (r < 1 || r > kMaxDegree) throw DomainError("degree r out of supported range [1, 24]");
    // lexicographic search over the low coefficients, packed base p
    u128 qq = 1;
    for (unsigned i = 0; i < r; ++i) {
        qq *= p;
        if (qq > kMaxQ) throw DomainError("q = p^r exceeds the supported limit 2^40");
    }
    const std::uint64_t q = static_cast<std::uint64_t>(qq);
    for (std::uint64_t e = 0; e < q; ++e) {
        PolyP f(r + 1, 0);
        std::uint64_t v = e;
        for (unsigned i = 0; i < r; ++i) { f[i] = v % p; v /= p; }
        f[r] = 1;
        if (is_irreducible(f, p)) return make(p, r, std::move(f));
    }
    throw ReducibleError("no irreducible modulus found");  // unreachable: irreducibles exist for every (p, r)
}

FieldCtx FieldCtx::make(std::uint64_t p, unsigned r, std::vector<std::uint64_t> modulus) {
    if (!is_prime_u64(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    if (r < 1 || r > kMaxDegree) throw DomainError("degree r out of supported range [1, 24]");
    if (modulus.size() != static_cast<std::size_t>(r) + 1)
        throw DegreeMismatchError("modulus must have degree exactly r");
    if (modulus.back() != 1) throw DegreeMismatchError("modulus must be monic");
    for (std::uint64_t c : modulus) {
        if (c >= p) throw ValidationError("modulus coefficient not reduced mod p");
    }
    if (!is_irreducible(modulus, p)) throw ReducibleError("modulus is reducible over F_p");

    FieldCtx ctx;
    ctx.p_ = p;
    ctx.r_ = r;
    u128 qq = 1;
    for (unsigned i = 0; i < r; ++i) {
        qq *= p;
        if (qq > kMaxQ) throw DomainError("q = p^r exceeds the supported limit 2^40");
    }
    ctx.q_ = static_cast<std::uint64_t>(qq);
    ctx.modulus_ = std::move(modulus);
    ctx.build_tables();
    return ctx;
}

void FieldCtx::build_tables() {
    if (r_ >= 2) {
        // reduction_[i] = digit vector of x^{r+i} mod modulus, i < r-1
        reduction_.assign(r_ - 1, std::vector<std::uint64_t>(r_, 0));
        std::vector<std::uint64_t> cur(r_);
        for (unsigned j = 0; j < r_; ++j) cur[j] = (modulus_[j] == 0) ? 0 : p_ - modulus_[j];  // x^r
        reduction_[0] = cur;
        for (unsigned i = 1; i + 1 < r_; ++i) {
            // multiply cur by x
            std::vector<std::uint64_t> next(r_, 0);
            const std::uint64_t top = cur[r_ - 1];
            for (unsigned j = r_ - 1; j >= 1; --j) next[j] = cur[j - 1];
            next[0] = 0;
            if (top != 0) {
                for (unsigned j = 0; j < r_; ++j)
                    next[j] = add_mod(next[j], mul_mod(top, reduction_[0][j], p_), p_);
            }
            reduction_[i] = next;
            cur = std::move(next);
        }
    }

    trace_of_basis_.assign(r_, 0);
    if (r_ == 1) {
        trace_of_basis_[0] = 1;
    } else {
        for (unsigned j = 0; j < r_; ++j) {
            Elem xj = pow(gen_x(), j);
            Elem acc = 0;
            Elem conj = xj;
            for (unsigned i = 0; i < r_; ++i) {
                acc = add(acc, conj);
                conj = pow(conj, p_);
            }
            trace_of_basis_[j] = acc % p_;  // acc lies in the prime subfield
        }
    }

    if (r_ >= 2 && q_ <= kTraceTableLimit) {
        // fill a local vector: trace() switches to the table once it is non-empty
        std::vector<std::uint32_t> table(q_);
        for (std::uint64_t x = 0; x < q_; ++x)
            table[x] = static_cast<std::uint32_t>(trace(static_cast<Elem>(x)));
        trace_table_ = std::move(table);
    }
}

Elem FieldCtx::gen_x() const {
    if (r_ == 1) return (p_ - modulus_[0]) % p_;  // root of the degree-1 modulus
    return static_cast<Elem>(p_);
}

Elem FieldCtx::add(Elem a, Elem b) const {
    if (r_ == 1) return add_mod(a, b, p_);
    if (p_ == 2) return a ^ b;
    Elem out = 0;
    std::uint64_t scale = 1;
    for (unsigned i = 0; i < r_; ++i) {
        out += add_mod(a % p_, b % p_, p_) * scale;
        a /= p_; b /= p_;
        scale *= p_;
    }
    return out;
}

Elem FieldCtx::sub(Elem a, Elem b) const {
    if (r_ == 1) return sub_mod(a, b, p_);
    if (p_ == 2) return a ^ b;
    Elem out = 0;
    std::uint64_t scale = 1;
    for (unsigned i = 0; i < r_; ++i) {
        out += sub_mod(a % p_, b % p_, p_) * scale;
        a /= p_; b /= p_;
        scale *= p_;
    }
    return out;
}

Elem FieldCtx::neg(Elem a) const { return sub(0, a); }

Elem FieldCtx::mul(Elem a, Elem b) const {
    if (r_ == 1) return mul_mod(a, b, p_);
    std::array<std::uint64_t, kMaxDegree> da{}, db{};
    for (unsigned i = 0; i < r_; ++i) { da[i] = a % p_; a /= p_; }
    for (unsigned i = 0; i < r_; ++i) { db[i] = b % p_; b /= p_; }
    // schoolbook product; digits < 2^20 so 64-bit accumulators never overflow
    std::array<std::uint64_t, 2 * kMaxDegree> acc{};
    for (unsigned i = 0; i < r_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < r_; ++j) acc[i + j] += da[i] * db[j];
    }
    // acc[i] for i >= r folds through the precomputed residue of x^i
    for (unsigned i = 2 * r_ - 2; i >= r_; --i) {
        const std::uint64_t c = acc[i] % p_;
        if (c != 0) {
            const auto& row = reduction_[i - r_];
            for (unsigned j = 0; j < r_; ++j) acc[j] += c * row[j];
        }
        if (i == r_) break;
    }
    Elem out = 0;
    std::uint64_t scale = 1;
    for (unsigned j = 0; j < r_; ++j) {
        out += (acc[j] % p_) * scale;
        scale *= p_;
    }
    return out;
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const {
    Elem acc = one();
    while (e > 0) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw DomainError("inverse of zero");
    if (r_ == 1) return inv_mod(a, p_);
    // extended Euclid in F_p[X] against the modulus
    PolyP r0 = modulus_;
    PolyP r1;
    {
        Elem v = a;
        for (unsigned i = 0; i < r_; ++i) { r1.push_back(v % p_); v /= p_; }
        strip(r1);
    }
    PolyP t0, t1{1};
    while (!r1.empty()) {
        auto [qt, rem] = divmod_poly(std::move(r0), r1, p_);
        r0 = std::move(r1);
        r1 = std::move(rem);
        PolyP t2 = t0;  // t2 = t0 - qt * t1
        PolyP qt1 = mul_poly(qt, t1, p_);
        if (t2.size() < qt1.size()) t2.resize(qt1.size(), 0);
        for (std::size_t i = 0; i < qt1.size(); ++i) t2[i] = sub_mod(t2[i], qt1[i], p_);
        strip(t2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant
    const std::uint64_t scale = inv_mod(r0[0], p_);
    Elem out = 0;
    std::uint64_t sc = 1;
    for (unsigned j = 0; j < r_; ++j) {
        const std::uint64_t c = j < t0.size() ? t0[j] : 0;
        out += mul_mod(c, scale, p_) * sc;
        sc *= p_;
    }
    return out;
}

std::uint64_t FieldCtx::trace(Elem x) const {
    if (r_ == 1) return x;
    if (!trace_table_.empty()) return trace_table_[x];
    std::uint64_t acc = 0;
    for (unsigned i = 0; i < r_; ++i) {
        acc += (x % p_) * trace_of_basis_[i];
        x /= p_;
    }
    return acc % p_;
}

std::vector<std::uint64_t> FieldCtx::coeffs(Elem x) const {
    std::vector<std::uint64_t> out(r_);
    for (unsigned i = 0; i < r_; ++i) { out[i] = x % p_; x /= p_; }
    return out;
}

Elem FieldCtx::from_coeffs(const std::vector<std::uint64_t>& c) const {
    if (c.size() > r_) throw ValidationError("coefficient vector longer than degree");
    Elem out = 0;
    std::uint64_t scale = 1;
    for (unsigned i = 0; i < r_; ++i) {
        const std::uint64_t d = i < c.size() ? c[i] : 0;
        if (d >= p_) throw ValidationError("coefficient not reduced mod p");
        out += d * scale;
        scale *= p_;
    }
    return out;
}

Subset Subset::of(const FieldCtx& ctx, std::vector<Elem> values) {
    for (Elem v : values) {
        if (!ctx.valid(v)) throw ValidationError("subset element " + std::to_string(v) + " out of range");
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Subset s;
    s.values_ = std::move(values);
    return s;
}

Subset Subset::full_field(const FieldCtx& ctx) {
    if (ctx.q() > kExhaustiveLimit) throw TooLargeError("field too large to materialize");
    std::vector<Elem> v(ctx.q());
    for (std::uint64_t i = 0; i < ctx.q(); ++i) v[i] = i;
    return from_sorted(std::move(v));
}

Subset Subset::nonzero(const FieldCtx& ctx) {
    if (ctx.q() > kExhaustiveLimit) throw TooLargeError("field too large to materialize");
    std::vector<Elem> v(ctx.q() - 1);
    for (std::uint64_t i = 1; i < ctx.q(); ++i) v[i - 1] = i;
    return from_sorted(std::move(v));
}

Subset Subset::from_sorted(std::vector<Elem> values) {
    Subset s;
    s.values_ = std::move(values);
    return s;
}

bool Subset::contains(Elem x) const {
    return std::binary_search(values_.begin(), values_.end(), x);
}

Subset set_difference(const Subset& a, const Subset& b) {
    std::vector<Elem> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Subset::from_sorted(std::move(out));
}

Subset set_union(const Subset& a, const Subset& b) {
    std::vector<Elem> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Subset::from_sorted(std::move(out));
}

bool is_subset_of(const Subset& a, const Subset& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Elem> dual_basis(const FieldCtx& ctx, const std::vector<Elem>& basis) {
    const unsigned r = ctx.r();
    if (basis.size() != r) throw NotABasisError("expected exactly r elements");
    const std::uint64_t p = ctx.p();
    // Gram matrix of the trace form, augmented with the identity
    std::vector<std::vector<std::uint64_t>> m(r, std::vector<std::uint64_t>(2 * r, 0));
    for (unsigned i = 0; i < r; ++i) {
        for (unsigned j = 0; j < r; ++j) m[i][j] = ctx.trace(ctx.mul(basis[i], basis[j]));
        m[i][r + i] = 1;
    }
    for (unsigned col = 0; col < r; ++col) {
        unsigned pivot = col;
        while (pivot < r && m[pivot][col] == 0) ++pivot;
        if (pivot == r) throw NotABasisError("Gram matrix of the trace form is singular");
        std::swap(m[col], m[pivot]);
        const std::uint64_t piv_inv = inv_mod(m[col][col], p);
        for (unsigned j = 0; j < 2 * r; ++j) m[col][j] = mul_mod(m[col][j], piv_inv, p);
        for (unsigned i = 0; i < r; ++i) {
            if (i == col || m[i][col] == 0) continue;
            const std::uint64_t f = m[i][col];
            for (unsigned j = 0; j < 2 * r; ++j)
                m[i][j] = sub_mod(m[i][j], mul_mod(f, m[col][j], p), p);
        }
    }
    std::vector<Elem> dual(r, 0);
    for (unsigned i = 0; i < r; ++i) {
        Elem w = 0;
        for (unsigned j = 0; j < r; ++j)
            w = ctx.add(w, ctx.mul(ctx.from_int(m[i][r + j]), basis[j]));
        dual[i] = w;
    }
    return dual;
}

Subset quadratic_residues(std::uint64_t p) {
    if (p == 2) throw EvenCharacteristicError("quadratic residues need odd characteristic");
    if (!is_prime_u64(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    if (p > kExhaustiveLimit) throw TooLargeError("prime too large to enumerate residues");
    std::vector<Elem> v;
    v.reserve((p - 1) / 2);
    for (std::uint64_t z = 1; z <= (p - 1) / 2; ++z) v.push_back(mul_mod(z, z, p));
    std::sort(v.begin(), v.end());
    return Subset::from_sorted(std::move(v));
}

std::vector<std::uint64_t> trace_fiber_sizes(const FieldCtx& ctx) {
    if (ctx.q() > kExhaustiveLimit) throw TooLargeError("field too large for exhaustive fibers");
    std::vector<std::uint64_t> cnt(ctx.p(), 0);
    for (std::uint64_t x = 0; x < ctx.q(); ++x) ++cnt[ctx.trace(x)];
    return cnt;
}

Subset trace_fiber_union(const FieldCtx& ctx, const std::vector<std::uint64_t>& traces) {
    if (ctx.q() > kExhaustiveLimit) throw TooLargeError("field too large for fiber enumeration");
    std::vector<bool> wanted(ctx.p(), false);
    for (std::uint64_t s : traces) {
        if (s >= ctx.p()) throw ValidationError("trace value out of range");
        wanted[s] = true;
    }
    std::vector<Elem> v;
    for (std::uint64_t x = 0; x < ctx.q(); ++x) {
        if (wanted[ctx.trace(x)]) v.push_back(x);
    }
    return Subset::from_sorted(std::move(v));
}

}  // namespace charsum
