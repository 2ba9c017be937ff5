#include "mtbt/witt.hpp"

#include <sstream>

namespace mtbt {

namespace {

// Does the monic polynomial t^f + c[f-1] t^{f-1} + ... + c[0] have a root in F_p?
bool has_root(u32 p, const std::vector<u32> &c) {
    u32 f = (u32)c.size();
    for (u32 x = 0; x < p; ++x) {
        u64 v = 1; // t^f term accumulates below
        // Horner on the full monic polynomial
        for (u32 i = f; i-- > 0;) v = (v * x + c[i]) % p;
        if (v == 0) return true;
    }
    return false;
}

// Smallest (graded-lex on coefficient vector) monic irreducible of degree f over F_p.
// For f <= 3 irreducibility is equivalent to having no root, except f = 2 and 3
// where no-root suffices (degree <= 3).
std::vector<u32> find_irreducible(u32 p, u32 f) {
    if (f == 1) return {0}; // g = t
    std::vector<u32> c(f, 0);
    while (true) {
        if (!has_root(p, c)) return c;
        // increment the coefficient vector in mixed radix
        u32 i = 0;
        while (i < f && ++c[i] == p) c[i++] = 0;
        if (i == f) throw InternalError("no irreducible polynomial found");
    }
}

} // namespace

FqField::FqField(u32 p, u32 f) : p_(p), f_(f) {
    if (f == 0 || f > kMaxF) throw ParamError("FqField: f out of range");
    if (p < 2) throw ParamError("FqField: bad p");
    q_ = 1;
    for (u32 i = 0; i < f; ++i) q_ *= p;
    modulus_ = find_irreducible(p, f);
}

FqElem FqField::one() const {
    FqElem e;
    e.c[0] = 1 % p_;
    return e;
}

FqElem FqField::from_int(u64 n) const {
    FqElem e;
    e.c[0] = (u32)(n % p_);
    return e;
}

FqElem FqField::gen() const {
    FqElem e;
    if (f_ >= 2)
        e.c[1] = 1;
    return e;
}

FqElem FqField::add(FqElem a, FqElem b) const {
    FqElem r;
    for (u32 i = 0; i < f_; ++i) r.c[i] = (a.c[i] + b.c[i]) % p_;
    return r;
}

FqElem FqField::sub(FqElem a, FqElem b) const {
    FqElem r;
    for (u32 i = 0; i < f_; ++i) r.c[i] = (a.c[i] + p_ - b.c[i]) % p_;
    return r;
}

FqElem FqField::neg(FqElem a) const { return sub(zero(), a); }

FqElem FqField::mul(FqElem a, FqElem b) const {
    // schoolbook product then reduction by the monic modulus
    std::array<u64, 2 * kMaxF - 1> prod{};
    for (u32 i = 0; i < f_; ++i)
        for (u32 j = 0; j < f_; ++j) prod[i + j] += (u64)a.c[i] * b.c[j];
    for (u32 d = 2 * f_ - 2; d >= f_ && d < 2 * kMaxF; --d) {
        u64 top = prod[d] % p_;
        if (top) {
            // t^d = t^{d-f} * (-(modulus))
            for (u32 i = 0; i < f_; ++i)
                prod[d - f_ + i] += top * (u64)(p_ - modulus_[i]);
        }
        prod[d] = 0;
        if (d == f_) break;
    }
    FqElem r;
    for (u32 i = 0; i < f_; ++i) r.c[i] = (u32)(prod[i] % p_);
    return r;
}

FqElem FqField::pow(FqElem a, u64 e) const {
    FqElem r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FqElem FqField::inv(FqElem a) const {
    if (is_zero(a)) throw ParamError("FqField::inv of zero");
    return pow(a, q_ - 2);
}

FqElem FqField::frobenius(FqElem a) const { return pow(a, p_); }

bool FqField::is_zero(FqElem a) const {
    for (u32 i = 0; i < f_; ++i)
        if (a.c[i]) return false;
    return true;
}

u64 FqField::elem_index(FqElem a) const {
    u64 idx = 0;
    for (u32 i = f_; i-- > 0;) idx = idx * p_ + a.c[i];
    return idx;
}

FqElem FqField::elem_at(u64 idx) const {
    FqElem e;
    for (u32 i = 0; i < f_; ++i) {
        e.c[i] = (u32)(idx % p_);
        idx /= p_;
    }
    return e;
}

FqElem FqField::multiplicative_generator() const {
    // factor q-1 by trial division, then test candidates in enumeration order
    std::vector<u64> primes;
    u64 m = q_ - 1;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) primes.push_back(m);
    for (u64 idx = 1; idx < q_; ++idx) {
        FqElem a = elem_at(idx);
        bool ok = true;
        for (u64 r : primes)
            if (pow(a, (q_ - 1) / r) == one()) {
                ok = false;
                break;
            }
        if (ok) return a;
    }
    throw InternalError("no generator");
}

std::string FqField::to_string(FqElem a) const {
    std::ostringstream os;
    os << "[";
    for (u32 i = 0; i < f_; ++i) os << (i ? "," : "") << a.c[i];
    os << "]";
    return os.str();
}

WittRing::WittRing(u32 p, u32 f, u32 N) : p_(p), f_(f), N_(N), fq_(p, f) {
    if (N == 0 || N > 32) throw ParamError("WittRing: N out of range");
    ppow_[0] = 1;
    for (u32 k = 1; k <= N; ++k) {
        if (ppow_[k - 1] > ((u64)1 << 63) / p) throw ParamError("WittRing: p^N too large");
        ppow_[k] = ppow_[k - 1] * p;
    }
    pN_ = ppow_[N];
    modulus_.assign(fq_.modulus().begin(), fq_.modulus().end());
}

WElem WittRing::one() const {
    WElem e;
    e.c[0] = 1 % pN_;
    return e;
}

WElem WittRing::from_int(i64 n) const {
    WElem e;
    i64 m = n % (i64)pN_;
    if (m < 0) m += (i64)pN_;
    e.c[0] = (u64)m;
    return e;
}

WElem WittRing::add(WElem a, WElem b) const {
    WElem r;
    for (u32 i = 0; i < f_; ++i) {
        u64 s = a.c[i] + b.c[i];
        r.c[i] = s >= pN_ ? s - pN_ : s;
    }
    return r;
}

WElem WittRing::sub(WElem a, WElem b) const {
    WElem r;
    for (u32 i = 0; i < f_; ++i) {
        u64 s = a.c[i] + pN_ - b.c[i];
        r.c[i] = s >= pN_ ? s - pN_ : s;
    }
    return r;
}

WElem WittRing::neg(WElem a) const { return sub(zero(), a); }

WElem WittRing::mul(WElem a, WElem b) const {
    std::array<u128, 2 * kMaxF - 1> prod{};
    for (u32 i = 0; i < f_; ++i)
        for (u32 j = 0; j < f_; ++j) prod[i + j] += (u128)a.c[i] * b.c[j];
    for (u32 d = 2 * f_ - 2; d >= f_ && d < 2 * kMaxF; --d) {
        u64 top = (u64)(prod[d] % pN_);
        if (top) {
            for (u32 i = 0; i < f_; ++i)
                prod[d - f_ + i] += (u128)top * (pN_ - modulus_[i] % pN_);
        }
        prod[d] = 0;
        if (d == f_) break;
    }
    WElem r;
    for (u32 i = 0; i < f_; ++i) r.c[i] = mod_coeff(prod[i]);
    return r;
}

WElem WittRing::mul_u64(WElem a, u64 s) const {
    WElem r;
    s %= pN_;
    for (u32 i = 0; i < f_; ++i) r.c[i] = (u64)(((u128)a.c[i] * s) % pN_);
    return r;
}

WElem WittRing::pow(WElem a, u64 e) const {
    WElem r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

bool WittRing::is_zero(WElem a) const {
    for (u32 i = 0; i < f_; ++i)
        if (a.c[i]) return false;
    return true;
}

FqElem WittRing::reduce(WElem a) const {
    FqElem r;
    for (u32 i = 0; i < f_; ++i) r.c[i] = (u32)(a.c[i] % p_);
    return r;
}

WElem WittRing::lift(FqElem a) const {
    WElem r;
    for (u32 i = 0; i < f_; ++i) r.c[i] = a.c[i];
    return r;
}

WElem WittRing::teichmuller(FqElem r) const {
    // fixed-point iteration x -> x^q; gains one digit of stability per round
    WElem x = lift(r);
    for (u32 k = 0; k + 1 < N_; ++k) x = pow(x, fq_.q());
    WElem chk = pow(x, fq_.q());
    if (chk != x) throw InternalError("teichmuller did not stabilize");
    return x;
}

u32 WittRing::val(WElem a) const {
    u32 v = N_;
    for (u32 i = 0; i < f_; ++i) {
        if (a.c[i] == 0) continue;
        u32 vi = 0;
        u64 c = a.c[i];
        while (c % p_ == 0) {
            c /= p_;
            ++vi;
        }
        if (vi < v) v = vi;
    }
    return v;
}

WElem WittRing::div_p(WElem a, u32 k) const {
    if (val(a) < k) throw ParamError("div_p: insufficient valuation");
    WElem r;
    for (u32 i = 0; i < f_; ++i) r.c[i] = a.c[i] / ppow_[k];
    return r;
}

WElem WittRing::unit_part(WElem a) const {
    if (is_zero(a)) throw ParamError("unit_part of zero");
    return div_p(a, val(a));
}

WElem WittRing::reduce_pk(WElem a, u32 k) const {
    WElem r;
    for (u32 i = 0; i < f_; ++i) r.c[i] = a.c[i] % ppow_[k];
    return r;
}

WElem WittRing::frobenius(WElem a) const {
    // Teichmuller digit expansion a = sum [x_k] p^k, then sigma(a) = sum [x_k^p] p^k.
    WElem rest = a, out = zero();
    for (u32 k = 0; k < N_; ++k) {
        FqElem digit = reduce(rest);
        if (!fq_.is_zero(digit)) {
            WElem t = teichmuller(digit);
            out = add(out, mul_u64(teichmuller(fq_.frobenius(digit)), ppow_[k]));
            rest = sub(rest, t);
        }
        if (k + 1 < N_) rest = div_p(rest, 1);
    }
    return out;
}

WElem WittRing::inv(WElem a) const {
    FqElem r0 = reduce(a);
    if (fq_.is_zero(r0)) throw ParamError("WittRing::inv of non-unit");
    WElem x = lift(fq_.inv(r0));
    // Newton: x <- x(2 - a x), doubles correct digits each round
    for (u32 k = 1; k < 2 * N_; k *= 2) x = mul(x, sub(from_int(2), mul(a, x)));
    if (mul(a, x) != one()) throw InternalError("inv failed");
    return x;
}

std::string WittRing::to_string(WElem a) const {
    std::ostringstream os;
    os << "[";
    for (u32 i = 0; i < f_; ++i) os << (i ? "," : "") << a.c[i];
    os << "]";
    return os.str();
}

} // namespace mtbt
