#include "mtbt/poly.hpp"

#include <algorithm>
#include <sstream>

namespace mtbt {

namespace {

void gen_monomials(u32 nvars, u32 M, std::vector<std::vector<u32>> &out) {
    // all exponent vectors of total degree <= M, by (degree, lex)
    std::vector<u32> cur(nvars, 0);
    std::function<void(u32, u32, std::vector<std::vector<u32>> &)> rec =
        [&](u32 pos, u32 left, std::vector<std::vector<u32>> &acc) {
            if (pos == nvars) {
                acc.push_back(cur);
                return;
            }
            for (u32 e = 0; e <= left; ++e) {
                cur[pos] = e;
                rec(pos + 1, left - e, acc);
            }
            cur[pos] = 0;
        };
    std::vector<std::vector<std::vector<u32>>> bydeg(M + 1);
    std::vector<std::vector<u32>> all;
    rec(0, M, all);
    for (auto &e : all) {
        u32 d = 0;
        for (u32 x : e) d += x;
        bydeg[d].push_back(e);
    }
    for (u32 d = 0; d <= M; ++d) {
        std::sort(bydeg[d].begin(), bydeg[d].end());
        for (auto &e : bydeg[d]) out.push_back(e);
    }
}

u64 pack_exps(const std::vector<u32> &e) {
    u64 v = 0;
    for (u32 i = 0; i < e.size(); ++i) v |= (u64)(e[i] & 0xff) << (8 * i);
    return v;
}

} // namespace

PolyRing::PolyRing(WittRing O, std::vector<std::string> vars, u32 M)
    : O_(std::move(O)), vars_(std::move(vars)), M_(M), nvars_((u32)vars_.size()) {
    if (nvars_ > 8) throw ParamError("PolyRing: at most 8 variables");
    if (M_ > 250) throw ParamError("PolyRing: M too large");
    std::vector<std::vector<u32>> exps;
    gen_monomials(nvars_, M_, exps);
    mono_pack_.reserve(exps.size());
    mono_deg_.reserve(exps.size());
    for (auto &e : exps) {
        u32 d = 0;
        for (u32 x : e) d += x;
        mono_pack_.push_back(pack_exps(e));
        mono_deg_.push_back(d);
    }
    for (u32 i = 0; i < mono_pack_.size(); ++i) mono_idx_[mono_pack_[i]] = i;
    cap_.resize(mono_pack_.size());
    for (u32 i = 0; i < mono_pack_.size(); ++i)
        cap_[i] = std::min(O_.N(), M_ + 1 - mono_deg_[i]);
    var_mono_.resize(nvars_);
    for (u32 v = 0; v < nvars_; ++v) {
        std::vector<u32> e(nvars_, 0);
        if (M_ >= 1) {
            e[v] = 1;
            var_mono_[v] = mono_idx_.at(pack_exps(e));
        } else {
            var_mono_[v] = kNoMono;
        }
    }
}

u32 PolyRing::mono_mul(u32 a, u32 b) const {
    if (mono_deg_[a] + mono_deg_[b] > M_) return kNoMono;
    u64 s = mono_pack_[a] + mono_pack_[b]; // 8-bit lanes cannot carry: degrees <= M <= 250
    auto it = mono_idx_.find(s);
    if (it == mono_idx_.end()) return kNoMono;
    return it->second;
}

u32 PolyRing::mono_from_exps(const std::vector<u32> &e) const {
    u32 d = 0;
    for (u32 x : e) d += x;
    if (d > M_) return kNoMono;
    auto it = mono_idx_.find(pack_exps(e));
    return it == mono_idx_.end() ? kNoMono : it->second;
}

std::string PolyRing::mono_str(u32 idx) const {
    if (idx == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (u32 v = 0; v < nvars_; ++v) {
        u32 e = mono_exp(idx, v);
        if (!e) continue;
        if (!first) os << "*";
        os << vars_[v];
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

PolyRingPtr make_ring(u32 p, u32 f, u32 N, u32 M, std::vector<std::string> vars) {
    return std::make_shared<const PolyRing>(WittRing(p, f, N), std::move(vars), M);
}

PolyRingPtr make_const_ring(u32 p, u32 f) {
    return make_ring(p, f, 1, 0, {});
}

PSeries PolyOps::normalized(PSeries a) const {
    const WittRing &O = R_->O();
    std::sort(a.t.begin(), a.t.end(),
              [](const auto &x, const auto &y) { return x.first < y.first; });
    std::vector<std::pair<u32, WElem>> out;
    out.reserve(a.t.size());
    for (u32 i = 0; i < a.t.size();) {
        u32 mono = a.t[i].first;
        WElem c = a.t[i].second;
        u32 j = i + 1;
        while (j < a.t.size() && a.t[j].first == mono) c = O.add(c, a.t[j++].second);
        c = O.reduce_pk(c, R_->cap_exp(mono));
        if (!O.is_zero(c)) out.emplace_back(mono, c);
        i = j;
    }
    return PSeries{std::move(out)};
}

PSeries PolyOps::constant(WElem c) const {
    PSeries r;
    r.t.emplace_back(0, c);
    return normalized(std::move(r));
}

PSeries PolyOps::var(u32 i) const {
    if (i >= R_->nvars()) throw ParamError("PolyOps::var index");
    if (R_->M() < 1) throw ParamError("PolyOps::var: M = 0 ring has no variables");
    PSeries r;
    r.t.emplace_back(R_->mono_var(i), R_->O().one());
    return normalized(std::move(r));
}

PSeries PolyOps::monomial(u32 mono, WElem c) const {
    PSeries r;
    r.t.emplace_back(mono, c);
    return normalized(std::move(r));
}

PSeries PolyOps::add(const PSeries &a, const PSeries &b) const {
    PSeries r;
    r.t.reserve(a.t.size() + b.t.size());
    r.t.insert(r.t.end(), a.t.begin(), a.t.end());
    r.t.insert(r.t.end(), b.t.begin(), b.t.end());
    return normalized(std::move(r));
}

PSeries PolyOps::neg(const PSeries &a) const {
    PSeries r = a;
    for (auto &tc : r.t) tc.second = R_->O().neg(tc.second);
    return normalized(std::move(r));
}

PSeries PolyOps::sub(const PSeries &a, const PSeries &b) const { return add(a, neg(b)); }

PSeries PolyOps::mul(const PSeries &a, const PSeries &b) const {
    const WittRing &O = R_->O();
    PSeries r;
    r.t.reserve(a.t.size() * b.t.size());
    for (const auto &[ma, ca] : a.t)
        for (const auto &[mb, cb] : b.t) {
            u32 m = R_->mono_mul(ma, mb);
            if (m == PolyRing::kNoMono) continue;
            r.t.emplace_back(m, O.mul(ca, cb));
        }
    return normalized(std::move(r));
}

PSeries PolyOps::mul_scalar(const PSeries &a, WElem c) const {
    PSeries r = a;
    for (auto &tc : r.t) tc.second = R_->O().mul(tc.second, c);
    return normalized(std::move(r));
}

PSeries PolyOps::mul_mono(const PSeries &a, u32 mono, WElem c) const {
    const WittRing &O = R_->O();
    PSeries r;
    r.t.reserve(a.t.size());
    for (const auto &[m0, c0] : a.t) {
        u32 m = R_->mono_mul(m0, mono);
        if (m == PolyRing::kNoMono) continue;
        r.t.emplace_back(m, O.mul(c0, c));
    }
    return normalized(std::move(r));
}

PSeries PolyOps::pow(const PSeries &a, u32 e) const {
    PSeries r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

PSeries PolyOps::inv_unit(const PSeries &a) const {
    const WittRing &O = R_->O();
    WElem c0 = const_coeff(a);
    if (O.val(c0) != 0) throw ParamError("inv_unit: not a unit");
    PSeries x = constant(O.inv(c0));
    // Newton iteration x <- x(2 - a x); doubles (p,m)-adic precision
    u32 steps = 1;
    while ((1u << steps) < R_->O().N() + R_->M() + 1) ++steps;
    for (u32 i = 0; i <= steps; ++i) x = mul(x, sub(from_int(2), mul(a, x)));
    if (mul(a, x) != one()) throw InternalError("inv_unit failed");
    return x;
}

PSeries PolyOps::frobenius(const PSeries &a) const {
    PSeries r = a;
    for (auto &tc : r.t) tc.second = R_->O().frobenius(tc.second);
    return normalized(std::move(r));
}

WElem PolyOps::coeff(const PSeries &a, u32 mono) const {
    auto it = std::lower_bound(a.t.begin(), a.t.end(), mono,
                               [](const auto &tc, u32 m) { return tc.first < m; });
    if (it != a.t.end() && it->first == mono) return it->second;
    return R_->O().zero();
}

u32 PolyOps::order(const PSeries &a) const {
    u32 best = R_->M() + 1;
    for (const auto &[m, c] : a.t)
        best = std::min(best, R_->mono_deg(m) + R_->O().val(c));
    return best;
}

PSeries PolyOps::convert(const PolyOps &dst, const PSeries &a) const {
    return substitute(dst, a, {});
}

PSeries PolyOps::substitute(const PolyOps &dst, const PSeries &a,
                            const std::map<u32, PSeries> &images) const {
    const PolyRing &S = dst.ring();
    // variable -> image (default: same-name variable in dst)
    std::vector<PSeries> img(R_->nvars());
    std::vector<bool> used(R_->nvars(), false);
    for (const auto &[m, c] : a.t)
        for (u32 v = 0; v < R_->nvars(); ++v)
            if (R_->mono_exp(m, v)) used[v] = true;
    for (u32 v = 0; v < R_->nvars(); ++v) {
        if (!used[v]) continue;
        auto it = images.find(v);
        if (it != images.end()) {
            img[v] = it->second;
            continue;
        }
        bool found = false;
        for (u32 w = 0; w < S.nvars(); ++w)
            if (S.vars()[w] == R_->vars()[v]) {
                img[v] = dst.var(w);
                found = true;
                break;
            }
        if (!found) throw ParamError("substitute: no image for variable " + R_->vars()[v]);
    }
    PSeries out = dst.zero();
    for (const auto &[m, c] : a.t) {
        // coefficients transfer as raw Witt elements (same (p,f) required)
        if (S.O().p() != R_->O().p() || S.O().f() != R_->O().f())
            throw ParamError("substitute: coefficient rings differ");
        WElem cc = c;
        for (u32 i = 0; i < kMaxF; ++i) cc.c[i] %= S.O().pN();
        PSeries term = dst.constant(cc);
        for (u32 v = 0; v < R_->nvars(); ++v) {
            u32 e = R_->mono_exp(m, v);
            if (e) term = dst.mul(term, dst.pow(img[v], e));
        }
        out = dst.add(out, term);
    }
    return out;
}

std::string PolyOps::to_string(const PSeries &a) const {
    if (a.t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : a.t) {
        if (!first) os << " + ";
        os << R_->O().to_string(c);
        if (m != 0) os << "*" << R_->mono_str(m);
        first = false;
    }
    return os.str();
}

std::string PolyOps::to_json(const PSeries &a) const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto &[m, c] : a.t) {
        if (!first) os << ",";
        os << "[\"" << R_->mono_str(m) << "\",[";
        for (u32 i = 0; i < R_->O().f(); ++i) os << (i ? "," : "") << "\"" << c.c[i] << "\"";
        os << "]]";
        first = false;
    }
    os << "]";
    return os.str();
}

} // namespace mtbt
