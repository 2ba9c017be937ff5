#include "mtbt/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace mtbt {

IdealNF::IdealNF(PolyRingPtr R, std::vector<PSeries> gens) : R_(std::move(R)) {
    PolyOps P(R_);
    for (auto &g : gens) {
        PSeries n = P.normalized(g);
        if (!n.is_zero()) gens_.push_back(std::move(n));
    }
    H_ = std::make_shared<Howell>(FreeModule{R_, 1});
    for (const auto &g : gens_) H_->add_poly_multiples(0, g);
}

bool IdealNF::contains_ideal(const IdealNF &other) const {
    for (const auto &g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool IdealNF::equals(const IdealNF &other) const {
    return contains_ideal(other) && other.contains_ideal(*this);
}

std::vector<PSeries> IdealNF::normal_form_gens() const {
    std::vector<PSeries> out;
    FreeModule m{R_, 1};
    for (const auto &r : H_->canonical_rows()) out.push_back(poly_from_row(m, 0, r));
    return out;
}

u64 IdealNF::quotient_length_mod_mk(u32 k) const {
    Howell H = *H_; // copy
    const WittRing &O = R_->O();
    PolyOps P(R_);
    for (u32 mi = 0; mi < R_->nmono(); ++mi) {
        u32 d = R_->mono_deg(mi);
        u32 a = d >= k ? 0 : k - d;
        if (a >= R_->cap_exp(mi)) continue; // already zero by truncation
        H.add_poly(0, P.monomial(mi, O.from_int((i64)O.p_pow(a))));
    }
    return H.quotient_length();
}

std::string IdealNF::to_json() const {
    PolyOps P(R_);
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto &g : gens_) {
        if (!first) os << ",";
        os << P.to_json(g);
        first = false;
    }
    os << "]";
    return os.str();
}

static void require_same_ring(const IdealNF &I, const IdealNF &J) {
    if (I.ring().get() != J.ring().get()) throw ParamError("ideals live in different rings");
}

IdealNF ideal_sum(const IdealNF &I, const IdealNF &J) {
    require_same_ring(I, J);
    std::vector<PSeries> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return IdealNF(I.ring(), std::move(gens));
}

namespace {

// Intersections and colons are computed at internal p-adic precision
// N' = M+1, where the truncation ideal is purely m^{M+1} and no p-digit
// fuzz can enter (an element of (p^{N'}) has m-order > M).  Results are
// truncated back to the caller's ring.
PolyRingPtr saturation_ring(const PolyRingPtr &R) {
    u32 Np = R->M() + 1;
    if (Np <= R->O().N()) return R;
    return make_ring(R->O().p(), R->O().f(), Np, R->M(), R->vars());
}

std::vector<PSeries> lift_gens(const PolyOps &src, const PolyOps &dst,
                               const std::vector<PSeries> &gens) {
    std::vector<PSeries> out;
    out.reserve(gens.size());
    for (const auto &g : gens) out.push_back(src.convert(dst, g));
    return out;
}

// kernel-of-pairing computation: rows [a_i | b_i] spanning a module of
// pairs plus [c_j | 0]; returns the right parts of the rows with zero left
// block, i.e. { b : exists combination with matching left part in span(c) }
std::vector<PSeries> zassenhaus_right(PolyRingPtr R, const std::vector<std::pair<PSeries, PSeries>> &pairs,
                                      const std::vector<PSeries> &left_only) {
    PolyOps P(R);
    const WittRing &O = R->O();
    FreeModule m2{R, 2};
    Howell H(m2);
    for (const auto &[a, b] : pairs) {
        for (u32 mi = 0; mi < R->nmono(); ++mi) {
            PSeries pa = P.mul_mono(a, mi, O.one());
            PSeries pb = P.mul_mono(b, mi, O.one());
            if (pa.is_zero() && pb.is_zero()) continue;
            SRow r = row_from_poly(m2, 0, pa);
            SRow r1 = row_from_poly(m2, 1, pb);
            r.t.insert(r.t.end(), r1.t.begin(), r1.t.end());
            H.add(std::move(r));
        }
    }
    for (const auto &g : left_only) H.add_poly_multiples(0, g);
    std::vector<PSeries> out;
    u32 nm = R->nmono();
    for (auto &r : H.canonical_rows())
        if (r.t.front().first >= nm) out.push_back(poly_from_row(m2, 1, r));
    return out;
}

} // namespace

IdealNF ideal_intersection(const IdealNF &I, const IdealNF &J) {
    require_same_ring(I, J);
    PolyRingPtr R = I.ring();
    PolyRingPtr Rs = saturation_ring(R);
    PolyOps P(R), Ps(Rs);
    std::vector<std::pair<PSeries, PSeries>> pairs;
    for (const auto &g : lift_gens(P, Ps, I.gens())) pairs.emplace_back(g, g);
    auto kernel = zassenhaus_right(Rs, pairs, lift_gens(P, Ps, J.gens()));
    return IdealNF(R, lift_gens(Ps, P, kernel));
}

IdealNF ideal_colon(const IdealNF &I, const PSeries &x) {
    PolyRingPtr R = I.ring();
    PolyRingPtr Rs = saturation_ring(R);
    PolyOps P(R), Ps(Rs);
    PSeries xs = P.convert(Ps, x);
    std::vector<std::pair<PSeries, PSeries>> pairs;
    pairs.emplace_back(xs, Ps.one()); // monomial multiples supplied inside
    auto kernel = zassenhaus_right(Rs, pairs, lift_gens(P, Ps, I.gens()));
    return IdealNF(R, lift_gens(Ps, P, kernel));
}

bool o_flat_at_truncation(const IdealNF &I) {
    PolyRingPtr R = I.ring();
    PolyRingPtr Rs = saturation_ring(R);
    PolyOps P(R), Ps(Rs);
    std::vector<std::pair<PSeries, PSeries>> pairs;
    pairs.emplace_back(Ps.from_int((i64)R->O().p()), Ps.one());
    auto gens_s = lift_gens(P, Ps, I.gens());
    auto colon = zassenhaus_right(Rs, pairs, gens_s);
    // (I : p) must lie inside I up to the unavoidable m-adic tolerance
    // (m^{M+1} : p) contains m^M
    IdealNF Is(Rs, gens_s);
    for (const auto &g : colon) {
        PSeries rem = Is.nf(g);
        if (Ps.order(rem) < Rs->M()) return false;
    }
    return true;
}

HilbertSamuelResult hilbert_samuel(const IdealNF &I) {
    PolyRingPtr R = I.ring();
    PolyOps P(R);
    const WittRing &O = R->O();
    u32 M = R->M();
    // Howell of I + (p): then dim_F A~/(I + (p) + m^k) counts monomials of
    // degree < k without a valuation-0 pivot
    Howell H = I.span();
    for (u32 mi = 0; mi < R->nmono(); ++mi) {
        if (R->cap_exp(mi) <= 1) continue;
        H.add_poly(0, P.monomial(mi, O.p_elem()));
    }
    FreeModule m1{R, 1};
    std::vector<u64> Hk(M, 0);
    std::vector<u64> free_by_deg(M + 1, 0);
    for (u32 mi = 0; mi < R->nmono(); ++mi)
        if (H.pivot_val(m1.col(0, mi)) > 0) free_by_deg[R->mono_deg(mi)] += 1;
    u64 acc = 0;
    for (u32 k = 1; k <= M; ++k) {
        acc += free_by_deg[k - 1];
        Hk[k - 1] = acc;
    }
    // difference analysis: smallest d with the last three values of D^d H equal
    HilbertSamuelResult res;
    res.H = Hk;
    std::vector<u64> cur(Hk.begin(), Hk.end());
    for (u32 d = 0; d <= 3; ++d) {
        if (cur.size() >= 3) {
            u64 a = cur[cur.size() - 3], b = cur[cur.size() - 2], c = cur[cur.size() - 1];
            if (a == b && b == c && c > 0) {
                res.d = d;
                res.e = c;
                // locate the start of the stable window
                u32 k0 = (u32)cur.size();
                while (k0 >= 2 && cur[k0 - 2] == c) --k0;
                res.k0 = k0;
                return res;
            }
        }
        if (cur.size() < 2) break;
        std::vector<u64> nxt(cur.size() - 1);
        for (u32 i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i + 1] < cur[i]) throw InternalError("Hilbert function not monotone");
            nxt[i] = cur[i + 1] - cur[i];
        }
        cur = std::move(nxt);
    }
    throw PrecisionError("hilbert_samuel: window too small, raise M");
}

// ---- modules ----

namespace {

// span rows of the submodule generated by gens (plus ring relations and the
// ideal actions) inside A~^k
void add_module_span(Howell &H, const ModulePresentation &M,
                     const std::vector<ModuleVec> &gens, bool include_rels) {
    PolyOps P(M.R);
    const WittRing &O = M.R->O();
    const FreeModule &fm = H.mod();
    auto add_vec_multiples = [&](const ModuleVec &v) {
        for (u32 mi = 0; mi < M.R->nmono(); ++mi) {
            SRow r;
            for (u32 comp = 0; comp < M.k; ++comp) {
                if (comp >= v.size() || v[comp].is_zero()) continue;
                PSeries prod = P.mul_mono(v[comp], mi, O.one());
                SRow rr = row_from_poly(fm, comp, prod);
                r.t.insert(r.t.end(), rr.t.begin(), rr.t.end());
            }
            if (!r.t.empty()) H.add(std::move(r));
        }
    };
    if (include_rels) {
        for (const auto &rel : M.rels) add_vec_multiples(rel);
        for (const auto &g : M.I.gens())
            for (u32 comp = 0; comp < M.k; ++comp) {
                ModuleVec v(M.k);
                v[comp] = g;
                add_vec_multiples(v);
            }
    }
    for (const auto &g : gens) add_vec_multiples(g);
}

// rows of m * (span of gens): p * g and x_i * g for all span generators
void add_m_times_span(Howell &H, const ModulePresentation &M,
                      const std::vector<ModuleVec> &gens) {
    PolyOps P(M.R);
    const WittRing &O = M.R->O();
    std::vector<ModuleVec> mgens;
    for (const auto &g : gens) {
        ModuleVec pg(M.k);
        for (u32 c = 0; c < M.k && c < g.size(); ++c) pg[c] = P.mul_scalar(g[c], O.p_elem());
        mgens.push_back(std::move(pg));
        for (u32 v = 0; v < M.R->nvars(); ++v) {
            ModuleVec xg(M.k);
            for (u32 c = 0; c < M.k && c < g.size(); ++c) xg[c] = P.mul(g[c], P.var(v));
            mgens.push_back(std::move(xg));
        }
    }
    add_module_span(H, M, mgens, false);
}

u64 span_complement_len(const ModulePresentation &M, const std::vector<ModuleVec> &gens,
                        const std::vector<ModuleVec> &extra, bool with_m_of_gens) {
    FreeModule fm{M.R, M.k};
    Howell H(fm);
    add_module_span(H, M, gens, true);
    add_module_span(H, M, extra, false);
    if (with_m_of_gens) add_m_times_span(H, M, gens);
    return H.quotient_length();
}

} // namespace

NakayamaReport nakayama_check(const ModulePresentation &M, const std::vector<ModuleVec> &Mprime,
                              const std::vector<ModuleVec> &Mpp) {
    PolyOps P(M.R);
    FreeModule fm{M.R, M.k};

    // chain membership: Mpp <= Mprime <= M (the last is automatic)
    {
        Howell H(fm);
        add_module_span(H, M, Mprime, true);
        for (const auto &v : Mpp) {
            SRow r;
            for (u32 comp = 0; comp < M.k; ++comp) {
                if (comp >= v.size()) continue;
                SRow rr = row_from_poly(fm, comp, v[comp]);
                r.t.insert(r.t.end(), rr.t.begin(), rr.t.end());
            }
            if (!H.contains(r)) throw ParamError("nakayama_check: not a chain (M'' not in M')");
        }
    }

    NakayamaReport rep;
    std::vector<ModuleVec> full_gens; // generators of M itself: e_1..e_k
    for (u32 c = 0; c < M.k; ++c) {
        ModuleVec v(M.k);
        v[c] = P.one();
        full_gens.push_back(std::move(v));
    }

    // mingen(span(gens)/span(extra)) = dim_F span(gens)/(span(extra) + m span(gens)),
    // computed as a difference of complement lengths inside A~^k
    auto mingen_sub = [&](const std::vector<ModuleVec> &gens,
                          const std::vector<ModuleVec> &denom_extra) -> u32 {
        u64 num = span_complement_len(M, gens, {}, false); // rels + span(gens)
        FreeModule fm2{M.R, M.k};
        Howell H(fm2);
        add_module_span(H, M, {}, true); // rels + ideal rows
        add_module_span(H, M, denom_extra, false);
        add_m_times_span(H, M, gens);
        u64 den = H.quotient_length();
        return (u32)(den - num);
    };

    rep.mingen_Mprime = mingen_sub(Mprime, {});
    rep.mingen_Mprime_over_Mpp = mingen_sub(Mprime, Mpp);
    rep.mingen_M = mingen_sub(full_gens, {});
    rep.mingen_M_over_Mpp = mingen_sub(full_gens, Mpp);

    rep.hypothesis_met = (rep.mingen_Mprime_over_Mpp == rep.mingen_Mprime);
    if (!rep.hypothesis_met) {
        rep.status = "hypothesis-not-met";
        rep.pass = true; // nothing to verify
        return rep;
    }
    // M'' subset m M
    {
        FreeModule fm2{M.R, M.k};
        Howell H(fm2);
        add_module_span(H, M, {}, true);
        add_m_times_span(H, M, full_gens);
        rep.mpp_in_mM = true;
        for (const auto &v : Mpp) {
            SRow r;
            for (u32 comp = 0; comp < M.k; ++comp) {
                if (comp >= v.size()) continue;
                SRow rr = row_from_poly(fm2, comp, v[comp]);
                r.t.insert(r.t.end(), rr.t.begin(), rr.t.end());
            }
            if (!H.contains(r)) {
                rep.mpp_in_mM = false;
                break;
            }
        }
    }
    rep.conclusion_ok = (rep.mingen_M_over_Mpp == rep.mingen_M);
    rep.pass = rep.mpp_in_mM && rep.conclusion_ok;
    rep.status = rep.pass ? "pass" : "fail";
    return rep;
}

} // namespace mtbt
