#include "mtbt/howell.hpp"

#include <algorithm>

namespace mtbt {

SRow row_from_poly(const FreeModule &m, u32 comp, const PSeries &g) {
    SRow r;
    r.t.reserve(g.t.size());
    for (const auto &[mono, c] : g.t) r.t.emplace_back(m.col(comp, mono), c);
    return r;
}

PSeries poly_from_row(const FreeModule &m, u32 comp, const SRow &r) {
    PSeries g;
    for (const auto &[col, c] : r.t)
        if (m.col_comp(col) == comp) g.t.emplace_back(m.col_mono(col), c);
    return g;
}

Howell::Howell(FreeModule mod) : mod_(std::move(mod)) {
    pivot_of_col_.assign(mod_.ncols(), -1);
}

SRow Howell::normalize(SRow r) const {
    const WittRing &O = mod_.R->O();
    std::sort(r.t.begin(), r.t.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    std::vector<std::pair<u32, WElem>> out;
    out.reserve(r.t.size());
    for (u32 i = 0; i < r.t.size();) {
        u32 col = r.t[i].first;
        WElem c = r.t[i].second;
        u32 j = i + 1;
        while (j < r.t.size() && r.t[j].first == col) c = O.add(c, r.t[j++].second);
        c = O.reduce_pk(c, mod_.cap(col));
        if (!O.is_zero(c)) out.emplace_back(col, c);
        i = j;
    }
    return SRow{std::move(out)};
}

void Howell::reduce_term(SRow &r, const Row &prow) const {
    const WittRing &O = mod_.R->O();
    // r has a term at prow.pcol with valuation >= prow.pval; cancel it
    auto it = std::lower_bound(r.t.begin(), r.t.end(), prow.pcol,
                               [](const auto &tc, u32 c) { return tc.first < c; });
    if (it == r.t.end() || it->first != prow.pcol) return;
    WElem c = it->second;
    const WElem &pi = prow.r.t.front().second;
    WElem q = O.mul(O.div_p(c, prow.pval), O.inv(O.unit_part(pi)));
    q = O.reduce_pk(q, mod_.cap(prow.pcol) - prow.pval); // canonical multiplier
    // r -= q * prow.r  (merge)
    SRow res;
    res.t.reserve(r.t.size() + prow.r.t.size());
    auto a = r.t.begin();
    auto b = prow.r.t.begin();
    while (a != r.t.end() || b != prow.r.t.end()) {
        if (b == prow.r.t.end() || (a != r.t.end() && a->first < b->first)) {
            res.t.push_back(*a++);
        } else if (a == r.t.end() || b->first < a->first) {
            WElem v = O.neg(O.mul(q, b->second));
            v = O.reduce_pk(v, mod_.cap(b->first));
            if (!O.is_zero(v)) res.t.emplace_back(b->first, v);
            ++b;
        } else {
            WElem v = O.sub(a->second, O.mul(q, b->second));
            v = O.reduce_pk(v, mod_.cap(a->first));
            if (!O.is_zero(v)) res.t.emplace_back(a->first, v);
            ++a;
            ++b;
        }
    }
    r = std::move(res);
}

SRow Howell::reduce(SRow r) const {
    const WittRing &O = mod_.R->O();
    r = normalize(std::move(r));
    u32 guard = 0;
    for (u32 pos = 0; pos < r.t.size();) {
        if (++guard > 1000000) throw InternalError("Howell::reduce runaway");
        u32 col = r.t[pos].first;
        i64 pr = pivot_of_col_[col];
        if (pr < 0) {
            ++pos;
            continue;
        }
        const Row &prow = rows_[(u32)pr];
        if (O.val(r.t[pos].second) >= prow.pval) {
            reduce_term(r, prow);
            // the term at col is gone; terms before pos are untouched
        } else {
            ++pos;
        }
    }
    return r;
}

void Howell::add(SRow r) {
    queue_.push_back(std::move(r));
    process();
    canonical_ = false;
}

void Howell::add_poly(u32 comp, const PSeries &g) { add(row_from_poly(mod_, comp, g)); }

void Howell::add_poly_multiples(u32 comp, const PSeries &g) {
    if (g.is_zero()) return;
    PolyOps P(mod_.R);
    u32 ord = mod_.R->M() + 1;
    for (const auto &[m, c] : g.t) {
        (void)c;
        ord = std::min(ord, mod_.R->mono_deg(m));
    }
    const WittRing &O = mod_.R->O();
    for (u32 mi = 0; mi < mod_.R->nmono(); ++mi) {
        if (mod_.R->mono_deg(mi) + ord > mod_.R->M()) continue;
        PSeries prod = P.mul_mono(g, mi, O.one());
        if (!prod.is_zero()) queue_.push_back(row_from_poly(mod_, comp, prod));
    }
    process();
    canonical_ = false;
}

void Howell::process() {
    const WittRing &O = mod_.R->O();
    u64 guard = 0;
    while (!queue_.empty()) {
        if (++guard > 50000000) throw InternalError("Howell::process runaway");
        SRow r = std::move(queue_.back());
        queue_.pop_back();
        r = reduce(std::move(r));
        if (r.empty()) continue;
        u32 col = r.t.front().first;
        u32 val = O.val(r.t.front().second);
        i64 pr = pivot_of_col_[col];
        if (pr >= 0 && rows_[(u32)pr].pval <= val)
            throw InternalError("Howell::process: reducible row after reduce");
        // install r as the pivot at col
        Row nrow;
        nrow.r = std::move(r);
        nrow.pcol = col;
        nrow.pval = val;
        if (pr >= 0) {
            // displace the old (higher-valuation) pivot and re-process it
            queue_.push_back(std::move(rows_[(u32)pr].r));
            rows_[(u32)pr].dead = true;
        }
        // closure row: p^{cap-val} * r has its pivot term killed by truncation
        u32 cap = mod_.cap(col);
        if (val < cap && nrow.r.t.size() > 1) {
            SRow clo;
            u64 mult = O.p_pow(cap - val);
            clo.t.reserve(nrow.r.t.size() - 1);
            for (u32 i = 1; i < nrow.r.t.size(); ++i) {
                WElem v = O.mul_u64(nrow.r.t[i].second, mult);
                v = O.reduce_pk(v, mod_.cap(nrow.r.t[i].first));
                if (!O.is_zero(v)) clo.t.emplace_back(nrow.r.t[i].first, v);
            }
            if (!clo.empty()) queue_.push_back(std::move(clo));
        }
        pivot_of_col_[col] = (i64)rows_.size();
        rows_.push_back(std::move(nrow));
    }
}

u32 Howell::pivot_val(u32 col) const {
    i64 pr = pivot_of_col_[col];
    return pr < 0 ? mod_.cap(col) : rows_[(u32)pr].pval;
}

u64 Howell::quotient_length() const {
    u64 len = 0;
    for (u32 c = 0; c < mod_.ncols(); ++c) len += pivot_val(c);
    return len;
}

bool Howell::contains(const SRow &r) const { return reduce(r).empty(); }

bool Howell::contains_poly(u32 comp, const PSeries &g) const {
    return contains(row_from_poly(mod_, comp, g));
}

PSeries Howell::nf_poly(const PSeries &g) const {
    if (mod_.ncomp != 1) throw ParamError("nf_poly needs ncomp = 1");
    return poly_from_row(mod_, 0, reduce(row_from_poly(mod_, 0, g)));
}

void Howell::canonicalize() {
    if (canonical_) return;
    const WittRing &O = mod_.R->O();
    // order pivots by column, scale leading coefficients to exactly p^{pval},
    // then back-reduce tails (descending pivot order so reductions settle)
    std::vector<u32> order;
    for (u32 i = 0; i < rows_.size(); ++i)
        if (!rows_[i].dead) order.push_back(i);
    std::sort(order.begin(), order.end(),
              [&](u32 a, u32 b) { return rows_[a].pcol > rows_[b].pcol; });
    for (u32 idx : order) {
        Row &row = rows_[idx];
        WElem lead = row.r.t.front().second;
        WElem scale = O.inv(O.unit_part(lead));
        if (scale != O.one()) {
            for (auto &[c, v] : row.r.t) {
                v = O.mul(v, scale);
                v = O.reduce_pk(v, mod_.cap(c));
            }
        }
        // tail reduction: canonical-reduce everything after the pivot term
        SRow tail;
        tail.t.assign(row.r.t.begin() + 1, row.r.t.end());
        tail = reduce(std::move(tail));
        SRow full;
        full.t.reserve(1 + tail.t.size());
        full.t.push_back(row.r.t.front());
        full.t.insert(full.t.end(), tail.t.begin(), tail.t.end());
        row.r = std::move(full);
    }
    canonical_ = true;
}

std::vector<SRow> Howell::canonical_rows() {
    canonicalize();
    std::vector<u32> order;
    for (u32 i = 0; i < rows_.size(); ++i)
        if (!rows_[i].dead) order.push_back(i);
    std::sort(order.begin(), order.end(),
              [&](u32 a, u32 b) { return rows_[a].pcol < rows_[b].pcol; });
    std::vector<SRow> out;
    out.reserve(order.size());
    for (u32 i : order) out.push_back(rows_[i].r);
    return out;
}

bool Howell::equal_span(Howell &other) {
    auto a = canonical_rows();
    auto b = other.canonical_rows();
    if (a.size() != b.size()) return false;
    for (u32 i = 0; i < a.size(); ++i)
        if (a[i].t != b[i].t) return false;
    return true;
}

u32 Howell::nrows() const {
    u32 n = 0;
    for (const auto &r : rows_)
        if (!r.dead) ++n;
    return n;
}

} // namespace mtbt
