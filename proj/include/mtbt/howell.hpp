#pragma once

#include "mtbt/poly.hpp"

#include <optional>
#include <vector>

namespace mtbt {

// Free module A~^k over the truncated ring A~ = O[[x]]/(p^N, m^{M+1}).
// Columns are (component, monomial) pairs; the coefficient at a column is
// defined modulo p^{cap(col)} (the cone truncation of the ring).
struct FreeModule {
    PolyRingPtr R;
    u32 ncomp = 1;
    u32 nmono() const { return R->nmono(); }
    u32 ncols() const { return ncomp * R->nmono(); }
    u32 col(u32 comp, u32 mono) const { return comp * R->nmono() + mono; }
    u32 col_comp(u32 c) const { return c / R->nmono(); }
    u32 col_mono(u32 c) const { return c % R->nmono(); }
    u32 cap(u32 c) const { return R->cap_exp(col_mono(c)); }
};

// Sparse row vector, terms sorted by column.
struct SRow {
    std::vector<std::pair<u32, WElem>> t;
    bool empty() const { return t.empty(); }
};

// Howell-form basis of a submodule of a FreeModule: one pivot row per
// column, pivot = minimal p-valuation, closed under the truncation
// relations (p^{cap} = 0 columnwise).  The canonical form is the truncated
// analogue of a reduced standard basis with p counted as a degree-1
// variable; membership testing is reduction to zero.
class Howell {
  public:
    explicit Howell(FreeModule mod);

    const FreeModule &mod() const { return mod_; }

    void add(SRow r);
    void add_poly(u32 comp, const PSeries &g);
    // all monomial multiples mono * g (the full ideal/module span of g)
    void add_poly_multiples(u32 comp, const PSeries &g);

    SRow reduce(SRow r) const; // normal form of a coset representative
    bool contains(const SRow &r) const;
    bool contains_poly(u32 comp, const PSeries &g) const;
    PSeries nf_poly(const PSeries &g) const; // ncomp = 1 convenience

    // p-valuation of the pivot at a column, cap(col) if no pivot
    u32 pivot_val(u32 col) const;
    // F-length of (full module)/(span)
    u64 quotient_length() const;

    void canonicalize();
    std::vector<SRow> canonical_rows(); // canonicalizes, sorted by pivot col
    bool equal_span(Howell &other);

    u32 nrows() const;

  private:
    struct Row {
        SRow r;
        u32 pcol = 0, pval = 0;
        bool dead = false;
    };
    FreeModule mod_;
    std::vector<Row> rows_;
    std::vector<i64> pivot_of_col_; // -1 if none
    std::vector<SRow> queue_;
    bool canonical_ = false;

    SRow normalize(SRow r) const;
    void process();
    // subtract the canonical multiple of pivot row eliminating r's term at col
    void reduce_term(SRow &r, const Row &prow) const;
};

// helpers
SRow row_from_poly(const FreeModule &m, u32 comp, const PSeries &g);
PSeries poly_from_row(const FreeModule &m, u32 comp, const SRow &r);

} // namespace mtbt
