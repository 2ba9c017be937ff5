#pragma once

#include "mtbt/witt.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace mtbt {

// Truncated power-series ring O[[x_1..x_n]] / (p^N, m^{M+1}), m = (p, all
// variables).  A monomial of total degree d carries its coefficient modulo
// p^{min(N, M+1-d)} (the cone truncation), so ring arithmetic is exact
// modulo (p^N, m^{M+1}).
class PolyRing {
  public:
    PolyRing(WittRing O, std::vector<std::string> vars, u32 M);

    const WittRing &O() const { return O_; }
    u32 nvars() const { return nvars_; }
    u32 M() const { return M_; }
    const std::vector<std::string> &vars() const { return vars_; }

    u32 nmono() const { return (u32)mono_pack_.size(); }
    u32 mono_deg(u32 idx) const { return mono_deg_[idx]; }
    u64 mono_pack(u32 idx) const { return mono_pack_[idx]; }
    u32 mono_exp(u32 idx, u32 var) const { return (u32)((mono_pack_[idx] >> (8 * var)) & 0xff); }
    // index of the product monomial, or kNoMono if the degree exceeds M
    u32 mono_mul(u32 a, u32 b) const;
    u32 mono_one() const { return 0; }
    u32 mono_var(u32 var) const { return var_mono_[var]; }
    u32 mono_from_exps(const std::vector<u32> &e) const;
    static constexpr u32 kNoMono = 0xffffffff;

    // modulus exponent of the coefficient at a monomial: min(N, M+1-deg)
    u32 cap_exp(u32 idx) const { return cap_[idx]; }

    std::string mono_str(u32 idx) const;

    bool same_ring(const PolyRing &o) const { return this == &o; }

  private:
    WittRing O_;
    std::vector<std::string> vars_;
    u32 M_, nvars_;
    std::vector<u64> mono_pack_;
    std::vector<u32> mono_deg_;
    std::vector<u32> cap_;
    std::vector<u32> var_mono_;
    std::unordered_map<u64, u32> mono_idx_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_ring(u32 p, u32 f, u32 N, u32 M, std::vector<std::string> vars);
// The residue-field constants ring: no variables, N = 1 (so O/p = F_q).
PolyRingPtr make_const_ring(u32 p, u32 f);

// Element of a PolyRing: sparse sorted term vector.  Always normalized
// (coefficients reduced mod p^{cap}, zero terms dropped).
struct PSeries {
    std::vector<std::pair<u32, WElem>> t; // (monomial index, coefficient), sorted

    bool operator==(const PSeries &o) const { return t == o.t; }
    bool operator!=(const PSeries &o) const { return !(*this == o); }
    bool is_zero() const { return t.empty(); }
};

class PolyOps {
  public:
    explicit PolyOps(PolyRingPtr R) : R_(std::move(R)) {}
    const PolyRing &ring() const { return *R_; }
    PolyRingPtr ring_ptr() const { return R_; }

    PSeries zero() const { return {}; }
    PSeries one() const { return constant(R_->O().one()); }
    PSeries constant(WElem c) const;
    PSeries from_int(i64 n) const { return constant(R_->O().from_int(n)); }
    PSeries var(u32 i) const;
    PSeries teich(FqElem a) const { return constant(R_->O().teichmuller(a)); }
    PSeries monomial(u32 mono, WElem c) const;

    PSeries add(const PSeries &a, const PSeries &b) const;
    PSeries sub(const PSeries &a, const PSeries &b) const;
    PSeries neg(const PSeries &a) const;
    PSeries mul(const PSeries &a, const PSeries &b) const;
    PSeries mul_scalar(const PSeries &a, WElem c) const;
    PSeries mul_mono(const PSeries &a, u32 mono, WElem c) const;
    PSeries pow(const PSeries &a, u32 e) const;
    // inverse of a unit (constant term a unit of O)
    PSeries inv_unit(const PSeries &a) const;
    PSeries frobenius(const PSeries &a) const; // Witt Frobenius on coefficients, vars fixed

    // coefficient of a monomial (canonical representative)
    WElem coeff(const PSeries &a, u32 mono) const;
    WElem const_coeff(const PSeries &a) const { return coeff(a, 0); }
    // lowest total degree of a term, counting p-valuation (m-adic order); M+1 if zero
    u32 order(const PSeries &a) const;

    // map into another ring: variables matched by NAME, truncation re-applied.
    // Every variable of a appearing with nonzero exponent must exist in dst.
    PSeries convert(const PolyOps &dst, const PSeries &a) const;
    // substitute images for variables (images in dst ring); vars without an
    // entry must exist in dst by name.
    PSeries substitute(const PolyOps &dst, const PSeries &a,
                       const std::map<u32, PSeries> &images) const;

    PSeries normalized(PSeries a) const; // reduce caps, drop zeros, sort
    std::string to_string(const PSeries &a) const;
    // canonical serialization: sorted monomials, coefficients as integer strings
    std::string to_json(const PSeries &a) const;

  private:
    PolyRingPtr R_;
};

} // namespace mtbt
