#pragma once

#include "mtbt/common.hpp"

#include <array>
#include <memory>
#include <vector>

namespace mtbt {

constexpr u32 kMaxF = 3;

// Element of F_{p^f}, represented as a polynomial of degree < f over F_p
// modulo the field's fixed irreducible polynomial.  Plain value type; all
// arithmetic goes through FqField.
struct FqElem {
    std::array<u32, kMaxF> c{0, 0, 0};
    bool operator==(const FqElem &o) const { return c == o.c; }
    bool operator!=(const FqElem &o) const { return !(*this == o); }
};

// F_{p^f} = F_p[t]/(g), g the smallest monic irreducible of degree f
// (graded-lex smallest coefficient vector).  f = 1 uses g = t.
class FqField {
  public:
    FqField(u32 p, u32 f);

    u32 p() const { return p_; }
    u32 f() const { return f_; }
    u64 q() const { return q_; }
    // coefficients of g below the leading term, g = t^f + modulus[f-1] t^{f-1} + ... + modulus[0]
    const std::vector<u32> &modulus() const { return modulus_; }

    FqElem zero() const { return FqElem{}; }
    FqElem one() const;
    FqElem from_int(u64 n) const; // image of n under Z -> F_p <= F_q
    FqElem gen() const;           // class of t (equals 0 when f = 1)

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const;
    FqElem pow(FqElem a, u64 e) const;
    FqElem inv(FqElem a) const;               // a != 0
    FqElem frobenius(FqElem a) const;         // a -> a^p
    bool is_zero(FqElem a) const;

    // Multiplicative generator of F_q^x (deterministic: first in enumeration order).
    FqElem multiplicative_generator() const;
    u64 elem_index(FqElem a) const;  // mixed-radix index, for enumeration/serialization
    FqElem elem_at(u64 idx) const;

    std::string to_string(FqElem a) const;

  private:
    u32 p_, f_;
    u64 q_;
    std::vector<u32> modulus_;
};

// Element of W(F_{p^f})/p^N: polynomial of degree < f over Z/p^N modulo the
// fixed lift of the residue field's irreducible polynomial.
struct WElem {
    std::array<u64, kMaxF> c{0, 0, 0};
    bool operator==(const WElem &o) const { return c == o.c; }
    bool operator!=(const WElem &o) const { return !(*this == o); }
};

// W(F_{p^f})/p^N.  The coefficient ring for every exact computation in this
// project; the paper's O = W(F) at desk scale (F = F_q, unramified).
class WittRing {
  public:
    WittRing(u32 p, u32 f, u32 N);

    u32 p() const { return p_; }
    u32 f() const { return f_; }
    u32 N() const { return N_; }
    u64 pN() const { return pN_; }
    u64 p_pow(u32 k) const { return ppow_[k]; } // p^k, k <= N
    const FqField &residue_field() const { return fq_; }

    WElem zero() const { return WElem{}; }
    WElem one() const;
    WElem from_int(i64 n) const;
    WElem p_elem() const { return from_int((i64)p_); }

    WElem add(WElem a, WElem b) const;
    WElem sub(WElem a, WElem b) const;
    WElem neg(WElem a) const;
    WElem mul(WElem a, WElem b) const;
    WElem mul_u64(WElem a, u64 s) const;
    WElem pow(WElem a, u64 e) const;
    bool is_zero(WElem a) const;

    FqElem reduce(WElem a) const;        // reduction mod p
    WElem lift(FqElem a) const;          // naive lift (digits as integers)
    WElem teichmuller(FqElem r) const;   // [r]: fixed point of x -> x^q
    WElem frobenius(WElem a) const;      // the canonical lift of x -> x^p
    WElem inv(WElem a) const;            // a a unit (reduce(a) != 0)

    // p-adic valuation: largest k <= N with a in p^k W; val(0) = N.
    u32 val(WElem a) const;
    // exact division by p^k (requires val >= k); result defined mod p^{N-k},
    // returned with zero top digits.
    WElem div_p(WElem a, u32 k) const;
    // unit u with a = u p^{val(a)} (u defined mod p^{N-val}); a != 0.
    WElem unit_part(WElem a) const;

    // a mod p^k, canonical representative (k <= N).
    WElem reduce_pk(WElem a, u32 k) const;

    std::string to_string(WElem a) const;

  private:
    u64 mod_coeff(u128 v) const { return (u64)(v % pN_); }
    u32 p_, f_, N_;
    u64 pN_;
    std::array<u64, 33> ppow_;
    FqField fq_;
    std::vector<u64> modulus_; // lift of fq_.modulus(), coefficients in [0, p)
};

} // namespace mtbt
