#pragma once

#include "mtbt/howell.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mtbt {

// Ideal of the truncated ring, held together with the Howell form of its
// span (the reduced standard basis at the ambient truncation).
class IdealNF {
  public:
    IdealNF(PolyRingPtr R, std::vector<PSeries> gens);

    const PolyRingPtr &ring() const { return R_; }
    const std::vector<PSeries> &gens() const { return gens_; }
    Howell &span() const { return *H_; }

    PSeries nf(const PSeries &g) const { return H_->nf_poly(g); }
    bool contains(const PSeries &g) const { return H_->contains_poly(0, g); }
    bool contains_ideal(const IdealNF &other) const;
    bool equals(const IdealNF &other) const;

    // canonical generators (Howell rows as polynomials)
    std::vector<PSeries> normal_form_gens() const;

    // F-length of A~/I  (A~ the truncated ambient)
    u64 quotient_length() const { return H_->quotient_length(); }
    // F-length of A~/(I + m^k)
    u64 quotient_length_mod_mk(u32 k) const;

    std::string to_json() const;

  private:
    PolyRingPtr R_;
    std::vector<PSeries> gens_;
    std::shared_ptr<Howell> H_; // shared so IdealNF stays cheap to copy
};

IdealNF ideal_sum(const IdealNF &I, const IdealNF &J);
IdealNF ideal_intersection(const IdealNF &I, const IdealNF &J);
// (I : x) = { g : g x in I }
IdealNF ideal_colon(const IdealNF &I, const PSeries &x);

// O-flatness of A~/I at truncation: multiplication by p has no kernel
// beyond the truncation artifacts, i.e. (I : p) is contained in I + T'
// where T' is the truncation ideal shifted one p-digit down.
bool o_flat_at_truncation(const IdealNF &I);

struct HilbertSamuelResult {
    u32 d;            // Krull dimension of R/p detected from the fit
    u64 e;            // Hilbert-Samuel multiplicity
    u32 k0;           // start of the stable window
    std::vector<u64> H; // H[k-1] = dim_F A~/(I + (p) + m^k), k = 1..M
};

// Multiplicity of R/p for R = A~/I: fits dim_F R/(p, m^k) = e k^d/d! + ...
// Throws PrecisionError when no stable window exists below M.
HilbertSamuelResult hilbert_samuel(const IdealNF &I);

// ---- finitely presented modules over R = A~/I and the Nakayama bound ----

struct ModulePresentation {
    PolyRingPtr R;
    IdealNF I;                              // ring relations
    u32 k = 1;                              // number of generators
    std::vector<std::vector<PSeries>> rels; // each relation: k-tuple
};

using ModuleVec = std::vector<PSeries>; // element of R^k

struct NakayamaReport {
    u32 mingen_Mprime_over_Mpp = 0; // mingen(M'/M'')
    u32 mingen_Mprime = 0;          // mingen(M')
    u32 mingen_M_over_Mpp = 0;      // mingen(M/M'')
    u32 mingen_M = 0;               // mingen(M)
    bool hypothesis_met = false;    // mingen(M'/M'') == mingen(M')
    bool mpp_in_mM = false;         // M'' in m M
    bool conclusion_ok = false;     // mingen(M/M'') == mingen(M)
    bool pass = false;              // hypothesis_met implies both conclusions
    std::string status;             // "pass" | "fail" | "hypothesis-not-met"
};

// Lemma-4.3-style check for a chain M'' <= M' <= M, the submodules given by
// generating vectors. Throws ParamError if the chain inclusions fail.
NakayamaReport nakayama_check(const ModulePresentation &M, const std::vector<ModuleVec> &Mprime,
                              const std::vector<ModuleVec> &Mpp);

} // namespace mtbt
