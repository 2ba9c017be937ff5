#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtbt/poly.hpp"

#include <random>

using namespace mtbt;

namespace {

PSeries rand_poly(const PolyOps &P, std::mt19937_64 &rng, u32 terms) {
    const PolyRing &R = P.ring();
    PSeries r;
    for (u32 i = 0; i < terms; ++i) {
        u32 mono = (u32)(rng() % R.nmono());
        WElem c;
        for (u32 j = 0; j < R.O().f(); ++j) c.c[j] = rng() % R.O().pN();
        r.t.emplace_back(mono, c);
    }
    return P.normalized(std::move(r));
}

} // namespace

TEST_CASE("ring axioms at truncation") {
    for (u32 f : {1u, 2u}) {
        auto R = make_ring(7, f, 4, 6, {"X", "Y"});
        PolyOps P(R);
        std::mt19937_64 rng(1234 + f);
        for (int it = 0; it < 40; ++it) {
            PSeries a = rand_poly(P, rng, 4), b = rand_poly(P, rng, 4), c = rand_poly(P, rng, 4);
            CHECK(P.add(a, b) == P.add(b, a));
            CHECK(P.mul(a, b) == P.mul(b, a));
            CHECK(P.mul(P.mul(a, b), c) == P.mul(a, P.mul(b, c)));
            CHECK(P.mul(a, P.add(b, c)) == P.add(P.mul(a, b), P.mul(a, c)));
            CHECK(P.add(a, P.neg(a)).is_zero());
            CHECK(P.mul(a, P.one()) == a);
        }
    }
}

TEST_CASE("operations commute with raising precision") {
    auto Rlo = make_ring(7, 1, 3, 5, {"X", "Y"});
    auto Rhi = make_ring(7, 1, 6, 10, {"X", "Y"});
    PolyOps Plo(Rlo), Phi(Rhi);
    std::mt19937_64 rng(99);
    for (int it = 0; it < 40; ++it) {
        // build the same integral input in both rings
        PSeries alo = Plo.zero(), ahi = Phi.zero();
        PSeries blo = Plo.zero(), bhi = Phi.zero();
        for (int t = 0; t < 4; ++t) {
            u32 mono = (u32)(rng() % Rlo->nmono());
            i64 c = (i64)(rng() % 2000) - 1000;
            std::vector<u32> e(2);
            e[0] = Rlo->mono_exp(mono, 0);
            e[1] = Rlo->mono_exp(mono, 1);
            u32 mhi = Rhi->mono_from_exps(e);
            alo = Plo.add(alo, Plo.monomial(mono, Rlo->O().from_int(c)));
            ahi = Phi.add(ahi, Phi.monomial(mhi, Rhi->O().from_int(c)));
            u32 mono2 = (u32)(rng() % Rlo->nmono());
            i64 c2 = (i64)(rng() % 2000) - 1000;
            e[0] = Rlo->mono_exp(mono2, 0);
            e[1] = Rlo->mono_exp(mono2, 1);
            u32 mhi2 = Rhi->mono_from_exps(e);
            blo = Plo.add(blo, Plo.monomial(mono2, Rlo->O().from_int(c2)));
            bhi = Phi.add(bhi, Phi.monomial(mhi2, Rhi->O().from_int(c2)));
        }
        CHECK(Phi.convert(Plo, Phi.mul(ahi, bhi)) == Plo.mul(alo, blo));
        CHECK(Phi.convert(Plo, Phi.add(ahi, bhi)) == Plo.add(alo, blo));
    }
}

TEST_CASE("unit inverse and frobenius") {
    auto R = make_ring(7, 2, 4, 6, {"X"});
    PolyOps P(R);
    const WittRing &O = R->O();
    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) {
        PSeries u = rand_poly(P, rng, 3);
        // force a unit constant term
        u = P.add(u, P.one());
        WElem c0 = P.const_coeff(u);
        if (O.val(c0) != 0) continue;
        PSeries v = P.inv_unit(u);
        CHECK(P.mul(u, v) == P.one());
    }
    for (int it = 0; it < 20; ++it) {
        PSeries a = rand_poly(P, rng, 3), b = rand_poly(P, rng, 3);
        CHECK(P.frobenius(P.mul(a, b)) == P.mul(P.frobenius(a), P.frobenius(b)));
        CHECK(P.frobenius(P.add(a, b)) == P.add(P.frobenius(a), P.frobenius(b)));
    }
}

TEST_CASE("substitution and specialization") {
    auto R = make_ring(7, 1, 4, 6, {"X", "Y"});
    PolyOps P(R);
    // (X + Y)^2 with Y -> 0 gives X^2
    PSeries s = P.pow(P.add(P.var(0), P.var(1)), 2);
    std::map<u32, PSeries> images;
    images[0] = P.var(0);
    images[1] = P.zero();
    PSeries spec = P.substitute(P, s, images);
    CHECK(spec == P.pow(P.var(0), 2));
    // rename into a bigger ring
    auto R2 = make_ring(7, 1, 4, 8, {"Z", "X", "Y"});
    PolyOps P2(R2);
    PSeries conv = P.convert(P2, s);
    CHECK(conv == P2.pow(P2.add(P2.var(1), P2.var(2)), 2));
}

TEST_CASE("canonical serialization is sorted and stable") {
    auto R = make_ring(7, 1, 2, 4, {"X", "Y"});
    PolyOps P(R);
    PSeries a = P.add(P.mul(P.var(1), P.var(1)), P.add(P.var(0), P.from_int(3)));
    std::string j1 = P.to_json(a);
    PSeries b = P.add(P.add(P.from_int(3), P.var(0)), P.mul(P.var(1), P.var(1)));
    CHECK(j1 == P.to_json(b));
    CHECK(j1.find("\"1\"") != std::string::npos);
}
