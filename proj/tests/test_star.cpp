#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starideal/rng.hpp"
#include "starideal/star.hpp"

#include "test_support.hpp"

using namespace starideal;
using namespace starideal::test_support;

namespace {

Element random_element(const DomainHandle& dom, Rng& rng, long long range) {
    for (;;) {
        Element e = q(dom, rng.range(-range, range), rng.range(-range, range));
        if (!e.is_zero()) return e;
    }
}

Ideal random_ideal(const DomainHandle& dom, Rng& rng) {
    std::vector<Element> gens;
    int count = 2 + static_cast<int>(rng.below(2));
    for (int i = 0; i < count; ++i) gens.push_back(random_element(dom, rng, 5));
    return ideal_from_generators(dom, gens);
}

}  // namespace

TEST_CASE("closure golden cases") {
    auto dom = zsqrt_m5();
    Ideal p = gen_ideal(dom, {q(dom, 2, 0), q(dom, 1, 1)});
    CHECK(closure(dom, p, StarOp::v) == p);  // invertible, hence divisorial

    for (StarOp star : kAllStars) {
        Ideal x = principal_ideal(q(dom, 3, 2));
        CHECK(closure(dom, x, star) == x);  // principal ideals are star-ideals
    }

    auto km = km_trivial();
    Ideal i = Ideal::monoid(km, {{"p", 1}, {"q", 1}});
    CHECK(closure(km, i, StarOp::w) == i);
}

TEST_CASE("star products and sums") {
    auto dom = zsqrt_m5();
    Ideal p = gen_ideal(dom, {q(dom, 2, 0), q(dom, 1, 1)});
    Ideal qq = gen_ideal(dom, {q(dom, 3, 0), q(dom, 1, 1)});
    Ideal pq = star_product(dom, p, qq, StarOp::d);
    CHECK(pq.den() == 1);
    CHECK(pq.hnf_a() == 6);
    CHECK(pq.hnf_b() == 1);
    CHECK(pq.hnf_c() == 1);
    CHECK(pq == principal_ideal(q(dom, 1, 1)));  // (1 + sqrt(-5))D

    CHECK(star_sum(dom, p, qq, StarOp::d) == unit_ideal(dom));

    auto km = km_trivial();
    CHECK(star_product(km, Ideal::monoid(km, {{"p", 1}}), Ideal::monoid(km, {{"p", 2}}),
                       StarOp::t) == Ideal::monoid(km, {{"p", 3}}));
}

TEST_CASE("star invertibility") {
    auto dom = zsqrt_m5();
    Ideal p = gen_ideal(dom, {q(dom, 2, 0), q(dom, 1, 1)});
    CHECK(is_star_invertible(dom, p, StarOp::d));

    // Conductor-touching maximal ideal of the non-maximal order Z[sqrt(-3)].
    auto order = zsqrt_m3_order();
    Ideal m = gen_ideal(order, {q(order, 2, 0), q(order, 1, 1)});
    CHECK(m.hnf_a() == 2);
    CHECK(m.hnf_c() == 1);
    CHECK_FALSE(is_star_invertible(order, m, StarOp::d));
    // It is still a star-ideal (quadratic orders are divisorial).
    CHECK(is_star_ideal(order, m, StarOp::v));

    auto km = km_z2();
    CHECK(is_star_invertible(km, Ideal::monoid(km, {{"p", 3}}), StarOp::t));
}

TEST_CASE("star comaximality") {
    auto dom = zsqrt_m5();
    Ideal p = gen_ideal(dom, {q(dom, 2, 0), q(dom, 1, 1)});
    Ideal qq = gen_ideal(dom, {q(dom, 3, 0), q(dom, 1, 1)});
    Ideal two = principal_ideal(q(dom, 2, 0));
    CHECK(is_star_comaximal(dom, p, qq, StarOp::d));
    CHECK_FALSE(is_star_comaximal(dom, two, p, StarOp::d));

    auto km = km_trivial();
    CHECK(is_star_comaximal(km, Ideal::monoid(km, {{"p", 3}}), Ideal::monoid(km, {{"q", 1}}),
                            StarOp::t));
}

TEST_CASE("star axioms on sampled ideals") {
    auto dom = zsqrt_m5();
    auto order = zsqrt_m3_order();
    Rng rng(424242);
    for (const auto& handle : {dom, order}) {
        for (int trial = 0; trial < 40; ++trial) {
            Ideal i = random_ideal(handle, rng);
            Ideal j = random_ideal(handle, rng);
            Element x = random_element(handle, rng, 4);
            for (StarOp star : kAllStars) {
                Ideal ci = closure(handle, i, star);
                CHECK(ideal_subset(i, ci));
                CHECK(closure(handle, ci, star) == ci);
                // monotone on the comparable pair (i `intersect` j, i)
                Ideal inner = ideal_intersect(i, j);
                CHECK(ideal_subset(closure(handle, inner, star), ci));
                // principal scaling
                CHECK(closure(handle, ideal_scale(i, x), star) == ideal_scale(ci, x));
                // interchange
                CHECK(star_product(handle, i, j, star) ==
                      closure(handle, ideal_product(ci, closure(handle, j, star)), star));
            }
            // order chain d <= w <= t = v
            CHECK(ideal_subset(closure(handle, i, StarOp::d), closure(handle, i, StarOp::w)));
            CHECK(ideal_subset(closure(handle, i, StarOp::w), closure(handle, i, StarOp::t)));
            CHECK(closure(handle, i, StarOp::t) == closure(handle, i, StarOp::v));
            // invertible ideals have star-closed closure and inverse
            for (StarOp star : kAllStars) {
                if (!is_star_invertible(handle, i, star)) continue;
                CHECK(is_star_ideal(handle, closure(handle, i, star), star));
                CHECK(is_star_ideal(handle, ideal_inverse(i), star));
            }
        }
    }
}

TEST_CASE("fractional ideals are closed by scaling through the axioms") {
    auto dom = zsqrt_m5();
    Ideal p = gen_ideal(dom, {q(dom, 2, 0), q(dom, 1, 1)});
    Ideal pinv = ideal_inverse(p);
    CHECK(pinv.den() == 2);
    for (StarOp star : kAllStars) CHECK(closure(dom, pinv, star) == pinv);
}
