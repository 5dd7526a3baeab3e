#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starideal/classify.hpp"
#include "starideal/rng.hpp"

#include "test_support.hpp"

using namespace starideal;
using namespace starideal::test_support;

TEST_CASE("classify_ideal golden case: 2D in Z[sqrt(-5)]") {
    auto dom = zsqrt_m5();
    Ideal two = principal_ideal(q(dom, 2, 0));
    TypeReport r = classify_ideal(dom, two, StarOp::d, 10);
    CHECK(r.homog);
    CHECK(r.type1.is_yes());
    CHECK(r.type2.is_yes());
    REQUIRE(r.type2_witness.has_value());
    CHECK(*r.type2_witness == 2);  // P^2 = 2D
    CHECK(r.super_homog.is_yes());
    CHECK(r.f_homog.is_no());  // P is above 2D and not principal
    CHECK(r.af_homog.is_yes());
    REQUIRE(r.af_exponent.has_value());
    CHECK(*r.af_exponent == 2);
    CHECK(r.wf_homog.is_no());  // 2D invertible, P invertible non-principal
    CHECK_FALSE(r.wf_vacuous);
    CHECK(r.waf_homog.is_yes());
    REQUIRE(r.waf_exponent.has_value());
    CHECK(*r.waf_exponent == 2);
}

TEST_CASE("classify_ideal: P itself has type-2 witness 1") {
    auto dom = zsqrt_m5();
    Ideal p = gen_ideal(dom, {q(dom, 2, 0), q(dom, 1, 1)});
    TypeReport r = classify_ideal(dom, p, StarOp::d, 10);
    CHECK(r.homog);
    CHECK(r.type2.is_yes());
    REQUIRE(r.type2_witness.has_value());
    CHECK(*r.type2_witness == 1);
    CHECK(r.f_homog.is_no());
    CHECK(r.wf_homog.is_no());
}

TEST_CASE("classify_ideal: non-homog input") {
    auto dom = zsqrt_m5();
    TypeReport r = classify_ideal(dom, principal_ideal(q(dom, 6, 0)), StarOp::d, 10);
    CHECK_FALSE(r.homog);
    CHECK(r.type1.is_no());
    CHECK(r.waf_homog.is_no());
}

TEST_CASE("classify_ideal: UFD-model prime power") {
    auto km = km_trivial();
    TypeReport r = classify_ideal(km, Ideal::monoid(km, {{"p", 3}}), StarOp::t, 10);
    CHECK(r.homog);
    CHECK(r.type1.is_yes());
    CHECK(r.type2.is_yes());
    CHECK(*r.type2_witness == 3);
    CHECK(r.super_homog.is_yes());
    CHECK(r.f_homog.is_yes());
    CHECK(r.af_homog.is_yes());
    CHECK(r.wf_homog.is_yes());
    CHECK(r.waf_homog.is_yes());
}

TEST_CASE("cross-backend agreement: {p:2} in the Z/2 model mirrors 2D") {
    auto km = km_z2_single();
    TypeReport r = classify_ideal(km, Ideal::monoid(km, {{"p", 2}}), StarOp::t, 10);
    CHECK(r.homog);
    CHECK(r.type1.is_yes());
    CHECK(r.type2.is_yes());
    CHECK(*r.type2_witness == 2);
    CHECK(r.super_homog.is_yes());
    CHECK(r.f_homog.is_no());
    CHECK(r.af_homog.is_yes());
    CHECK(*r.af_exponent == 2);
    CHECK(r.wf_homog.is_no());
    CHECK(r.waf_homog.is_yes());
    CHECK(*r.waf_exponent == 2);
}

TEST_CASE("classify_ideal: conductor prime of the non-maximal order") {
    auto order = zsqrt_m3_order();
    Ideal two = principal_ideal(q(order, 2, 0));
    TypeReport r = classify_ideal(order, two, StarOp::t, 16);
    CHECK(r.homog);
    CHECK(r.type1.is_yes());
    CHECK(r.type2.is_no());        // M^2 = 2M sits strictly below 2D
    CHECK(r.super_homog.is_no());  // M is not invertible
    CHECK(r.f_homog.is_no());
    // 2D itself is invertible; M above it is not, so the wf/waf quantifier
    // skips M but f/super do not.
    CHECK(r.star_invertible);
}

TEST_CASE("is_rigid_element") {
    auto dom = zsqrt_m5();
    CHECK(is_rigid_element(dom, q(dom, 2, 0), StarOp::d).is_yes());
    CHECK(is_rigid_element(dom, q(dom, 6, 0), StarOp::d).is_no());
    CHECK_THROWS_AS(is_rigid_element(dom, q(dom, 1, 0), StarOp::d), DomainError);

    auto km = km_z2();
    CHECK(is_rigid_element(km, m(km, {{"p", 1}, {"q", 1}}), StarOp::t).is_no());
    auto km_ufd = km_trivial();
    CHECK(is_rigid_element(km_ufd, m(km_ufd, {{"p", 5}}), StarOp::t).is_yes());
}

TEST_CASE("classify_domain over Z[sqrt(-5)]") {
    auto dom = zsqrt_m5();
    std::vector<Element> sample = {q(dom, 2, 0), q(dom, 3, 0), q(dom, 1, 1), q(dom, 6, 0)};
    DomainReport r = classify_domain(dom, StarOp::d, sample, 10);
    CHECK(r.sh.is_yes());
    CHECK(r.wkd.is_yes());
    CHECK(r.krull.is_yes());
    CHECK(r.irkt.is_yes());
    CHECK(r.gkd.is_yes());
    REQUIRE(r.cls.has_value());
    REQUIRE(r.cls->invariant_factors.size() == 1);
    CHECK(r.cls->invariant_factors[0] == 2);
    CHECK(r.wf_sh.is_no());
    CHECK(r.waf_sh.is_yes());
    CHECK(r.elements_factored == 4);
    CHECK(r.ideals_classified == 4);  // 2D, P, Q, Qbar
    bool found_wf_evidence = false;
    for (const auto& e : r.evidence)
        if (e.flag == "wf_sh") found_wf_evidence = true;
    CHECK(found_wf_evidence);
}

TEST_CASE("classify_domain over the monoid models") {
    auto km = km_trivial();
    DomainReport r1 = classify_domain(km, StarOp::t,
                                      {m(km, {{"p", 1}}), m(km, {{"p", 2}, {"q", 1}})}, 10);
    CHECK(r1.sh.is_yes());
    CHECK(r1.wf_sh.is_yes());
    CHECK(r1.waf_sh.is_yes());

    auto z2 = km_z2();
    DomainReport r2 = classify_domain(z2, StarOp::t,
                                      {m(z2, {{"p", 1}, {"q", 1}}), m(z2, {{"p", 2}})}, 10);
    CHECK(r2.sh.is_yes());
    CHECK(r2.wf_sh.is_no());
    CHECK(r2.waf_sh.is_yes());

    CHECK_THROWS_AS(classify_domain(km, StarOp::t, {}, 10), DomainError);
}

TEST_CASE("classify_domain over the non-maximal order") {
    auto order = zsqrt_m3_order();
    DomainReport r = classify_domain(order, StarOp::t, {q(order, 2, 0), q(order, 0, 1)}, 16);
    CHECK(r.sh.is_yes());
    CHECK(r.krull.is_no());
    CHECK(r.irkt.is_no());
    CHECK(r.gkd.is_no());
    CHECK_FALSE(r.evidence.empty());
}

TEST_CASE("implication lattice holds on sampled reports") {
    Rng rng(5150);
    auto dom = zsqrt_m5();
    auto order = zsqrt_m3_order();
    for (const auto& handle : {dom, order}) {
        for (int trial = 0; trial < 25; ++trial) {
            Element x = q(handle, rng.range(-5, 5), rng.range(-5, 5));
            if (x.is_zero() || x.is_unit()) continue;
            auto fact = factor_principal(handle, x, StarOp::t);
            for (const auto& cert : fact.factors) {
                TypeReport r = classify_ideal(handle, cert.ideal, StarOp::t, 8);
                CHECK_NOTHROW(validate_implications(r));
                CHECK(r.homog);
            }
        }
    }
}
