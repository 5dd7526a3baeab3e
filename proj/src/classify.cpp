#include "starideal/classify.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace starideal {

namespace {

long long to_ll(const Int& n) {
    if (n > std::numeric_limits<long long>::max())
        throw DomainError(Errc::BoundExceeded, "value beyond desk scale");
    return static_cast<long long>(n);
}

/// Star-closed supideals of I (I and D included), or nullopt past the cap.
std::optional<std::vector<Ideal>> star_supideals(const DomainHandle& dom, const Ideal& ideal,
                                                 StarOp star) {
    std::vector<Ideal> all;
    try {
        all = enumerate_supideals(dom, ideal);
    } catch (const DomainError& e) {
        if (e.code() == Errc::BoundExceeded) return std::nullopt;
        throw;
    }
    std::vector<Ideal> out;
    for (const Ideal& j : all)
        if (is_star_ideal(dom, j, star)) out.push_back(j);
    return out;
}

std::optional<GroupDescriptor> try_class_group(const DomainHandle& dom, StarOp star) {
    try {
        return class_group(dom, star);
    } catch (const DomainError& e) {
        if (e.code() == Errc::BoundExceeded) return std::nullopt;
        throw;
    }
}

/// Minimal n <= limit with (J^n)* principal.
std::optional<long long> principal_power_exponent(const DomainHandle& dom, const Ideal& ideal,
                                                  StarOp star, long long limit) {
    Ideal power = unit_ideal(dom);
    for (long long n = 1; n <= limit; ++n) {
        power = star_product(dom, power, ideal, star);
        if (is_principal(dom, power)) return n;
    }
    return std::nullopt;
}

/// Probe elements standing in for the generators of a maximal ideal.
std::vector<Element> maximal_probes(const DomainHandle& dom, const MaxIdeal& m) {
    if (dom->backend() == Backend::QuadraticOrder) {
        const Ideal& ideal = m.ideal();
        return {Element::from_omega_coords(dom, Rat(ideal.hnf_a()), Rat(0)),
                Element::from_omega_coords(dom, Rat(ideal.hnf_b()), Rat(ideal.hnf_c()))};
    }
    // Smallest power of the support prime that is an element of the model.
    const auto& prime = dom->monoid_primes()[dom->monoid_prime_index(m.label())];
    Int order = 1;
    const auto& inv = dom->monoid_invariants();
    for (std::size_t i = 0; i < inv.size(); ++i) {
        if (prime.cls[i] == 0) continue;
        Int g = gcd(prime.cls[i], inv[i]);
        order = lcm(order, Int(inv[i] / g));
    }
    return {Element::monoid(dom, {{m.label(), order}})};
}

TriState aggregate(const std::vector<TriState>& flags, long long bound) {
    bool unknown = false;
    for (const TriState& f : flags) {
        if (f.is_no()) return TriState::no();
        if (f.is_unknown()) unknown = true;
    }
    return unknown ? TriState::unknown(bound) : TriState::yes();
}

}  // namespace

void validate_implications(const TypeReport& r) {
    auto implies = [](const TriState& from, const TriState& to, const char* what) {
        if (from.is_yes() && to.is_no())
            throw DomainError(Errc::Internal, std::string("implication violated: ") + what);
    };
    implies(r.f_homog, r.super_homog, "f => super");
    implies(r.f_homog, r.wf_homog, "f => wf");
    implies(r.f_homog, r.af_homog, "f => af");
    implies(r.af_homog, r.super_homog, "af => super");
    implies(r.af_homog, r.waf_homog, "af => waf");
    implies(r.wf_homog, r.waf_homog, "wf => waf");
    implies(r.type2, r.type1, "type2 => type1");
}

TypeReport classify_ideal(const DomainHandle& dom, const Ideal& ideal, StarOp star,
                          long long bound) {
    if (bound < 1) throw DomainError(Errc::BoundExceeded, "bound must be positive");
    TypeReport report;
    report.star = star;
    report.subject = ideal;

    auto cert = is_homog(dom, ideal, star);
    if (!cert) {
        report.homog = false;
        report.type1 = report.type2 = report.super_homog = TriState::no();
        report.f_homog = report.af_homog = report.wf_homog = report.waf_homog = TriState::no();
        return report;
    }
    report.homog = true;
    report.spawned = cert->spawned;
    const MaxIdeal& m = cert->spawned;
    report.star_invertible = is_star_invertible(dom, ideal, star);

    auto cg = try_class_group(dom, star);
    auto sups = star_supideals(dom, ideal, star);

    // type 1: height-one structure decides it on both backends; the generator
    // probes are recorded as bounded evidence.
    report.type1 = TriState::yes();
    {
        bool probes_ok = true;
        for (const Element& probe : maximal_probes(dom, m)) {
            bool found = false;
            for (long long n = 1; n <= bound && !found; ++n) {
                Ideal component = local_contract(dom, principal_ideal(probe.pow(unsigned(n))), m);
                if (ideal_subset(component, ideal)) found = true;
            }
            probes_ok = probes_ok && found;
        }
        report.type1_provenance = probes_ok
                                      ? "structural (height one); generator probes verified"
                                      : "structural (height one); generator probes exhausted the bound";
    }

    // type 2: the chain ((M^n)*) is strictly decreasing, so crossing the ideal
    // decides the flag exactly.
    {
        report.type2 = TriState::unknown(bound);
        Ideal power = unit_ideal(dom);
        Ideal previous = power;
        for (long long n = 1; n <= bound; ++n) {
            power = star_product(dom, power, m.ideal(), star);
            if (power == ideal) {
                report.type2 = TriState::yes();
                report.type2_witness = n;
                break;
            }
            if (ideal_subset(power, ideal)) {  // strictly below: no later power returns
                report.type2 = TriState::no();
                break;
            }
            if (power == previous) {  // stalled chain
                report.type2 = TriState::no();
                break;
            }
            previous = power;
        }
    }

    if (!sups) {
        report.super_homog = TriState::unknown(kDefaultSupidealCap);
        report.f_homog = TriState::unknown(kDefaultSupidealCap);
        report.af_homog = TriState::unknown(kDefaultSupidealCap);
        if (!report.star_invertible) {
            report.wf_homog = TriState::yes();
            report.wf_vacuous = true;
            report.waf_homog = TriState::yes();
            report.waf_vacuous = true;
        } else {
            report.wf_homog = TriState::unknown(kDefaultSupidealCap);
            report.waf_homog = TriState::unknown(kDefaultSupidealCap);
        }
        validate_implications(report);
        return report;
    }

    // super: every finite-type star-ideal above I is star-invertible.
    report.super_homog = TriState::yes();
    for (const Ideal& j : *sups) {
        if (!is_star_invertible(dom, j, star)) {
            report.super_homog = TriState::no();
            break;
        }
    }

    // f: every finite-type star-ideal above I is principal.
    report.f_homog = TriState::yes();
    for (const Ideal& j : *sups) {
        if (!is_principal(dom, j)) {
            report.f_homog = TriState::no();
            break;
        }
    }

    // af: every finite-type star-ideal above I has a principal star-power.
    // The class-group exponent makes the search complete when available.
    {
        report.af_homog = TriState::yes();
        long long exponent_lcm = 1;
        for (const Ideal& j : *sups) {
            if (!is_star_invertible(dom, j, star)) {
                report.af_homog = TriState::no();
                break;
            }
            long long limit = cg ? to_ll(cg->exponent) : bound;
            auto n = principal_power_exponent(dom, j, star, limit);
            if (!n) {
                if (cg)
                    throw DomainError(Errc::Internal,
                                      "class-group exponent failed as a completeness certificate");
                report.af_homog = TriState::unknown(bound);
                break;
            }
            exponent_lcm = std::lcm(exponent_lcm, *n);
        }
        if (report.af_homog.is_yes()) report.af_exponent = exponent_lcm;
    }

    // wf / waf: conditions apply only when I is star-invertible; otherwise
    // they hold vacuously and the report says so.
    if (!report.star_invertible) {
        report.wf_homog = TriState::yes();
        report.wf_vacuous = true;
        report.waf_homog = TriState::yes();
        report.waf_vacuous = true;
    } else {
        report.wf_homog = TriState::yes();
        for (const Ideal& j : *sups) {
            if (!is_star_invertible(dom, j, star)) continue;
            if (!is_principal(dom, j)) {
                report.wf_homog = TriState::no();
                break;
            }
        }
        report.waf_homog = TriState::yes();
        long long exponent_lcm = 1;
        for (const Ideal& j : *sups) {
            if (!is_star_invertible(dom, j, star)) continue;
            long long limit = cg ? to_ll(cg->exponent) : bound;
            auto n = principal_power_exponent(dom, j, star, limit);
            if (!n) {
                if (cg)
                    throw DomainError(Errc::Internal,
                                      "class-group exponent failed as a completeness certificate");
                report.waf_homog = TriState::unknown(bound);
                break;
            }
            exponent_lcm = std::lcm(exponent_lcm, *n);
        }
        if (report.waf_homog.is_yes()) report.waf_exponent = exponent_lcm;
    }

    validate_implications(report);
    return report;
}

TriState is_rigid_element(const DomainHandle& dom, const Element& x, StarOp star) {
    if (x.is_zero()) throw DomainError(Errc::ZeroInput, "rigidity of zero");
    if (!x.is_integral()) throw DomainError(Errc::NotIntegral, "element is not in the domain");
    if (x.is_unit()) throw DomainError(Errc::UnitInput, "rigidity of a unit");
    auto fact = factor_principal(dom, x, star);
    if (fact.factors.size() != 1) return TriState::no();
    std::optional<std::vector<Ideal>> sups;
    try {
        sups = enumerate_supideals(dom, fact.factors.front().ideal);
    } catch (const DomainError& e) {
        if (e.code() == Errc::BoundExceeded) return TriState::unknown(kDefaultSupidealCap);
        throw;
    }
    for (std::size_t i = 0; i < sups->size(); ++i)
        for (std::size_t j = i + 1; j < sups->size(); ++j)
            if (!ideal_subset((*sups)[i], (*sups)[j]) && !ideal_subset((*sups)[j], (*sups)[i]))
                return TriState::no();
    return TriState::yes();
}

DomainReport classify_domain(const DomainHandle& dom, StarOp star,
                             const std::vector<Element>& sample, long long bound) {
    if (sample.empty()) throw DomainError(Errc::EmptySample, "domain classification needs a sample");
    DomainReport report;
    report.star = star;

    auto by_cmp = [](const Ideal& l, const Ideal& r) { return l.cmp(r) < 0; };
    std::set<Ideal, decltype(by_cmp)> factors(by_cmp);
    for (const Element& x : sample) {
        auto fact = factor_principal(dom, x, star);  // validates the sample element
        ++report.elements_factored;
        for (const auto& cert : fact.factors) factors.insert(cert.ideal);
    }

    std::vector<TriState> type1s, type2s, supers;
    for (const Ideal& f : factors) {
        report.factor_reports.push_back(classify_ideal(dom, f, star, bound));
        ++report.ideals_classified;
    }
    for (const TypeReport& r : report.factor_reports) {
        type1s.push_back(r.type1);
        type2s.push_back(r.type2);
        supers.push_back(r.super_homog);
    }

    auto record_no = [&](const char* flag, const TriState TypeReport::*member) {
        for (const TypeReport& r : report.factor_reports) {
            if ((r.*member).is_no()) {
                report.evidence.push_back(EvidenceRecord{
                    flag, "counterexample", r.subject,
                    std::string("factor fails ") + flag + " requirement"});
                return;
            }
        }
    };

    // Every principal sample factored into comaximal homog ideals, and both
    // backends carry the structural certificate (height-one Noetherian order /
    // divisor model of a Krull domain).
    report.sh = TriState::yes();
    report.provenance["sh"] = "structural + sampled factorizations";

    report.wkd = aggregate(type1s, bound);
    report.provenance["wkd"] = "structural (height one) + sampled type-1 flags";
    if (report.wkd.is_no()) record_no("wkd", &TypeReport::type1);

    report.krull = aggregate(type2s, bound);
    report.provenance["krull"] = "sampled type-2 flags";
    if (report.krull.is_no()) record_no("krull", &TypeReport::type2);

    report.irkt = aggregate(supers, bound);
    report.provenance["irkt"] = "sampled super-homog flags";
    if (report.irkt.is_no()) record_no("irkt", &TypeReport::super_homog);

    if (report.irkt.is_no() || report.wkd.is_no()) report.gkd = TriState::no();
    else if (report.irkt.is_yes() && report.wkd.is_yes()) report.gkd = TriState::yes();
    else report.gkd = TriState::unknown(bound);
    report.provenance["gkd"] = "irkt and wkd combined";

    report.cls = try_class_group(dom, star);

    // wf_sh: trivial star-class group, cross-checked against the sample
    // (every star-invertible homog factor principal).
    std::optional<Ideal> invertible_nonprincipal;
    bool any_unknown_wf = false;
    for (const TypeReport& r : report.factor_reports) {
        if (!r.star_invertible) continue;
        if (!is_principal(dom, *r.subject)) {
            invertible_nonprincipal = r.subject;
            break;
        }
    }
    if (report.cls) {
        report.wf_sh = report.cls->trivial() ? TriState::yes() : TriState::no();
        report.provenance["wf_sh"] = "class group";
        if (report.cls->trivial() && invertible_nonprincipal)
            throw DomainError(Errc::Internal,
                              "trivial class group with a non-principal invertible factor");
        if (!report.cls->trivial() && invertible_nonprincipal)
            report.evidence.push_back(EvidenceRecord{"wf_sh", "counterexample",
                                                     invertible_nonprincipal,
                                                     "star-invertible homog factor is not principal"});
    } else {
        if (invertible_nonprincipal) {
            report.wf_sh = TriState::no();
            report.evidence.push_back(EvidenceRecord{"wf_sh", "counterexample",
                                                     invertible_nonprincipal,
                                                     "star-invertible homog factor is not principal"});
        } else {
            report.wf_sh = TriState::unknown(bound);
            any_unknown_wf = true;
        }
        report.provenance["wf_sh"] = any_unknown_wf ? "sampled only (class group beyond cap)"
                                                    : "sampled counterexample";
    }

    // waf_sh: torsion star-class group; any computed finite group is torsion.
    if (report.cls) {
        report.waf_sh = TriState::yes();
        report.provenance["waf_sh"] = "class group (finite, hence torsion)";
        for (const TypeReport& r : report.factor_reports) {
            if (r.af_exponent && report.cls->exponent % Int(*r.af_exponent) != 0)
                throw DomainError(Errc::Internal,
                                  "af exponent does not divide the class-group exponent");
        }
    } else {
        bool any_no = false;
        for (const TypeReport& r : report.factor_reports)
            if (r.waf_homog.is_no()) { any_no = true; break; }
        report.waf_sh = any_no ? TriState::no() : TriState::unknown(bound);
        report.provenance["waf_sh"] = "sampled only (class group beyond cap)";
        if (any_no) record_no("waf_sh", &TypeReport::waf_homog);
    }

    return report;
}

}  // namespace starideal
