#include "starideal/homog.hpp"

#include <algorithm>
#include <map>

namespace starideal {

namespace {

void require_star_ideal(const DomainHandle& dom, const Ideal& ideal, StarOp star) {
    if (!is_star_ideal(dom, ideal, star))
        throw DomainError(Errc::NotStarClosed, "ideal is not closed under the star operation");
}

void check_certificate(const DomainHandle& dom, const HomogCertificate& cert, StarOp star) {
    if (cert.star != star)
        throw DomainError(Errc::InvalidCertificate, "certificate issued for another star operation");
    auto fresh = is_homog(dom, cert.ideal, star);
    if (!fresh || !(fresh->spawned == cert.spawned))
        throw DomainError(Errc::InvalidCertificate, "certificate does not re-verify");
}

HomogCertificate certify_or_internal(const DomainHandle& dom, const Ideal& ideal, StarOp star,
                                     const char* context) {
    auto cert = is_homog(dom, ideal, star);
    if (!cert)
        throw DomainError(Errc::Internal,
                          std::string("factor failed homogeneity certification in ") + context);
    return *cert;
}

ComaximalFactorization regroup_impl(const DomainHandle& dom,
                                    const std::vector<HomogCertificate>& factors, StarOp star,
                                    bool merge_similar) {
    if (factors.empty())
        throw DomainError(Errc::InvalidCertificate, "empty factor list");
    for (const auto& cert : factors) check_certificate(dom, cert, star);

    Ideal product_check = factors.front().ideal;
    for (std::size_t i = 1; i < factors.size(); ++i)
        product_check = ideal_product(product_check, factors[i].ideal);
    product_check = closure(dom, product_check, star);

    std::vector<HomogCertificate> merged;
    if (merge_similar) {
        // Partition by spawned maximal, star-multiply each similarity class.
        std::map<Ideal, std::vector<const HomogCertificate*>,
                 decltype([](const Ideal& l, const Ideal& r) { return l.cmp(r) < 0; })>
            classes;
        for (const auto& cert : factors) classes[cert.spawned.ideal()].push_back(&cert);
        for (const auto& [key, members] : classes) {
            Ideal prod = members.front()->ideal;
            for (std::size_t i = 1; i < members.size(); ++i)
                prod = ideal_product(prod, members[i]->ideal);
            prod = closure(dom, prod, star);
            HomogCertificate cert = certify_or_internal(dom, prod, star, "regroup");
            if (!(cert.spawned == members.front()->spawned))
                throw DomainError(Errc::Internal, "merged factor spawned a different maximal ideal");
            merged.push_back(std::move(cert));
        }
    } else {
        merged = factors;
    }
    std::sort(merged.begin(), merged.end(), [](const HomogCertificate& l, const HomogCertificate& r) {
        if (auto c = l.spawned.cmp(r.spawned); c != 0) return c < 0;
        return l.ideal.cmp(r.ideal) < 0;
    });

    if (merge_similar) {
        Ideal recombined = merged.front().ideal;
        for (std::size_t i = 1; i < merged.size(); ++i)
            recombined = ideal_product(recombined, merged[i].ideal);
        if (closure(dom, recombined, star) != product_check)
            throw DomainError(Errc::Internal, "regrouped product disagrees with the input product");
    }
    return ComaximalFactorization{star, std::move(merged), std::move(product_check)};
}

ComaximalFactorization factor_components(const DomainHandle& dom, const Ideal& ideal, StarOp star,
                                         bool require_invertible, const char* context) {
    auto maximals = maximal_ideals_containing(dom, ideal, star);
    std::vector<HomogCertificate> certs;
    certs.reserve(maximals.size());
    for (const MaxIdeal& m : maximals) {
        Ideal component = local_contract(dom, ideal, m);
        HomogCertificate cert = certify_or_internal(dom, component, star, context);
        if (!(cert.spawned == m))
            throw DomainError(Errc::Internal, "component spawned an unexpected maximal ideal");
        if (require_invertible && !is_star_invertible(dom, component, star))
            throw DomainError(Errc::Internal, "component failed star-invertibility");
        certs.push_back(std::move(cert));
    }
    std::sort(certs.begin(), certs.end(), [](const HomogCertificate& l, const HomogCertificate& r) {
        return l.spawned.cmp(r.spawned) < 0;
    });
    Ideal prod = certs.front().ideal;
    for (std::size_t i = 1; i < certs.size(); ++i) prod = ideal_product(prod, certs[i].ideal);
    prod = closure(dom, prod, star);
    if (prod != closure(dom, ideal, star))
        throw DomainError(Errc::Internal,
                          std::string("component star-product does not reproduce the ideal in ") +
                              context);
    return ComaximalFactorization{star, std::move(certs), std::move(prod)};
}

}  // namespace

MaxIdeal spawned_maximal(const DomainHandle& dom, const Ideal& ideal, StarOp star) {
    if (!ideal.is_integral()) throw DomainError(Errc::NotProper, "ideal is not integral");
    if (ideal.is_unit_ideal()) throw DomainError(Errc::NotProper, "the whole domain spawns nothing");
    require_star_ideal(dom, ideal, star);
    auto maximals = maximal_ideals_containing(dom, ideal, star);
    if (maximals.size() != 1)
        throw NotHomogError("ideal lies under " + std::to_string(maximals.size()) +
                                " maximal star-ideals",
                            std::move(maximals));
    return maximals.front();
}

std::optional<HomogCertificate> is_homog(const DomainHandle& dom, const Ideal& ideal, StarOp star) {
    if (!ideal.is_integral() || ideal.is_unit_ideal()) return std::nullopt;
    if (!is_star_ideal(dom, ideal, star)) return std::nullopt;
    auto maximals = maximal_ideals_containing(dom, ideal, star);
    if (maximals.size() != 1) return std::nullopt;
    return HomogCertificate{ideal, maximals.front(), star};
}

bool spawned_membership_agrees(const DomainHandle& dom, const HomogCertificate& cert,
                               const Element& probe) {
    if (probe.is_zero()) return true;
    if (!probe.is_integral()) return true;  // the predicate ranges over D
    Ideal joined = ideal_sum(principal_ideal(probe), cert.ideal);
    bool predicate = !(closure(dom, joined, cert.star) == unit_ideal(dom));
    bool membership = ideal_contains(cert.spawned.ideal(), probe);
    return predicate == membership;
}

ComaximalFactorization regroup_comaximal(const DomainHandle& dom,
                                         const std::vector<HomogCertificate>& factors,
                                         StarOp star) {
    return regroup_impl(dom, factors, star, true);
}

namespace detail {
ComaximalFactorization regroup_comaximal_mutated(const DomainHandle& dom,
                                                 const std::vector<HomogCertificate>& factors,
                                                 StarOp star) {
    return regroup_impl(dom, factors, star, false);
}
}  // namespace detail

ComaximalFactorization factor_principal(const DomainHandle& dom, const Element& x, StarOp star) {
    if (x.is_zero()) throw DomainError(Errc::ZeroInput, "factoring zero");
    if (!x.domain()->same_domain(*dom))
        throw DomainError(Errc::MixedDomains, "element from another domain");
    if (!x.is_integral()) throw DomainError(Errc::NotIntegral, "element is not in the domain");
    if (x.is_unit()) throw DomainError(Errc::UnitInput, "factoring a unit");
    return factor_components(dom, principal_ideal(x), star, true, "factor_principal");
}

ComaximalFactorization factor_invertible(const DomainHandle& dom, const Ideal& ideal, StarOp star) {
    if (!ideal.is_integral()) throw DomainError(Errc::NotProper, "ideal is not integral");
    if (ideal.is_unit_ideal()) throw DomainError(Errc::NotProper, "the whole domain has no factors");
    require_star_ideal(dom, ideal, star);
    if (!is_star_invertible(dom, ideal, star))
        throw DomainError(Errc::NotInvertible, "ideal is not star-invertible");
    return factor_components(dom, ideal, star, true, "factor_invertible");
}

GcdStarResult gcd_star(const DomainHandle& dom, const Element& a, const Element& b, StarOp star) {
    if (a.is_zero() || b.is_zero()) throw DomainError(Errc::ZeroInput, "gcd with zero");
    if (!a.domain()->same_domain(*dom) || !b.domain()->same_domain(*dom))
        throw DomainError(Errc::MixedDomains, "element from another domain");
    if (!a.is_integral() || !b.is_integral())
        throw DomainError(Errc::NotIntegral, "gcd of non-integral elements");
    Ideal joined = closure(dom, ideal_from_generators(dom, {a, b}), star);
    if (joined.is_unit_ideal()) {
        auto maximals_of = [&](const Element& x) -> std::vector<MaxIdeal> {
            if (x.is_unit()) return {};
            return maximal_ideals_containing(dom, principal_ideal(x), star);
        };
        return GcdStarResult{joined, std::nullopt,
                             UnitWitness{maximals_of(a), maximals_of(b)}};
    }
    auto factorization = factor_components(dom, joined, star, false, "gcd_star");
    return GcdStarResult{joined, std::move(factorization), std::nullopt};
}

}  // namespace starideal
