#pragma once

#include <optional>
#include <vector>

#include "starideal/star.hpp"

namespace starideal {

/// A certified star-homogeneous ideal: proper integral star-ideal of finite
/// type lying under exactly one maximal star-ideal (the spawned one).
struct HomogCertificate {
    Ideal ideal;
    MaxIdeal spawned;
    StarOp star;
};

/// Canonical factorization into mutually star-comaximal homogeneous factors,
/// ordered by the spawned maximal ideals' sort keys.
struct ComaximalFactorization {
    StarOp star;
    std::vector<HomogCertificate> factors;
    Ideal product_check;  // star-product of the factors
};

class NotHomogError : public DomainError {
public:
    NotHomogError(const std::string& what, std::vector<MaxIdeal> maximals)
        : DomainError(Errc::NotHomog, what), maximals_(std::move(maximals)) {}
    const std::vector<MaxIdeal>& maximals() const { return maximals_; }

private:
    std::vector<MaxIdeal> maximals_;
};

/// Machine-checkable evidence that two elements are star-coprime: the maximal
/// star-ideals over each principal ideal, with empty intersection.
struct UnitWitness {
    std::vector<MaxIdeal> maximals_lhs;
    std::vector<MaxIdeal> maximals_rhs;
};

struct GcdStarResult {
    Ideal gcd;
    std::optional<ComaximalFactorization> factorization;  // when gcd is proper
    std::optional<UnitWitness> coprime;                   // when gcd = D
};

/// The unique maximal star-ideal over a homogeneous ideal; throws
/// NotHomogError with the full list when there are several.
MaxIdeal spawned_maximal(const DomainHandle& dom, const Ideal& ideal, StarOp star);

std::optional<HomogCertificate> is_homog(const DomainHandle& dom, const Ideal& ideal, StarOp star);

/// Membership agreement for the spawned maximal ideal's defining predicate:
/// x lies in the spawned maximal iff ((x) + I)* is proper. Used as a sampled
/// cross-check by the verify suite.
bool spawned_membership_agrees(const DomainHandle& dom, const HomogCertificate& cert,
                               const Element& probe);

ComaximalFactorization regroup_comaximal(const DomainHandle& dom,
                                         const std::vector<HomogCertificate>& factors,
                                         StarOp star);

ComaximalFactorization factor_principal(const DomainHandle& dom, const Element& x, StarOp star);

ComaximalFactorization factor_invertible(const DomainHandle& dom, const Ideal& ideal, StarOp star);

GcdStarResult gcd_star(const DomainHandle& dom, const Element& a, const Element& b, StarOp star);

namespace detail {
/// Regroup with the canonical merge of similar factors disabled; only the
/// verify suite's negative control uses this.
ComaximalFactorization regroup_comaximal_mutated(const DomainHandle& dom,
                                                 const std::vector<HomogCertificate>& factors,
                                                 StarOp star);
}  // namespace detail

}  // namespace starideal
