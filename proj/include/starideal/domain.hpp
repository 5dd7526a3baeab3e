#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "starideal/errors.hpp"
#include "starideal/numeric.hpp"

namespace starideal {

// ---------------------------------------------------------------------------
// Domain specification
// ---------------------------------------------------------------------------

/// Order Z[f*w_K] in Q(sqrt(d)); w_K is the maximal-order generator.
struct QuadraticOrderSpec {
    long long d = 0;  // squarefree, not 0 or 1
    long long f = 1;  // conductor, >= 1

    bool operator==(const QuadraticOrderSpec&) const = default;
};

struct KrullPrimeSpec {
    std::string label;
    std::vector<Int> cls;  // exponent vector in the declared class group

    bool operator==(const KrullPrimeSpec&) const = default;
};

/// Divisor model of a Krull domain: free monoid on labelled primes plus a
/// class homomorphism into a finite abelian group.
struct KrullMonoidSpec {
    std::vector<Int> class_group;  // invariant factors
    std::vector<KrullPrimeSpec> primes;

    bool operator==(const KrullMonoidSpec&) const = default;
};

using DomainSpec = std::variant<QuadraticOrderSpec, KrullMonoidSpec>;

enum class Backend { QuadraticOrder, KrullMonoid };

class Domain;
using DomainHandle = std::shared_ptr<const Domain>;

/// Immutable computable-domain handle. Construct through make_domain.
class Domain {
public:
    Backend backend() const { return backend_; }
    const DomainSpec& spec() const { return spec_; }

    bool same_domain(const Domain& other) const { return spec_ == other.spec_; }

    // Quadratic order data: w = f*w_K with w^2 = trace*w - norm.
    long long quad_d() const { return quad_.d; }
    long long quad_f() const { return quad_.f; }
    const Int& quad_trace() const { return quad_.trace; }
    const Int& quad_norm() const { return quad_.norm; }
    const Int& quad_disc() const { return quad_.disc; }
    bool quad_imaginary() const { return quad_.d < 0; }
    /// Coordinates of w over (1, sqrt(d)).
    Rat quad_omega_u() const { return quad_.omega_u; }
    Rat quad_omega_v() const { return quad_.omega_v; }

    /// Fundamental unit (x, y) with x + y*w of norm +-1, d > 0 only.
    /// Lazy; throws BoundExceeded past the search cap.
    std::pair<Int, Int> fundamental_unit(const Int& cap = Int(1000000)) const;

    // Krull monoid data.
    const std::vector<Int>& monoid_invariants() const { return monoid_.invariants; }
    const std::vector<KrullPrimeSpec>& monoid_primes() const { return monoid_.primes; }
    /// Index of a prime label; throws on unknown labels.
    std::size_t monoid_prime_index(const std::string& label) const;

    static DomainHandle create(const DomainSpec& spec);

private:
    Domain() = default;

    Backend backend_ = Backend::QuadraticOrder;
    DomainSpec spec_;

    struct QuadData {
        long long d = 0;
        long long f = 1;
        Int trace, norm, disc;
        Rat omega_u, omega_v;
        mutable std::mutex unit_mutex;
        mutable std::optional<std::pair<Int, Int>> unit;
    } quad_;

    struct MonoidData {
        std::vector<Int> invariants;
        std::vector<KrullPrimeSpec> primes;
        std::map<std::string, std::size_t> index;
    } monoid_;
};

DomainHandle make_domain(const DomainSpec& spec);

// ---------------------------------------------------------------------------
// Elements and ideals
// ---------------------------------------------------------------------------

using Divisor = std::map<std::string, Int>;

/// Nonzero element of the quotient field. Quadratic backend: u + v*sqrt(d).
/// Monoid backend: symbolic element carried by its divisor (class sum zero);
/// units are collapsed, the unit is the empty divisor.
class Element {
public:
    static Element quadratic(DomainHandle dom, Rat u, Rat v);
    static Element monoid(DomainHandle dom, Divisor divisor);

    const DomainHandle& domain() const { return dom_; }
    Backend backend() const { return dom_->backend(); }

    const Rat& u() const { return u_; }
    const Rat& v() const { return v_; }
    const Divisor& divisor() const { return divisor_; }

    bool is_zero() const;
    bool is_unit() const;       // unit of D (implies membership in D)
    bool is_integral() const;   // lies in D

    Element times(const Element& other) const;
    Element pow(unsigned n) const;
    /// Field norm into Q (quadratic: u^2 - d v^2; monoid: unused).
    Rat field_norm() const;

    /// Coordinates over (1, w), quadratic backend.
    std::pair<Rat, Rat> omega_coords() const;
    static Element from_omega_coords(const DomainHandle& dom, const Rat& x, const Rat& y);

    bool operator==(const Element& other) const;

private:
    Element() = default;
    DomainHandle dom_;
    Rat u_, v_;
    Divisor divisor_;
};

/// Nonzero fractional ideal in canonical form.
/// Quadratic: (1/den) * (Z*a + Z*(b + c*w)) with c | a, c | b, 0 <= b < a,
/// gcd(a, b, c, den) = 1. Monoid: finitely supported divisor, zeros stripped.
class Ideal {
public:
    static Ideal quadratic(DomainHandle dom, Int den, Int a, Int b, Int c);
    static Ideal monoid(DomainHandle dom, Divisor divisor);

    const DomainHandle& domain() const { return dom_; }
    Backend backend() const { return dom_->backend(); }

    const Int& den() const { return den_; }
    const Int& hnf_a() const { return a_; }
    const Int& hnf_b() const { return b_; }
    const Int& hnf_c() const { return c_; }
    const Divisor& divisor() const { return divisor_; }

    bool is_integral() const;
    bool is_unit_ideal() const;

    /// Fractional norm: quadratic a*c/den^2; monoid: 2^(sum of exponents)
    /// as a formal size (used for sort keys only).
    Rat norm() const;

    /// Total order used for all deterministic listings.
    std::strong_ordering cmp(const Ideal& other) const;
    bool operator==(const Ideal& other) const;

private:
    Ideal() = default;
    DomainHandle dom_;
    Int den_ = 1, a_ = 1, b_ = 0, c_ = 1;
    Divisor divisor_;
};

/// A maximal star-ideal together with its residue descriptor.
class MaxIdeal {
public:
    MaxIdeal(Ideal ideal, Int prime_below, std::optional<Int> root, bool inert);
    MaxIdeal(Ideal ideal, std::string label);

    const Ideal& ideal() const { return ideal_; }
    const Int& prime_below() const { return prime_below_; }
    const std::optional<Int>& root() const { return root_; }
    bool inert() const { return inert_; }
    const std::string& label() const { return label_; }

    std::strong_ordering cmp(const MaxIdeal& other) const { return ideal_.cmp(other.ideal()); }
    bool operator==(const MaxIdeal& other) const { return ideal_ == other.ideal_; }

private:
    Ideal ideal_;
    Int prime_below_ = 0;
    std::optional<Int> root_;
    bool inert_ = false;
    std::string label_;
};

/// Invariant factors of a finite abelian group; empty list = trivial group.
struct GroupDescriptor {
    std::vector<Int> invariant_factors;  // each divides the next
    Int exponent = 1;                    // lcm of factors, 1 = trivial

    bool trivial() const { return invariant_factors.empty(); }
    bool operator==(const GroupDescriptor&) const = default;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

inline constexpr long long kDefaultSupidealCap = 1000000;    // quotient size
inline constexpr long long kDefaultDiscriminantCap = 1000000;

void require_same_domain(const Ideal& lhs, const Ideal& rhs);

Ideal unit_ideal(const DomainHandle& dom);
Ideal principal_ideal(const Element& x);

Ideal ideal_from_generators(const DomainHandle& dom, const std::vector<Element>& gens);
Ideal ideal_product(const Ideal& lhs, const Ideal& rhs);
Ideal ideal_sum(const Ideal& lhs, const Ideal& rhs);
Ideal ideal_intersect(const Ideal& lhs, const Ideal& rhs);
/// {x in K : x*J <= I}.
Ideal ideal_colon(const Ideal& numerator, const Ideal& denominator);
Ideal ideal_inverse(const Ideal& ideal);  // colon(D, I)
Ideal ideal_scale(const Ideal& ideal, const Element& x);
Ideal ideal_power(const Ideal& ideal, unsigned n);

bool ideal_contains(const Ideal& ideal, const Element& x);
bool ideal_subset(const Ideal& inner, const Ideal& outer);

enum class StarOp;  // defined in star.hpp

/// Complete, deterministically ordered list of maximal star-ideals over I.
std::vector<MaxIdeal> maximal_ideals_containing(const DomainHandle& dom, const Ideal& ideal,
                                                StarOp star);

/// The M-component I*D_M `intersect` D of an integral ideal (D when I is not
/// inside M).
Ideal local_contract(const DomainHandle& dom, const Ideal& ideal, const MaxIdeal& max_ideal);

std::optional<Element> is_principal(const DomainHandle& dom, const Ideal& ideal);

/// k in K with k*J = I, if the ideals are isomorphic as D-modules.
std::optional<Element> find_scalar(const DomainHandle& dom, const Ideal& target, const Ideal& source);

/// All integral ideals J with I <= J <= D, deterministically ordered
/// (I and D included). Throws BoundExceeded above the cap.
std::vector<Ideal> enumerate_supideals(const DomainHandle& dom, const Ideal& ideal,
                                       long long cap = kDefaultSupidealCap);

GroupDescriptor class_group(const DomainHandle& dom, StarOp star,
                            long long discriminant_cap = kDefaultDiscriminantCap);

/// Distinct prime factors, ascending. Desk scale trial division.
std::vector<Int> prime_factors(const Int& n);

}  // namespace starideal
