#include "starideal/domain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>

#include "starideal/star.hpp"
#include "quad_lattice.hpp"

namespace starideal {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonSquarefree: return "NonSquarefree";
        case Errc::BadConductor: return "BadConductor";
        case Errc::BadClassVector: return "BadClassVector";
        case Errc::ZeroIdeal: return "ZeroIdeal";
        case Errc::MixedDomains: return "MixedDomains";
        case Errc::NotProper: return "NotProper";
        case Errc::NotIntegral: return "NotIntegral";
        case Errc::NotStarClosed: return "NotStarClosed";
        case Errc::BoundExceeded: return "BoundExceeded";
        case Errc::NotHomog: return "NotHomog";
        case Errc::InvalidCertificate: return "InvalidCertificate";
        case Errc::UnitInput: return "UnitInput";
        case Errc::ZeroInput: return "ZeroInput";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::EmptySample: return "EmptySample";
        case Errc::ParseError: return "ParseError";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Domain
// ---------------------------------------------------------------------------

DomainHandle Domain::create(const DomainSpec& spec) {
    auto dom = std::shared_ptr<Domain>(new Domain());
    dom->spec_ = spec;
    if (const auto* q = std::get_if<QuadraticOrderSpec>(&spec)) {
        dom->backend_ = Backend::QuadraticOrder;
        if (q->d == 0 || q->d == 1 || !is_squarefree(q->d))
            throw DomainError(Errc::NonSquarefree, "d must be squarefree and not 0 or 1");
        if (q->f < 1) throw DomainError(Errc::BadConductor, "conductor must be >= 1");
        auto& data = dom->quad_;
        data.d = q->d;
        data.f = q->f;
        Int f(q->f), d(q->d);
        if (floor_mod(Int(q->d), Int(4)) == 1) {
            // w = f(1 + sqrt(d))/2
            data.trace = f;
            data.norm = f * f * (1 - d) / 4;
            data.omega_u = Rat(f, 2);
            data.omega_v = Rat(f, 2);
        } else {
            // w = f sqrt(d)
            data.trace = 0;
            data.norm = -f * f * d;
            data.omega_u = 0;
            data.omega_v = Rat(f);
        }
        data.disc = data.trace * data.trace - 4 * data.norm;
    } else {
        dom->backend_ = Backend::KrullMonoid;
        const auto& m = std::get<KrullMonoidSpec>(spec);
        auto& data = dom->monoid_;
        for (const Int& n : m.class_group) {
            if (n < 1) throw DomainError(Errc::BadClassVector, "invariant factors must be positive");
            data.invariants.push_back(n);
        }
        for (const auto& p : m.primes) {
            if (p.label.empty())
                throw DomainError(Errc::BadClassVector, "empty prime label");
            if (data.index.count(p.label))
                throw DomainError(Errc::BadClassVector, "duplicate prime label '" + p.label + "'");
            if (p.cls.size() != data.invariants.size())
                throw DomainError(Errc::BadClassVector,
                                  "class vector length mismatch for '" + p.label + "'");
            KrullPrimeSpec reduced = p;
            for (std::size_t i = 0; i < reduced.cls.size(); ++i) {
                if (reduced.cls[i] < 0 || reduced.cls[i] >= data.invariants[i])
                    throw DomainError(Errc::BadClassVector,
                                      "class vector not reduced for '" + p.label + "'");
            }
            data.index[p.label] = data.primes.size();
            data.primes.push_back(std::move(reduced));
        }
    }
    return dom;
}

DomainHandle make_domain(const DomainSpec& spec) { return Domain::create(spec); }

std::size_t Domain::monoid_prime_index(const std::string& label) const {
    auto it = monoid_.index.find(label);
    if (it == monoid_.index.end())
        throw DomainError(Errc::ParseError, "unknown prime label '" + label + "'");
    return it->second;
}

std::pair<Int, Int> Domain::fundamental_unit(const Int& cap) const {
    if (backend_ != Backend::QuadraticOrder || quad_.d < 0)
        throw DomainError(Errc::Internal, "fundamental unit requested outside a real quadratic order");
    std::lock_guard<std::mutex> lock(quad_.unit_mutex);
    if (quad_.unit) return *quad_.unit;
    const Int& disc = quad_.disc;
    for (Int y = 1; y <= cap; ++y) {
        Int base = disc * y * y;
        for (int sgn = 0; sgn < 2; ++sgn) {
            Int rhs = sgn == 0 ? Int(base - 4) : Int(base + 4);
            auto root = exact_sqrt(rhs);
            if (!root) continue;
            Int two_x = *root - quad_.trace * y;
            if (two_x % 2 != 0) continue;
            quad_.unit = std::make_pair(Int(two_x / 2), y);
            return *quad_.unit;
        }
    }
    throw DomainError(Errc::BoundExceeded, "fundamental unit search exhausted the cap");
}

// ---------------------------------------------------------------------------
// Element
// ---------------------------------------------------------------------------

namespace {

void strip_zeros(Divisor& d) {
    for (auto it = d.begin(); it != d.end();) {
        if (it->second == 0) it = d.erase(it);
        else ++it;
    }
}

bool monoid_class_is_zero(const Domain& dom, const Divisor& divisor) {
    const auto& inv = dom.monoid_invariants();
    std::vector<Int> sum(inv.size(), Int(0));
    for (const auto& [label, e] : divisor) {
        const auto& cls = dom.monoid_primes()[dom.monoid_prime_index(label)].cls;
        for (std::size_t i = 0; i < inv.size(); ++i) sum[i] += e * cls[i];
    }
    for (std::size_t i = 0; i < inv.size(); ++i)
        if (floor_mod(sum[i], inv[i]) != 0) return false;
    return true;
}

}  // namespace

Element Element::quadratic(DomainHandle dom, Rat u, Rat v) {
    if (dom->backend() != Backend::QuadraticOrder)
        throw DomainError(Errc::MixedDomains, "quadratic element in a non-quadratic domain");
    Element e;
    e.dom_ = std::move(dom);
    e.u_ = std::move(u);
    e.v_ = std::move(v);
    return e;
}

Element Element::monoid(DomainHandle dom, Divisor divisor) {
    if (dom->backend() != Backend::KrullMonoid)
        throw DomainError(Errc::MixedDomains, "monoid element in a non-monoid domain");
    strip_zeros(divisor);
    for (const auto& [label, e] : divisor) dom->monoid_prime_index(label);
    if (!monoid_class_is_zero(*dom, divisor))
        throw DomainError(Errc::ParseError, "divisor class sum is not zero: not an element");
    Element e;
    e.dom_ = std::move(dom);
    e.divisor_ = std::move(divisor);
    return e;
}

bool Element::is_zero() const {
    return backend() == Backend::QuadraticOrder && u_ == 0 && v_ == 0;
}

bool Element::is_integral() const {
    if (backend() == Backend::KrullMonoid) {
        for (const auto& [label, e] : divisor_)
            if (e < 0) return false;
        return true;
    }
    auto [x, y] = omega_coords();
    return is_integer(x) && is_integer(y);
}

bool Element::is_unit() const {
    if (backend() == Backend::KrullMonoid) return divisor_.empty();
    if (is_zero() || !is_integral()) return false;
    Rat n = field_norm();
    return n == 1 || n == -1;
}

Element Element::times(const Element& other) const {
    if (!dom_->same_domain(*other.dom_))
        throw DomainError(Errc::MixedDomains, "element product across domains");
    if (backend() == Backend::KrullMonoid) {
        Divisor d = divisor_;
        for (const auto& [label, e] : other.divisor_) d[label] += e;
        strip_zeros(d);
        Element out;
        out.dom_ = dom_;
        out.divisor_ = std::move(d);
        return out;
    }
    Rat d(dom_->quad_d());
    Element out;
    out.dom_ = dom_;
    out.u_ = u_ * other.u_ + d * v_ * other.v_;
    out.v_ = u_ * other.v_ + v_ * other.u_;
    return out;
}

Element Element::pow(unsigned n) const {
    Element acc = backend() == Backend::KrullMonoid ? Element::monoid(dom_, {})
                                                    : Element::quadratic(dom_, 1, 0);
    for (unsigned i = 0; i < n; ++i) acc = acc.times(*this);
    return acc;
}

Rat Element::field_norm() const {
    if (backend() == Backend::KrullMonoid)
        throw DomainError(Errc::Internal, "field norm is a quadratic-backend notion");
    Rat d(dom_->quad_d());
    return u_ * u_ - d * v_ * v_;
}

std::pair<Rat, Rat> Element::omega_coords() const {
    if (backend() == Backend::KrullMonoid)
        throw DomainError(Errc::Internal, "omega coordinates on a monoid element");
    Rat ou = dom_->quad_omega_u(), ov = dom_->quad_omega_v();
    Rat y = v_ / ov;
    Rat x = u_ - y * ou;
    return {x, y};
}

Element Element::from_omega_coords(const DomainHandle& dom, const Rat& x, const Rat& y) {
    Rat ou = dom->quad_omega_u(), ov = dom->quad_omega_v();
    return Element::quadratic(dom, x + y * ou, y * ov);
}

bool Element::operator==(const Element& other) const {
    if (!dom_->same_domain(*other.dom_)) return false;
    if (backend() == Backend::KrullMonoid) return divisor_ == other.divisor_;
    return u_ == other.u_ && v_ == other.v_;
}

// ---------------------------------------------------------------------------
// Ideal
// ---------------------------------------------------------------------------

namespace {

quad::Lat to_lat(const Ideal& ideal) {
    return quad::Lat{ideal.den(), ideal.hnf_a(), ideal.hnf_b(), ideal.hnf_c()};
}

}  // namespace

Ideal Ideal::quadratic(DomainHandle dom, Int den, Int a, Int b, Int c) {
    if (dom->backend() != Backend::QuadraticOrder)
        throw DomainError(Errc::MixedDomains, "hnf ideal in a non-quadratic domain");
    quad::Lat lat = quad::canonicalize(std::move(den), std::move(a), std::move(b), std::move(c));
    if (!quad::is_stable(*dom, lat.a, lat.b, lat.c))
        throw DomainError(Errc::ParseError, "module is not stable under the order generator");
    Ideal out;
    out.dom_ = std::move(dom);
    out.den_ = std::move(lat.den);
    out.a_ = std::move(lat.a);
    out.b_ = std::move(lat.b);
    out.c_ = std::move(lat.c);
    return out;
}

Ideal Ideal::monoid(DomainHandle dom, Divisor divisor) {
    if (dom->backend() != Backend::KrullMonoid)
        throw DomainError(Errc::MixedDomains, "divisor ideal in a non-monoid domain");
    strip_zeros(divisor);
    for (const auto& [label, e] : divisor) dom->monoid_prime_index(label);
    Ideal out;
    out.dom_ = std::move(dom);
    out.divisor_ = std::move(divisor);
    return out;
}

bool Ideal::is_integral() const {
    if (backend() == Backend::KrullMonoid) {
        for (const auto& [label, e] : divisor_)
            if (e < 0) return false;
        return true;
    }
    return den_ == 1;
}

bool Ideal::is_unit_ideal() const {
    if (backend() == Backend::KrullMonoid) return divisor_.empty();
    return den_ == 1 && a_ == 1 && c_ == 1;
}

Rat Ideal::norm() const {
    if (backend() == Backend::KrullMonoid) {
        // Formal size 2^(sum of exponents), for deterministic ordering only.
        Int total = 0;
        for (const auto& [label, e] : divisor_) total += e;
        Rat out = 1;
        for (Int i = 0; i < total; ++i) out *= 2;
        for (Int i = 0; i > total; --i) out /= 2;
        return out;
    }
    return Rat(a_ * c_) / Rat(den_ * den_);
}

std::strong_ordering Ideal::cmp(const Ideal& other) const {
    auto rat_cmp = [](const Rat& l, const Rat& r) {
        if (l < r) return std::strong_ordering::less;
        if (r < l) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    };
    if (backend() == Backend::KrullMonoid) {
        if (auto c = rat_cmp(norm(), other.norm()); c != 0) return c;
        auto l = divisor_.begin(), r = other.divisor_.begin();
        for (; l != divisor_.end() && r != other.divisor_.end(); ++l, ++r) {
            if (auto c = l->first.compare(r->first); c != 0)
                return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
            if (l->second != r->second)
                return l->second < r->second ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
        }
        if (l != divisor_.end()) return std::strong_ordering::greater;
        if (r != other.divisor_.end()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }
    if (auto c = rat_cmp(norm(), other.norm()); c != 0) return c;
    auto int_cmp = [](const Int& l, const Int& r) {
        if (l < r) return std::strong_ordering::less;
        if (r < l) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    };
    if (auto c = int_cmp(den_, other.den_); c != 0) return c;
    if (auto c = int_cmp(a_, other.a_); c != 0) return c;
    if (auto c = int_cmp(b_, other.b_); c != 0) return c;
    return int_cmp(c_, other.c_);
}

bool Ideal::operator==(const Ideal& other) const {
    if (!dom_->same_domain(*other.dom_)) return false;
    if (backend() == Backend::KrullMonoid) return divisor_ == other.divisor_;
    return den_ == other.den_ && a_ == other.a_ && b_ == other.b_ && c_ == other.c_;
}

MaxIdeal::MaxIdeal(Ideal ideal, Int prime_below, std::optional<Int> root, bool inert)
    : ideal_(std::move(ideal)), prime_below_(std::move(prime_below)), root_(std::move(root)),
      inert_(inert) {}

MaxIdeal::MaxIdeal(Ideal ideal, std::string label)
    : ideal_(std::move(ideal)), label_(std::move(label)) {}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

void require_same_domain(const Ideal& lhs, const Ideal& rhs) {
    if (!lhs.domain()->same_domain(*rhs.domain()))
        throw DomainError(Errc::MixedDomains, "ideals from different domains");
}

namespace {

Ideal from_lat(const DomainHandle& dom, const quad::Lat& lat) {
    return Ideal::quadratic(dom, lat.den, lat.a, lat.b, lat.c);
}

const Divisor& div_of(const Ideal& ideal) { return ideal.divisor(); }

Ideal monoid_pointwise(const DomainHandle& dom, const Divisor& lhs, const Divisor& rhs,
                       const std::function<Int(const Int&, const Int&)>& combine) {
    Divisor out = lhs;
    for (const auto& [label, e] : rhs) out.try_emplace(label, 0);
    for (auto& [label, e] : out) {
        auto it = rhs.find(label);
        e = combine(e, it == rhs.end() ? Int(0) : it->second);
    }
    return Ideal::monoid(dom, std::move(out));
}

}  // namespace

Ideal unit_ideal(const DomainHandle& dom) {
    if (dom->backend() == Backend::KrullMonoid) return Ideal::monoid(dom, {});
    return Ideal::quadratic(dom, 1, 1, 0, 1);
}

Ideal principal_ideal(const Element& x) {
    if (x.is_zero()) throw DomainError(Errc::ZeroInput, "principal ideal of zero");
    const DomainHandle& dom = x.domain();
    if (dom->backend() == Backend::KrullMonoid) return Ideal::monoid(dom, x.divisor());
    auto [cx, cy] = x.omega_coords();
    return from_lat(dom, quad::from_elements(*dom, {{cx, cy}}));
}

Ideal ideal_from_generators(const DomainHandle& dom, const std::vector<Element>& gens) {
    if (gens.empty()) throw DomainError(Errc::ZeroIdeal, "no generators");
    if (dom->backend() == Backend::KrullMonoid) {
        Divisor out;
        bool first = true;
        for (const Element& g : gens) {
            if (!g.domain()->same_domain(*dom))
                throw DomainError(Errc::MixedDomains, "generator from another domain");
            if (first) {
                out = g.divisor();
                first = false;
                continue;
            }
            // gcd of divisors: componentwise min over the union support
            Divisor next;
            for (const auto& [label, e] : out) {
                auto it = g.divisor().find(label);
                next[label] = std::min(e, it == g.divisor().end() ? Int(0) : it->second);
            }
            for (const auto& [label, e] : g.divisor())
                if (!out.count(label)) next[label] = std::min(Int(0), e);
            out = std::move(next);
        }
        return Ideal::monoid(dom, std::move(out));
    }
    std::vector<std::pair<Rat, Rat>> coords;
    for (const Element& g : gens) {
        if (!g.domain()->same_domain(*dom))
            throw DomainError(Errc::MixedDomains, "generator from another domain");
        if (g.is_zero()) continue;
        coords.push_back(g.omega_coords());
    }
    if (coords.empty()) throw DomainError(Errc::ZeroIdeal, "all generators zero");
    return from_lat(dom, quad::from_elements(*dom, coords));
}

Ideal ideal_product(const Ideal& lhs, const Ideal& rhs) {
    require_same_domain(lhs, rhs);
    const DomainHandle& dom = lhs.domain();
    if (lhs.backend() == Backend::KrullMonoid)
        return monoid_pointwise(dom, div_of(lhs), div_of(rhs),
                                [](const Int& a, const Int& b) { return a + b; });
    return from_lat(dom, quad::mul(*dom, to_lat(lhs), to_lat(rhs)));
}

Ideal ideal_sum(const Ideal& lhs, const Ideal& rhs) {
    require_same_domain(lhs, rhs);
    const DomainHandle& dom = lhs.domain();
    if (lhs.backend() == Backend::KrullMonoid)
        return monoid_pointwise(dom, div_of(lhs), div_of(rhs),
                                [](const Int& a, const Int& b) { return std::min(a, b); });
    return from_lat(dom, quad::add(to_lat(lhs), to_lat(rhs)));
}

Ideal ideal_intersect(const Ideal& lhs, const Ideal& rhs) {
    require_same_domain(lhs, rhs);
    const DomainHandle& dom = lhs.domain();
    if (lhs.backend() == Backend::KrullMonoid)
        return monoid_pointwise(dom, div_of(lhs), div_of(rhs),
                                [](const Int& a, const Int& b) { return std::max(a, b); });
    return from_lat(dom, quad::intersect(to_lat(lhs), to_lat(rhs)));
}

Ideal ideal_colon(const Ideal& numerator, const Ideal& denominator) {
    require_same_domain(numerator, denominator);
    const DomainHandle& dom = numerator.domain();
    if (numerator.backend() == Backend::KrullMonoid)
        return monoid_pointwise(dom, div_of(numerator), div_of(denominator),
                                [](const Int& a, const Int& b) { return a - b; });
    return from_lat(dom, quad::colon(*dom, to_lat(numerator), to_lat(denominator)));
}

Ideal ideal_inverse(const Ideal& ideal) {
    return ideal_colon(unit_ideal(ideal.domain()), ideal);
}

Ideal ideal_scale(const Ideal& ideal, const Element& x) {
    if (x.is_zero()) throw DomainError(Errc::ZeroInput, "scaling an ideal by zero");
    const DomainHandle& dom = ideal.domain();
    if (!x.domain()->same_domain(*dom))
        throw DomainError(Errc::MixedDomains, "scaling element from another domain");
    if (ideal.backend() == Backend::KrullMonoid) {
        Divisor out = ideal.divisor();
        for (const auto& [label, e] : x.divisor()) out[label] += e;
        return Ideal::monoid(dom, std::move(out));
    }
    auto [cx, cy] = x.omega_coords();
    return from_lat(dom, quad::scale(*dom, to_lat(ideal), cx, cy));
}

Ideal ideal_power(const Ideal& ideal, unsigned n) {
    Ideal acc = unit_ideal(ideal.domain());
    for (unsigned i = 0; i < n; ++i) acc = ideal_product(acc, ideal);
    return acc;
}

bool ideal_contains(const Ideal& ideal, const Element& x) {
    if (!x.domain()->same_domain(*ideal.domain()))
        throw DomainError(Errc::MixedDomains, "membership across domains");
    if (ideal.backend() == Backend::KrullMonoid) {
        if (x.is_zero()) return true;
        for (const auto& [label, e] : ideal.divisor()) {
            auto it = x.divisor().find(label);
            Int v = it == x.divisor().end() ? Int(0) : it->second;
            if (v < e) return false;
        }
        for (const auto& [label, e] : x.divisor())
            if (e < 0 && !ideal.divisor().count(label)) return false;
        return true;
    }
    if (x.is_zero()) return true;
    auto [cx, cy] = x.omega_coords();
    return quad::member(to_lat(ideal), cx, cy);
}

bool ideal_subset(const Ideal& inner, const Ideal& outer) {
    require_same_domain(inner, outer);
    if (inner.backend() == Backend::KrullMonoid) {
        // smaller ideal = larger divisor
        Divisor all = inner.divisor();
        for (const auto& [label, e] : outer.divisor()) all.try_emplace(label, 0);
        for (const auto& [label, unused] : all) {
            auto li = inner.divisor().find(label);
            auto ro = outer.divisor().find(label);
            Int vi = li == inner.divisor().end() ? Int(0) : li->second;
            Int vo = ro == outer.divisor().end() ? Int(0) : ro->second;
            if (vi < vo) return false;
        }
        return true;
    }
    return quad::subset(to_lat(inner), to_lat(outer));
}

// ---------------------------------------------------------------------------
// Factoring helpers
// ---------------------------------------------------------------------------

std::vector<Int> prime_factors(const Int& n) {
    if (n <= 0) throw DomainError(Errc::Internal, "prime_factors of a non-positive integer");
    std::vector<Int> out;
    Int m = n;
    auto pull = [&](const Int& p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    };
    pull(2);
    for (Int p = 3; p * p <= m; p += 2) {
        if (p > 10000000)
            throw DomainError(Errc::BoundExceeded, "norm has a prime factor beyond desk scale");
        pull(p);
    }
    if (m > 1) out.push_back(m);
    return out;
}

namespace {

// roots of x^2 + trace*x + norm modulo p
std::vector<Int> quad_roots_mod(const Domain& dom, const Int& p) {
    std::vector<Int> roots;
    if (p <= Int(std::numeric_limits<long long>::max() / 4)) {
        unsigned long long pp = static_cast<unsigned long long>(p);
        unsigned long long tm = static_cast<unsigned long long>(floor_mod(dom.quad_trace(), p));
        unsigned long long nm = static_cast<unsigned long long>(floor_mod(dom.quad_norm(), p));
        for (unsigned long long t = 0; t < pp; ++t) {
            unsigned __int128 val = (unsigned __int128)t * t + (unsigned __int128)tm * t + nm;
            if (val % pp == 0) roots.emplace_back(t);
        }
    } else {
        for (Int t = 0; t < p; ++t) {
            if (floor_mod(Int(t * t + dom.quad_trace() * t + dom.quad_norm()), p) == 0)
                roots.push_back(t);
        }
    }
    return roots;
}

std::vector<MaxIdeal> quad_maximals_above(const DomainHandle& dom, const Int& p) {
    std::vector<MaxIdeal> out;
    auto roots = quad_roots_mod(*dom, p);
    if (roots.empty()) {
        out.emplace_back(Ideal::quadratic(dom, 1, p, 0, p), p, std::nullopt, true);
    } else {
        for (const Int& t : roots)
            out.emplace_back(Ideal::quadratic(dom, 1, p, t, 1), p, t, false);
    }
    return out;
}

void require_integral_proper(const Ideal& ideal) {
    if (!ideal.is_integral())
        throw DomainError(Errc::NotProper, "ideal is not integral");
    if (ideal.is_unit_ideal())
        throw DomainError(Errc::NotProper, "ideal is the whole domain");
}

}  // namespace

std::vector<MaxIdeal> maximal_ideals_containing(const DomainHandle& dom, const Ideal& ideal,
                                                StarOp /*star*/) {
    // On both backends the maximal star-ideals agree for all four operations
    // (quadratic orders: every maximal ideal is divisorial; monoid: supports).
    // The star argument stays in the signature; the collapse is asserted by
    // the verify suite rather than assumed elsewhere.
    if (!ideal.domain()->same_domain(*dom))
        throw DomainError(Errc::MixedDomains, "ideal from another domain");
    require_integral_proper(ideal);
    std::vector<MaxIdeal> out;
    if (dom->backend() == Backend::KrullMonoid) {
        for (const auto& [label, e] : ideal.divisor())
            if (e > 0) out.emplace_back(Ideal::monoid(dom, {{label, 1}}), label);
    } else {
        Int nrm = ideal.hnf_a() * ideal.hnf_c();
        for (const Int& p : prime_factors(nrm)) {
            for (MaxIdeal& m : quad_maximals_above(dom, p))
                if (ideal_subset(ideal, m.ideal())) out.push_back(std::move(m));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const MaxIdeal& l, const MaxIdeal& r) { return l.cmp(r) < 0; });
    return out;
}

Ideal local_contract(const DomainHandle& dom, const Ideal& ideal, const MaxIdeal& max_ideal) {
    if (!ideal.domain()->same_domain(*dom) || !max_ideal.ideal().domain()->same_domain(*dom))
        throw DomainError(Errc::MixedDomains, "contract across domains");
    if (!ideal.is_integral()) throw DomainError(Errc::NotIntegral, "contract of a fractional ideal");
    if (dom->backend() == Backend::KrullMonoid) {
        const std::string& label = max_ideal.label();
        auto it = ideal.divisor().find(label);
        if (it == ideal.divisor().end() || it->second <= 0) return unit_ideal(dom);
        return Ideal::monoid(dom, {{label, it->second}});
    }
    if (!ideal_subset(ideal, max_ideal.ideal())) return unit_ideal(dom);
    auto maximals = maximal_ideals_containing(dom, ideal, StarOp::t);
    std::vector<MaxIdeal> others;
    for (const MaxIdeal& m : maximals)
        if (!(m == max_ideal)) others.push_back(m);
    if (others.empty()) return ideal;
    Ideal joint = others.front().ideal();
    for (std::size_t i = 1; i < others.size(); ++i)
        joint = ideal_intersect(joint, others[i].ideal());
    // Pick s inside every other maximal ideal over I but outside M.
    Element s = Element::from_omega_coords(dom, Rat(joint.hnf_a()), Rat(0));
    if (ideal_contains(max_ideal.ideal(), s))
        s = Element::from_omega_coords(dom, Rat(joint.hnf_b()), Rat(joint.hnf_c()));
    if (ideal_contains(max_ideal.ideal(), s))
        throw DomainError(Errc::Internal, "no saturation element outside the maximal ideal");
    auto [sx, sy] = s.omega_coords();
    auto inv = quad::field_inv(*dom, sx, sy);
    Ideal current = ideal;
    const quad::Lat unit_lat{1, 1, 0, 1};
    for (;;) {
        quad::Lat shifted = quad::scale(*dom, to_lat(current), inv.first, inv.second);
        Ideal next = from_lat(dom, quad::intersect(shifted, unit_lat));
        if (next == current) return current;
        current = next;
    }
}

std::optional<Element> is_principal(const DomainHandle& dom, const Ideal& ideal) {
    if (!ideal.domain()->same_domain(*dom))
        throw DomainError(Errc::MixedDomains, "ideal from another domain");
    if (dom->backend() == Backend::KrullMonoid) {
        if (!monoid_class_is_zero(*dom, ideal.divisor())) return std::nullopt;
        Element out = Element::monoid(dom, ideal.divisor());
        return out;
    }
    quad::Lat lat = to_lat(ideal);
    for (const auto& [gx, gy] : quad::norm_elements(*dom, lat, quad::lat_norm(lat))) {
        if (quad::from_elements(*dom, {{gx, gy}}) == lat)
            return Element::from_omega_coords(dom, gx, gy);
    }
    return std::nullopt;
}

std::optional<Element> find_scalar(const DomainHandle& dom, const Ideal& target,
                                   const Ideal& source) {
    require_same_domain(target, source);
    if (dom->backend() == Backend::KrullMonoid) {
        Divisor diff;
        Divisor all = target.divisor();
        for (const auto& [label, e] : source.divisor()) all.try_emplace(label, 0);
        for (const auto& [label, unused] : all) {
            auto ti = target.divisor().find(label);
            auto si = source.divisor().find(label);
            Int vt = ti == target.divisor().end() ? Int(0) : ti->second;
            Int vs = si == source.divisor().end() ? Int(0) : si->second;
            if (vt != vs) diff[label] = vt - vs;
        }
        if (!monoid_class_is_zero(*dom, diff)) return std::nullopt;
        return Element::monoid(dom, std::move(diff));
    }
    Ideal candidates = ideal_colon(target, source);
    Rat target_norm = target.norm() / source.norm();
    for (const auto& [gx, gy] : quad::norm_elements(*dom, to_lat(candidates), target_norm)) {
        Element k = Element::from_omega_coords(dom, gx, gy);
        if (ideal_scale(source, k) == target) return k;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Supideal enumeration
// ---------------------------------------------------------------------------

namespace {

std::vector<Int> all_divisors(const Int& n) {
    std::vector<Int> divs = {1};
    Int m = n;
    for (const Int& p : prime_factors(n)) {
        Int pk = 1;
        std::size_t base = divs.size();
        Int q = m;
        int e = 0;
        while (q % p == 0) { q /= p; ++e; }
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

std::vector<Ideal> enumerate_supideals(const DomainHandle& dom, const Ideal& ideal,
                                       long long cap) {
    if (!ideal.domain()->same_domain(*dom))
        throw DomainError(Errc::MixedDomains, "ideal from another domain");
    if (!ideal.is_integral()) throw DomainError(Errc::NotProper, "supideals of a fractional ideal");
    std::vector<Ideal> out;
    if (dom->backend() == Backend::KrullMonoid) {
        Int count = 1;
        for (const auto& [label, e] : ideal.divisor()) {
            count *= e + 1;
            if (count > cap)
                throw DomainError(Errc::BoundExceeded,
                                  "supideal count exceeds the cap");
        }
        std::vector<Divisor> acc = {{}};
        for (const auto& [label, e] : ideal.divisor()) {
            std::vector<Divisor> next;
            for (const Divisor& d : acc) {
                for (Int k = 0; k <= e; ++k) {
                    Divisor nd = d;
                    if (k > 0) nd[label] = k;
                    next.push_back(std::move(nd));
                }
            }
            acc = std::move(next);
        }
        for (Divisor& d : acc) out.push_back(Ideal::monoid(dom, std::move(d)));
    } else {
        Int nrm = ideal.hnf_a() * ideal.hnf_c();
        if (nrm > cap)
            throw DomainError(Errc::BoundExceeded,
                              "quotient size " + nrm.str() + " exceeds the cap");
        quad::Lat lat = to_lat(ideal);
        for (const Int& m : all_divisors(nrm)) {
            for (const Int& c : all_divisors(m)) {
                if (c * c > m) break;
                if (m % (c * c) != 0) continue;
                Int alpha = m / (c * c);  // A = alpha * c
                Int A = alpha * c;
                for (Int beta = 0; beta < alpha; ++beta) {
                    Int val = beta * beta + dom->quad_trace() * beta + dom->quad_norm();
                    if (val % alpha != 0) continue;
                    quad::Lat cand{1, A, beta * c, c};
                    if (quad::subset(lat, cand)) out.push_back(from_lat(dom, cand));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Ideal& l, const Ideal& r) {
        Rat ln = l.norm(), rn = r.norm();
        if (ln != rn) return ln > rn;  // smallest ideal (largest index) first
        return l.cmp(r) < 0;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Class group
// ---------------------------------------------------------------------------

namespace {

// Invariant factors of a finite abelian group given by an index table.
std::vector<Int> abelian_invariants_indexed(
    std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& op,
    std::size_t id) {
    if (n <= 1) return {};
    auto order_of = [&](std::size_t g) {
        Int k = 1;
        std::size_t x = g;
        while (x != id) {
            x = op(x, g);
            ++k;
        }
        return k;
    };
    std::vector<Int> orders(n);
    Int exponent = 1;
    for (std::size_t i = 0; i < n; ++i) {
        orders[i] = order_of(i);
        exponent = lcm(exponent, orders[i]);
    }
    std::size_t gen = id;
    for (std::size_t i = 0; i < n; ++i) {
        if (orders[i] == exponent) { gen = i; break; }
    }
    // Quotient by <gen>; a maximal-order cyclic subgroup is a direct summand.
    std::vector<std::size_t> cyclic = {id};
    std::size_t x = gen;
    while (x != id) { cyclic.push_back(x); x = op(x, gen); }
    std::vector<std::size_t> coset_min(n, SIZE_MAX);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
        if (coset_min[i] != SIZE_MAX) continue;
        std::size_t mn = i;
        std::vector<std::size_t> members;
        for (std::size_t c : cyclic) {
            std::size_t m = op(i, c);
            members.push_back(m);
            mn = std::min(mn, m);
        }
        for (std::size_t m : members) coset_min[m] = mn;
    }
    std::vector<std::size_t> rep_list;
    std::map<std::size_t, std::size_t> rep_index;
    for (std::size_t i = 0; i < n; ++i) {
        if (coset_min[i] == i) {
            rep_index[i] = rep_list.size();
            rep_list.push_back(i);
        }
    }
    auto qop = [&](std::size_t i, std::size_t j) {
        return rep_index.at(coset_min[op(rep_list[i], rep_list[j])]);
    };
    std::vector<Int> inner = abelian_invariants_indexed(rep_list.size(), qop,
                                                        rep_index.at(coset_min[id]));
    inner.push_back(exponent);
    return inner;
}

GroupDescriptor descriptor_from_factors(std::vector<Int> factors) {
    std::erase(factors, Int(1));
    GroupDescriptor out;
    out.invariant_factors = std::move(factors);
    out.exponent = 1;
    for (const Int& f : out.invariant_factors) out.exponent = lcm(out.exponent, f);
    return out;
}

}  // namespace

GroupDescriptor class_group(const DomainHandle& dom, StarOp star, long long discriminant_cap) {
    if (dom->backend() == Backend::KrullMonoid) {
        const auto& inv = dom->monoid_invariants();
        auto reduce = [&](std::vector<Int> v) {
            for (std::size_t i = 0; i < inv.size(); ++i) v[i] = floor_mod(v[i], inv[i]);
            return v;
        };
        std::vector<std::vector<Int>> elements = {std::vector<Int>(inv.size(), Int(0))};
        std::map<std::vector<Int>, std::size_t> index = {{elements[0], 0}};
        for (std::size_t head = 0; head < elements.size(); ++head) {
            for (const auto& p : dom->monoid_primes()) {
                std::vector<Int> next = elements[head];
                for (std::size_t i = 0; i < inv.size(); ++i) next[i] += p.cls[i];
                next = reduce(std::move(next));
                if (!index.count(next)) {
                    if (elements.size() >= 1000000)
                        throw DomainError(Errc::BoundExceeded, "class group too large");
                    index[next] = elements.size();
                    elements.push_back(std::move(next));
                }
            }
        }
        auto op = [&](std::size_t i, std::size_t j) {
            std::vector<Int> sum = elements[i];
            for (std::size_t k = 0; k < inv.size(); ++k) sum[k] += elements[j][k];
            return index.at(reduce(std::move(sum)));
        };
        return descriptor_from_factors(abelian_invariants_indexed(elements.size(), op, 0));
    }

    const Int& disc = dom->quad_disc();
    Int adisc = disc < 0 ? Int(-disc) : disc;
    if (adisc > discriminant_cap)
        throw DomainError(Errc::BoundExceeded, "discriminant exceeds the enumeration cap");
    Int bound;
    if (dom->quad_imaginary()) {
        double b = 2.0 * std::sqrt(static_cast<double>(adisc)) / 3.14159265358979323846;
        bound = Int(static_cast<long long>(b) + 2);
    } else {
        bound = isqrt(adisc) + 1;
    }
    // Primitive ideals of norm up to the bound, filtered per star.
    std::vector<Ideal> reps;  // class representatives, class of D first
    reps.push_back(unit_ideal(dom));
    for (Int n = 2; n <= bound; ++n) {
        for (Int t = 0; t < n; ++t) {
            Int val = t * t + dom->quad_trace() * t + dom->quad_norm();
            if (val % n != 0) continue;
            Ideal cand = Ideal::quadratic(dom, 1, n, t, 1);
            if (!is_star_ideal(dom, cand, star)) continue;
            if (!is_star_invertible(dom, cand, star)) continue;
            bool fresh = true;
            for (const Ideal& rep : reps) {
                if (find_scalar(dom, cand, rep)) { fresh = false; break; }
            }
            if (fresh) reps.push_back(std::move(cand));
        }
    }
    auto class_of = [&](const Ideal& ideal) {
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (find_scalar(dom, ideal, reps[i])) return i;
        throw DomainError(Errc::Internal, "ideal class not represented below the bound");
    };
    std::vector<std::vector<std::size_t>> table(reps.size(),
                                                std::vector<std::size_t>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i; j < reps.size(); ++j) {
            std::size_t k = class_of(closure(dom, ideal_product(reps[i], reps[j]), star));
            table[i][j] = table[j][i] = k;
        }
    auto op = [&](std::size_t i, std::size_t j) { return table[i][j]; };
    return descriptor_from_factors(abelian_invariants_indexed(reps.size(), op, 0));
}

}  // namespace starideal
