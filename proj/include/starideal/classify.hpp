#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "starideal/homog.hpp"

namespace starideal {

/// Honest answer for bounded existential searches.
struct TriState {
    enum class Value { Yes, No, Unknown };
    Value value = Value::Unknown;
    long long bound = 0;  // exhausted bound when Unknown

    static TriState yes() { return {Value::Yes, 0}; }
    static TriState no() { return {Value::No, 0}; }
    static TriState unknown(long long bound) { return {Value::Unknown, bound}; }

    bool is_yes() const { return value == Value::Yes; }
    bool is_no() const { return value == Value::No; }
    bool is_unknown() const { return value == Value::Unknown; }
    bool operator==(const TriState&) const = default;
};

/// Per-ideal taxonomy flags.
struct TypeReport {
    StarOp star = StarOp::t;
    std::optional<Ideal> subject;
    bool homog = false;
    std::optional<MaxIdeal> spawned;
    bool star_invertible = false;

    TriState type1, type2, super_homog, f_homog, af_homog, wf_homog, waf_homog;
    std::optional<long long> type2_witness;
    std::optional<long long> af_exponent;
    std::optional<long long> waf_exponent;
    bool wf_vacuous = false;   // granted because the ideal is not star-invertible
    bool waf_vacuous = false;
    std::string type1_provenance;
};

/// Throws on a violated implication (f => super and wf; af => super and waf;
/// type2 => type1; f => af; wf => waf). Unknown is compatible with anything.
void validate_implications(const TypeReport& report);

TypeReport classify_ideal(const DomainHandle& dom, const Ideal& ideal, StarOp star,
                          long long bound);

TriState is_rigid_element(const DomainHandle& dom, const Element& x, StarOp star);

struct EvidenceRecord {
    std::string flag;
    std::string kind;  // "counterexample" or "witness"
    std::optional<Ideal> subject;
    std::string note;
};

struct DomainReport {
    StarOp star = StarOp::t;
    std::size_t elements_factored = 0;
    std::size_t ideals_classified = 0;
    TriState sh, wkd, krull, irkt, gkd, wf_sh, waf_sh;
    std::optional<GroupDescriptor> cls;  // star-class group, when computable
    std::map<std::string, std::string> provenance;
    std::vector<EvidenceRecord> evidence;
    std::vector<TypeReport> factor_reports;  // one per distinct homog factor
};

DomainReport classify_domain(const DomainHandle& dom, StarOp star,
                             const std::vector<Element>& sample, long long bound);

}  // namespace starideal
