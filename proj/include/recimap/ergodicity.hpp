// Ergodicity diagnostics for a reciprocal transformation: classify the
// return map as a rigid rotation, search for exactly invariant finite
// interval unions, and check the invariant-proportion identity
// mu(E . S)/mu(E) == mu(S) on candidate invariant sets.

#pragma once

#include "recimap/first_return.hpp"

#include <optional>

namespace recimap {

struct RotationClassification {
    bool is_rotation = false;
    std::optional<Scalar> rotation_number;  // translation normalized to the unit circle
    std::optional<bool> irrational;
};

// Rescales the return map to [0,1) and decides whether it is the rigid
// rotation x -> x + alpha mod 1. Requires an empty residual; branch
// slopes other than 1 classify as "not a rotation" rather than erroring.
RotationClassification classify_rotation(const ReturnMapResult& r, const Interval& S);

struct InvariantSearchReport {
    std::vector<IntervalSet> found;  // exactly invariant, measure strictly between 0 and full
    bool exhausted = true;           // no seed hit a depth or complexity cutoff
    int refinement_depth = 0;
};

inline constexpr std::size_t kInvariantPieceBudget = 10'000;

// Saturates each seed under forward and backward images of m until the
// union stabilizes exactly or a budget trips. m must be a bijection onto
// its own support.
InvariantSearchReport invariant_search(const PAMap& m, const std::vector<IntervalSet>& seeds,
                                       int max_depth);

struct ErgodicityVerdict {
    enum class Status { ErgodicCertified, NotErgodicCertified, Unknown };
    Status status = Status::Unknown;
    std::optional<IntervalSet> witness;  // invariant set, for NotErgodicCertified
};

// Certifies ergodicity via the one implemented pathway (the return map is
// an irrational rigid rotation, and ergodicity lifts from the return map
// to F), or refutes it with an exact invariant set.
ErgodicityVerdict ergodicity_verdict(const ReciprocalSystem& sys,
                                     const RotationClassification& cls, int max_depth = 16);

struct ProportionConsistent {
    Scalar proportion_in_S;     // == mu(S)
    Scalar proportion_in_PhiS;  // == mu(Phi(S))
};
struct ProportionRefuted {
    Scalar lhs;  // mu(E . S)/mu(E)
    Scalar rhs;  // mu(S)
};
struct NotInvariant {};

using ProportionCheck = std::variant<ProportionConsistent, ProportionRefuted, NotInvariant>;

// For F-invariant E, the fraction of E inside S must equal mu(S) exactly
// (and the fraction inside Phi(S) must equal mu(Phi(S))).
ProportionCheck check_invariant_proportion(const ReciprocalSystem& sys, const IntervalSet& E);

// True iff S is contained in E exactly. Invariant sets of positive
// measure must contain S; sets that do not must satisfy Phi(E) != T(E).
bool contains_S_check(const ReciprocalSystem& sys, const IntervalSet& E);

}  // namespace recimap
