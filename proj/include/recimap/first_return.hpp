// Exact first-return induction: refines S = [0, s) into the pieces that
// come back to S after exactly n applications of F, together with the
// affine branch realizing each return. Also the conservativity
// certificates built on top of the return-map geometry.

#pragma once

#include "recimap/systems.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <variant>

namespace recimap {

struct ReturnBranch {
    Interval domain;          // within S
    int return_time;          // n >= 1
    AffineBranch map;         // x -> F^n(x) on the domain
    long long derivative_exponent;  // q with map.slope == rho^q; always n - 2

    Interval image() const { return map.image(); }
};

struct ReturnMapResult {
    std::vector<ReturnBranch> branches;  // ordered by domain.lo
    Scalar resolved_measure;
    IntervalSet residual;                // pieces unresolved within the budget
    int budget_used = 0;
};

struct BranchCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultBranchCap = 1'000'000;

// Breakpoint-refinement induction. `budget` bounds the number of
// F-applications per piece; `branch_cap` bounds the total number of
// pieces ever created (BranchCapExceeded when blown).
ReturnMapResult first_return(const ReciprocalSystem& sys, int budget,
                             std::size_t branch_cap = kDefaultBranchCap);

// The return map as a plain PAMap; requires an empty residual.
PAMap return_map_as_pamap(const ReturnMapResult& r);

struct ReturnTimeTable {
    std::map<int, Scalar> measure_by_time;
    Scalar unresolved;
};

ReturnTimeTable return_time_partition(const ReturnMapResult& r);

// S minus the union of branch images; nonempty means the return map is
// not surjective (a lower bound when the residual is nonempty).
IntervalSet check_surjective(const ReturnMapResult& r, const Interval& S);

struct ConservativeCertified {};
struct WanderingSetFound {
    Interval wandering;    // disjoint from all its forward return-map images
    Interval trap;         // absorbs the forward images; mapped strictly inside itself
    int horizon;           // iterates checked disjoint explicitly
};
struct ConservativityUnknown {};

using ConservativityCertificate =
    std::variant<ConservativeCertified, WanderingSetFound, ConservativityUnknown>;

// Certifies conservativity when no piece returns in one step, or exhibits
// a wandering interval via exact self-nesting of a contracting branch.
ConservativityCertificate conservativity_certificate(const ReciprocalSystem& sys,
                                                     const ReturnMapResult& r, int horizon = 20);

}  // namespace recimap
