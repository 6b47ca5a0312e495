#include "recimap/systems.hpp"

#include <stdexcept>

namespace recimap {

PAMap make_iet(const IETSpec& spec) {
    const std::size_t k = spec.lengths.size();
    if (k == 0) throw std::invalid_argument("make_iet: no intervals");
    if (spec.permutation.size() != k)
        throw std::invalid_argument("make_iet: permutation size does not match lengths");

    std::vector<bool> seen(k, false);
    for (std::size_t rank : spec.permutation) {
        if (rank >= k || seen[rank]) throw std::invalid_argument("make_iet: permutation is not a bijection");
        seen[rank] = true;
    }

    Scalar total;
    for (const auto& len : spec.lengths) {
        if (!(len.sign() > 0)) throw std::invalid_argument("make_iet: lengths must be positive");
        total += len;
    }
    if (total != Scalar(1)) throw std::invalid_argument("make_iet: lengths must sum to 1");

    // Domain start of interval i, and image start of the interval with rank r.
    std::vector<Scalar> dom_lo(k), img_lo_by_rank(k);
    Scalar acc;
    for (std::size_t i = 0; i < k; ++i) {
        dom_lo[i] = acc;
        acc += spec.lengths[i];
    }
    std::vector<std::size_t> interval_of_rank(k);
    for (std::size_t i = 0; i < k; ++i) interval_of_rank[spec.permutation[i]] = i;
    acc = Scalar(0);
    for (std::size_t r = 0; r < k; ++r) {
        img_lo_by_rank[r] = acc;
        acc += spec.lengths[interval_of_rank[r]];
    }

    std::vector<AffineBranch> branches;
    branches.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        Interval dom(dom_lo[i], dom_lo[i] + spec.lengths[i]);
        Scalar offset = img_lo_by_rank[spec.permutation[i]] - dom_lo[i];
        branches.emplace_back(std::move(dom), Scalar(1), std::move(offset));
    }
    return PAMap(std::move(branches));
}

ScalingInvolution make_scaling_involution(const Scalar& s) {
    if (!(Scalar(0) < s && s < Scalar(1, 2)))
        throw std::invalid_argument("make_scaling_involution: requires 0 < s < 1/2");
    if (!s.is_rational())
        throw std::invalid_argument("make_scaling_involution: s must be rational (rho stays rational)");

    const Scalar one(1);
    const Scalar rho = (one - s) / s;
    // [0,s) -> [s,1) with slope rho; [s,1) -> [0,s) with slope 1/rho.
    std::vector<AffineBranch> branches;
    branches.emplace_back(Interval(Scalar(0), s), rho, s);
    branches.emplace_back(Interval(s, one), one / rho, -s / rho);
    PAMap map(std::move(branches));

    if (compose(map, map) != PAMap::identity(Interval(Scalar(0), one)))
        throw std::logic_error("make_scaling_involution: constructed map is not an involution");

    return ScalingInvolution{s, rho, std::move(map)};
}

ReciprocalSystem make_reciprocal(const IETSpec& T_spec, const Scalar& s) {
    std::int64_t d = 0;
    for (const auto& len : T_spec.lengths) {
        if (len.field_d() != 0) {
            if (d != 0 && d != len.field_d())
                throw std::invalid_argument("make_reciprocal: lengths mix distinct quadratic fields");
            d = len.field_d();
        }
    }

    PAMap T = make_iet(T_spec);
    ScalingInvolution Phi = make_scaling_involution(s);
    PAMap F = compose(Phi.as_map, T);

    const Interval unit(Scalar(0), Scalar(1));
    if (!F.is_bijection_on(unit))
        throw std::logic_error("make_reciprocal: F is not a bijection of [0,1)");
    const Scalar rho_inv = Scalar(1) / Phi.rho;
    for (const auto& br : F.branches()) {
        if (br.slope != Phi.rho && br.slope != rho_inv)
            throw std::logic_error("make_reciprocal: F has a slope other than rho or 1/rho");
    }

    ReciprocalSystem sys;
    sys.T_spec = T_spec;
    sys.T = std::move(T);
    sys.F = std::move(F);
    sys.S = Interval(Scalar(0), s);
    sys.rho = Phi.rho;
    sys.Phi = std::move(Phi);
    sys.field_d = d;
    return sys;
}

bool check_conjugacy(const ReciprocalSystem& sys) {
    const PAMap G = compose(sys.T, sys.Phi.as_map);
    return compose(sys.Phi.as_map, sys.F) == compose(G, sys.Phi.as_map);
}

}  // namespace recimap
