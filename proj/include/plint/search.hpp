#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plint/core.hpp"
#include "plint/forms.hpp"
#include "plint/pencils.hpp"

namespace plint {

/// The canonical points with every |coordinate| <= bound that lie off Supp D
/// and are S-integral, sorted lexicographically. Throws InvalidInput for
/// bound < 1. Work is split over `threads` workers; the output does not
/// depend on the thread count.
std::vector<ProjPoint> enumerate_integral_points(const FactoredDivisor& d, const PlaceSet& s, long bound,
                                                 unsigned threads = 1);

/// The member of a pencil through a point, or the marker for base points.
struct FiberKey {
    std::optional<P1Point> param;  // unset: BASE_POINT

    static FiberKey base_point() { return {}; }
    bool is_base_point() const { return !param.has_value(); }
    std::string to_string() const;  // "[s:t]" or "BASE_POINT"

    friend bool operator==(const FiberKey&, const FiberKey&) = default;
    /// BASE_POINT sorts first.
    friend bool operator<(const FiberKey& a, const FiberKey& b);
};

/// [G(P) : -F(P)] for a point on a non-base member, BASE_POINT when
/// F(P) = G(P) = 0.
FiberKey fiber_of(const ProjPoint& p, const Pencil& pencil);
std::map<FiberKey, long> fibers_hit(const std::vector<ProjPoint>& points, const Pencil& pencil);

/// The pairs u + v = 1 with u, v = +-prod_{p in S} p^e, |e| <= exponent_bound,
/// sorted. The list is complete only within the bound.
std::vector<std::pair<Rat, Rat>> solve_s_unit_bounded(const PlaceSet& s, long exponent_bound);

}  // namespace plint
