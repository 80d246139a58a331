#pragma once

#include <array>
#include <string>
#include <vector>

#include "plint/core.hpp"
#include "plint/forms.hpp"

namespace plint {

/// A unit u of the ring of S-integers. validate() throws InvalidInput
/// unless u is a nonzero rational whose numerator and denominator are
/// supported on S.
struct UnitParam {
    Rat u;
    PlaceSet s;

    void validate() const;
};

/// A constructed point with its certificate: the affine triple before
/// reduction, the auxiliary unit t and the exact value of the dehomogenized
/// divisor form at the affine triple (which equals u).
struct ConstructedPoint {
    ProjPoint point;
    std::array<Rat, 3> affine;
    Rat u;
    Rat t;
    Rat value;
};

/// Y^{2 alpha + 1} + X (X Z + Y^2)^alpha.
Form third_type_form(long alpha);
/// Y^{3b+1} + X (X^2 Z + a X Y^2 + Y^3)^b (made primitive).
Form congruence_form(const Rat& a, long b);
/// Z^{3b+1} + X (X^2 Y + a X Z^2 + Z^3)^b: the congruence curve with Y and Z
/// exchanged. The full divisor also contains the line Z.
Form line_curve_form(const Rat& a, long b);
FactoredDivisor line_curve_divisor(const Rat& a, long b);

/// The point ((u-1)/u^{alpha m}, 1, (u^m - 1)/(u - 1) * u^{alpha m}); for
/// u = 1 the limit point [0 : 1 : m]. Throws ParameterViolation for alpha < 2
/// or m < 1.
ConstructedPoint third_type_point(long alpha, const UnitParam& u, long m);

/// The point ((u-1)/t^b, 1, t^b (t^{b+1} - t^b - a(u-1)) / (u-1)^2) with
/// t = u^a. Throws InvalidInput for u = 1, ParameterViolation for a < 0 or
/// b < 2, CongruenceFailure if the third coordinate is not an S-integer.
ConstructedPoint congruence_point(long a, long b, const UnitParam& u);
/// The same point with the second and third coordinates exchanged.
ConstructedPoint line_curve_congruence_point(long a, long b, const UnitParam& u);

/// Congruence construction for a rational S-integer a: t = u^m with m the
/// least natural number congruent to a modulo the non-S part of u - 1.
ConstructedPoint general_congruence_point(const Rat& a, long b, const UnitParam& u);

enum class ConstructionMode { ThirdType, Congruence, LineCurve, GeneralCongruence };

struct StreamParams {
    ConstructionMode mode = ConstructionMode::ThirdType;
    long alpha = 2, m = 1;  // third type
    Rat a = 1;              // congruence modes (natural unless GeneralCongruence)
    long b = 2;
    /// Largest exponent tried for each prime before giving up.
    long max_exponent = 64;
};

/// The divisor the points of a mode are integral for.
FactoredDivisor stream_divisor(const StreamParams& params);

/// The positive integral S-units other than 1, in the order used by the
/// stream: by the largest exponent, then lexicographically with the
/// exponent of the largest prime compared first. At most `limit` values with
/// exponents up to max_exponent.
std::vector<Int> unit_sequence(const PlaceSet& s, std::size_t limit, long max_exponent);

/// `count` distinct points, each checked to satisfy the identity F(P) = u,
/// to lie off the divisor and to be S-integral. Throws ExhaustedSearch when
/// S has no finite places or the exponent range runs out.
std::vector<ConstructedPoint> generalized_unit_stream(const StreamParams& params, const PlaceSet& s,
                                                      std::size_t count);

}  // namespace plint
