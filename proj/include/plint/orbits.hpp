#pragma once

#include <array>
#include <optional>
#include <vector>

#include "plint/core.hpp"
#include "plint/forms.hpp"
#include "plint/heights.hpp"

namespace plint {

/// An endomorphism of P^2 given by three forms of a common degree d >= 1.
/// Rational coefficients are cleared by a common denominator, which does not
/// change the map. Absence of common zeros is not checked; evaluating at a
/// common zero raises IndeterminatePoint.
class Endo {
public:
    /// Throws DegreeMismatch for unequal degrees and InvalidInput for a zero
    /// component or degree 0.
    explicit Endo(std::array<Form, 3> components);

    const std::array<Form, 3>& components() const { return components_; }
    int degree() const { return components_[0].degree(); }

    friend bool operator==(const Endo&, const Endo&) = default;

private:
    std::array<Form, 3> components_;
};

/// The canonical image point and the content divided out to reach it.
ReducedTriple apply_endo(const Endo& phi, const ProjPoint& p);

struct OrbitRecord {
    long index = 0;
    ProjPoint point;
    /// Content removed when reducing phi(previous point); 1 at index 0.
    Int removed_content;
    /// Logarithmic height log max |x_i|.
    LogSum height;
    /// Unset when not scanned, or when the point lies on the divisor.
    std::optional<bool> s_integral;
    bool on_divisor = false;
};

struct Orbit {
    std::vector<OrbitRecord> records;
    /// True when some point had a coordinate above the height cap; it is the
    /// first index not recorded.
    bool truncated = false;
    long truncated_at = -1;
};

/// 10^10000.
const Int& default_height_cap();

/// Indices 0..n_max of the orbit of p, stopping before the first point with a
/// coordinate of absolute value above height_cap. IndeterminatePoint errors
/// name the index at which evaluation failed.
Orbit iterate_orbit(const Endo& phi, const ProjPoint& p, long n_max, const Int& height_cap = default_height_cap());

/// Factor-wise pullback: each (g, m) becomes g o phi with multiplicity m, split
/// by extracting the coordinate lines, the factors of D and any extra hints,
/// with the rest separated into square-free parts of equal multiplicity.
/// The result has degree d * deg D.
FactoredDivisor pullback_divisor(const Endo& phi, const FactoredDivisor& d, const std::vector<Form>& hints = {});

/// The orbit with is_s_integral evaluated at each point; points on Supp D are
/// marked on_divisor with s_integral unset. Scanning runs on up to `threads`
/// worker threads; the result does not depend on the thread count.
Orbit scan_orbit_integrality(const Endo& phi, const ProjPoint& p, const FactoredDivisor& d, const PlaceSet& s,
                             long n_max, const Int& height_cap = default_height_cap(), unsigned threads = 1);

/// l o phi = c * l^d. Throws NotALine unless deg l = 1.
bool is_invariant_line(const Endo& phi, const Form& line);

/// The squarefree part of prod (l_i o phi) is proportional to prod l_i, i.e.
/// the preimage of the union of lines is the union itself. Throws
/// TooManyLines for more than three lines, NotALine for a non-linear form and
/// InvalidInput for proportional lines.
bool is_completely_invariant_line_set(const Endo& phi, const std::vector<Form>& lines);

struct SingularityCandidate {
    ProjPoint candidate;
    bool maps_to_point = false;
    bool singular_on_pullback = false;
    bool verified() const { return maps_to_point && singular_on_pullback; }
};

/// For each candidate Q, checks phi(Q) = P and that C o phi is singular at Q.
/// Throws NotSingular unless P is a singular point of C.
std::vector<SingularityCandidate> singularity_chain_check(const Endo& phi, const Form& curve, const ProjPoint& p,
                                                          const std::vector<ProjPoint>& candidates);

}  // namespace plint
