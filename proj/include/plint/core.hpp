#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "plint/error.hpp"

namespace plint {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds a canonical rational num/den. Throws ZeroArgument on den == 0.
Rat make_rat(const Int& num, const Int& den = 1);

/// Parses "n", "-n" or "n/d" (decimal). Throws ParseError.
Rat parse_rat(const std::string& text);

std::string to_string(const Rat& value);
std::string to_string(const Int& value);

Int pow(const Int& base, unsigned long exp);
Rat pow(const Rat& base, long exp);

/// A rational point of the projective plane with coprime integer coordinates,
/// the first nonzero one positive. Two points are equal iff their coordinates
/// are equal.
class ProjPoint {
public:
    /// Canonicalizes an integer triple. Throws AllZero for (0,0,0).
    static ProjPoint from_integers(const Int& x, const Int& y, const Int& z);
    static ProjPoint from_integers(long x, long y, long z);

    const Int& operator[](std::size_t i) const { return coords_[i]; }
    const std::array<Int, 3>& coords() const { return coords_; }

    /// max_i |x_i| over the canonical coordinates.
    Int max_abs_coord() const;

    std::string to_string() const;  // "[x:y:z]"
    std::string to_csv() const;     // "x,y,z"

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.coords_ == b.coords_;
    }
    friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b);

private:
    friend struct ReducedTriple reduce_integer_triple(const std::array<Int, 3>& raw);
    explicit ProjPoint(std::array<Int, 3> c) : coords_(std::move(c)) {}
    std::array<Int, 3> coords_;
};

/// reduce_point: the canonical representative of a nonzero rational triple.
ProjPoint reduce_point(const std::array<Rat, 3>& raw);

/// Same as reduce_point but also returns the positive integer content that was
/// divided out of an integer triple (used for orbit bookkeeping).
struct ReducedTriple {
    ProjPoint point;
    Int removed_content;
};
ReducedTriple reduce_integer_triple(const std::array<Int, 3>& raw);

bool is_prime(const Int& p);

/// The finite part of a set of places of Q. The archimedean place is always
/// implicitly present.
class PlaceSet {
public:
    PlaceSet() = default;
    /// Throws NotPrime if any entry is not prime; duplicates are merged.
    explicit PlaceSet(const std::vector<Int>& primes);
    static PlaceSet from_longs(std::initializer_list<long> primes);
    /// Comma-separated list; empty string gives the archimedean-only set.
    static PlaceSet parse(const std::string& text);

    const std::vector<Int>& primes() const { return primes_; }
    bool contains(const Int& p) const;
    bool empty() const { return primes_.empty(); }
    std::string to_string() const;  // "2,3"

    friend bool operator==(const PlaceSet&, const PlaceSet&) = default;

private:
    std::vector<Int> primes_;  // sorted ascending
};

/// v_p(x). Throws ZeroArgument for x == 0 and NotPrime for composite p.
long valuation(const Rat& x, const Int& p);
long valuation(const Int& x, const Int& p);

struct SPart {
    Int residual;                  // positive, coprime to every p in S
    std::map<Int, long> exponents;  // one entry per prime of S
};

/// |n| = residual * prod p^e. Throws ZeroArgument for n == 0.
SPart remove_s_part(const Int& n, const PlaceSet& s);

/// True iff x is a nonzero rational whose numerator and denominator have all
/// prime factors in S.
bool is_s_unit(const Rat& x, const PlaceSet& s);

/// Prime factorization of |n| for n != 0. Factors that could not be split
/// within the work budget are reported in `unsplit` (composite, coprime to the
/// listed primes).
struct IntFactorization {
    std::map<Int, long> primes;
    std::map<Int, long> unsplit;
    bool complete() const { return unsplit.empty(); }
};
IntFactorization factor_integer(const Int& n, unsigned long rho_budget = 200000);

/// A point of P^1 written as coprime integers [s:t], first nonzero positive.
class P1Point {
public:
    /// Throws ZeroParameter for (0,0).
    static P1Point from_rationals(const Rat& s, const Rat& t);
    static P1Point from_integers(long s, long t);

    const Int& s() const { return s_; }
    const Int& t() const { return t_; }
    std::string to_string() const;  // "[s:t]"

    friend bool operator==(const P1Point&, const P1Point&) = default;
    friend std::strong_ordering operator<=>(const P1Point& a, const P1Point& b);

private:
    P1Point(Int s, Int t) : s_(std::move(s)), t_(std::move(t)) {}
    Int s_, t_;
};

}  // namespace plint
