#include "plint/core.hpp"

#include <algorithm>
#include <sstream>

namespace plint {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::AllZero: return "AllZero";
        case ErrorKind::ZeroArgument: return "ZeroArgument";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::NotDivisible: return "NotDivisible";
        case ErrorKind::ZeroDivisor: return "ZeroDivisor";
        case ErrorKind::NotOnCurve: return "NotOnCurve";
        case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorKind::OnDivisor: return "OnDivisor";
        case ErrorKind::NotPrimitive: return "NotPrimitive";
        case ErrorKind::ZeroParameter: return "ZeroParameter";
        case ErrorKind::FactorizationMismatch: return "FactorizationMismatch";
        case ErrorKind::BaseWitnessOffDivisor: return "BaseWitnessOffDivisor";
        case ErrorKind::ParameterViolation: return "ParameterViolation";
        case ErrorKind::IrrationalRoot: return "IrrationalRoot";
        case ErrorKind::EmptyVector: return "EmptyVector";
        case ErrorKind::CongruenceFailure: return "CongruenceFailure";
        case ErrorKind::ExhaustedSearch: return "ExhaustedSearch";
        case ErrorKind::IndeterminatePoint: return "IndeterminatePoint";
        case ErrorKind::NotALine: return "NotALine";
        case ErrorKind::TooManyLines: return "TooManyLines";
        case ErrorKind::NotSingular: return "NotSingular";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error(ErrorKind::ZeroArgument, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& text) {
    auto parse_int = [&](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size() || !std::all_of(s.begin() + static_cast<long>(i), s.end(),
                                          [](unsigned char c) { return std::isdigit(c); }))
            throw Error(ErrorKind::ParseError, "not a rational number: '" + text + "'");
        return Int(s[0] == '+' ? s.substr(1) : s, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    return make_rat(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const Rat& value) { return value.get_str(); }
std::string to_string(const Int& value) { return value.get_str(); }

Int pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat pow(const Rat& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw Error(ErrorKind::ZeroArgument, "negative power of zero");
        return pow(Rat(1) / base, -exp);
    }
    Int n = pow(Int(base.get_num()), static_cast<unsigned long>(exp));
    Int d = pow(Int(base.get_den()), static_cast<unsigned long>(exp));
    return make_rat(n, d);
}

// ---------------------------------------------------------------------------

ProjPoint ProjPoint::from_integers(const Int& x, const Int& y, const Int& z) {
    return reduce_integer_triple({x, y, z}).point;
}

ProjPoint ProjPoint::from_integers(long x, long y, long z) {
    return from_integers(Int(x), Int(y), Int(z));
}

Int ProjPoint::max_abs_coord() const {
    Int m = 0;
    for (const auto& c : coords_) m = std::max<Int>(m, abs(c));
    return m;
}

std::string ProjPoint::to_string() const {
    return "[" + coords_[0].get_str() + ":" + coords_[1].get_str() + ":" +
           coords_[2].get_str() + "]";
}

std::string ProjPoint::to_csv() const {
    return coords_[0].get_str() + "," + coords_[1].get_str() + "," + coords_[2].get_str();
}

std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    for (std::size_t i = 0; i < 3; ++i) {
        int c = cmp(a.coords_[i], b.coords_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

ReducedTriple reduce_integer_triple(const std::array<Int, 3>& raw) {
    Int g = 0;
    for (const auto& c : raw) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) throw Error(ErrorKind::AllZero, "point (0,0,0) is not in the projective plane");
    std::array<Int, 3> c;
    for (std::size_t i = 0; i < 3; ++i) mpz_divexact(c[i].get_mpz_t(), raw[i].get_mpz_t(), g.get_mpz_t());
    auto first = std::find_if(c.begin(), c.end(), [](const Int& v) { return v != 0; });
    if (*first < 0)
        for (auto& v : c) v = -v;
    return {ProjPoint(std::move(c)), g};
}

ProjPoint reduce_point(const std::array<Rat, 3>& raw) {
    Int l = 1;
    for (const auto& r : raw) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
    std::array<Int, 3> ints;
    for (std::size_t i = 0; i < 3; ++i) {
        Int scaled = l / raw[i].get_den();
        ints[i] = raw[i].get_num() * scaled;
    }
    return reduce_integer_triple(ints).point;
}

// ---------------------------------------------------------------------------

bool is_prime(const Int& p) {
    return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

PlaceSet::PlaceSet(const std::vector<Int>& primes) {
    for (const auto& p : primes) {
        if (!is_prime(p)) throw Error(ErrorKind::NotPrime, p.get_str() + " is not prime");
        primes_.push_back(p);
    }
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PlaceSet PlaceSet::from_longs(std::initializer_list<long> primes) {
    std::vector<Int> v;
    for (long p : primes) v.emplace_back(p);
    return PlaceSet(v);
}

PlaceSet PlaceSet::parse(const std::string& text) {
    std::vector<Int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = item.find_last_not_of(" \t");
        item = item.substr(b, e - b + 1);
        if (!std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw Error(ErrorKind::ParseError, "bad prime '" + item + "' in place set");
        v.emplace_back(item, 10);
    }
    return PlaceSet(v);
}

bool PlaceSet::contains(const Int& p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::string PlaceSet::to_string() const {
    std::string out;
    for (const auto& p : primes_) {
        if (!out.empty()) out += ",";
        out += p.get_str();
    }
    return out;
}

long valuation(const Int& x, const Int& p) {
    if (x == 0) throw Error(ErrorKind::ZeroArgument, "valuation of zero");
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, p.get_str() + " is not prime");
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rat& x, const Int& p) {
    if (x == 0) throw Error(ErrorKind::ZeroArgument, "valuation of zero");
    return valuation(Int(x.get_num()), p) - valuation(Int(x.get_den()), p);
}

SPart remove_s_part(const Int& n, const PlaceSet& s) {
    if (n == 0) throw Error(ErrorKind::ZeroArgument, "S-part of zero");
    SPart out{abs(n), {}};
    for (const auto& p : s.primes()) {
        auto e = mpz_remove(out.residual.get_mpz_t(), out.residual.get_mpz_t(), p.get_mpz_t());
        out.exponents[p] = static_cast<long>(e);
    }
    return out;
}

bool is_s_unit(const Rat& x, const PlaceSet& s) {
    if (x == 0) return false;
    return remove_s_part(Int(x.get_num()), s).residual == 1 &&
           remove_s_part(Int(x.get_den()), s).residual == 1;
}

// ---------------------------------------------------------------------------
// Integer factorization: trial division, perfect powers, Pollard-Brent.

namespace {

bool brent_split(const Int& n, unsigned long budget, Int& factor) {
    for (unsigned long c = 1; c <= 5; ++c) {
        Int y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1, spent = 0;
        const unsigned long m = 128;
        auto f = [&](Int& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) f(y);
            unsigned long k = 0;
            do {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    f(y);
                    Int d = abs(x - y);
                    q = q * d % n;
                }
                g = gcd(q, n);
                k += lim;
                spent += lim;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1 && spent < budget);
        if (g == n) {
            do {
                f(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != 1 && g != n) {
            factor = g;
            return true;
        }
    }
    return false;
}

void factor_into(const Int& n, long mult, unsigned long budget, IntFactorization& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.primes[n] += mult;
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                factor_into(root, mult * static_cast<long>(k), budget, out);
                return;
            }
        }
    }
    Int d;
    if (!brent_split(n, budget, d)) {
        out.unsplit[n] += mult;
        return;
    }
    Int other = n / d;
    // Split into coprime pieces so multiplicities stay exact.
    Int g = gcd(d, other);
    if (g == 1) {
        factor_into(d, mult, budget, out);
        factor_into(other, mult, budget, out);
    } else {
        Int rest = n;
        long e = static_cast<long>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), g.get_mpz_t()));
        factor_into(g, mult * e, budget, out);
        factor_into(rest, mult, budget, out);
    }
}

}  // namespace

IntFactorization factor_integer(const Int& n, unsigned long rho_budget) {
    if (n == 0) throw Error(ErrorKind::ZeroArgument, "factorization of zero");
    IntFactorization out;
    Int m = abs(n);
    for (unsigned long p = 2; p < 5000 && m > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            Int pp = p;
            out.primes[pp] = static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t()));
        }
    }
    factor_into(m, 1, rho_budget, out);
    return out;
}

// ---------------------------------------------------------------------------

P1Point P1Point::from_rationals(const Rat& s, const Rat& t) {
    if (s == 0 && t == 0) throw Error(ErrorKind::ZeroParameter, "pencil parameter [0:0]");
    Int l;
    mpz_lcm(l.get_mpz_t(), s.get_den_mpz_t(), t.get_den_mpz_t());
    Int si = s.get_num() * (l / s.get_den());
    Int ti = t.get_num() * (l / t.get_den());
    Int g = gcd(si, ti);
    si /= g;
    ti /= g;
    if (si < 0 || (si == 0 && ti < 0)) {
        si = -si;
        ti = -ti;
    }
    return P1Point(si, ti);
}

P1Point P1Point::from_integers(long s, long t) { return from_rationals(Rat(s), Rat(t)); }

std::string P1Point::to_string() const { return "[" + s_.get_str() + ":" + t_.get_str() + "]"; }

std::strong_ordering operator<=>(const P1Point& a, const P1Point& b) {
    int c = cmp(a.s_, b.s_);
    if (c == 0) c = cmp(a.t_, b.t_);
    if (c == 0) return std::strong_ordering::equal;
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace plint
