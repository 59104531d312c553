#pragma once

// Exact arithmetic in the Eisenstein ring Z[w], w = exp(2*pi*i/3).
// Elements are stored as a + b*w with 64-bit integer coordinates; the
// norm a^2 - a*b + b^2 is computed in 128-bit arithmetic.  Coordinates
// are kept below 2^62 so that norms never wrap.

#include <cstdint>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>
#include <functional>

namespace em {

using int128 = __int128;

std::string to_string(int128 v);

class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Coordinate bound: |a|,|b| <= 2^62 keeps a^2 - a*b + b^2 < 2^126.
inline constexpr std::int64_t kCoordBound = std::int64_t(1) << 62;

struct EisensteinInt {
    std::int64_t a{0};  // coefficient of 1
    std::int64_t b{0};  // coefficient of w

    constexpr EisensteinInt() = default;
    constexpr EisensteinInt(std::int64_t a_, std::int64_t b_ = 0) : a(a_), b(b_) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const EisensteinInt&) const = default;

    EisensteinInt conj() const { return {a - b, -b}; }

    EisensteinInt operator-() const { return {-a, -b}; }
    EisensteinInt operator+(const EisensteinInt& o) const { return {a + o.a, b + o.b}; }
    EisensteinInt operator-(const EisensteinInt& o) const { return {a - o.a, b - o.b}; }
    EisensteinInt operator*(const EisensteinInt& o) const;

    // N(a + b*w) = a^2 - a*b + b^2 >= 0.
    int128 norm() const {
        int128 aa = a, bb = b;
        return aa * aa - aa * bb + bb * bb;
    }

    // Norm as int64; throws if it does not fit.
    std::int64_t norm64() const;

    // Trace to Q: z + conj(z) = 2a - b.
    std::int64_t trace() const { return 2 * a - b; }

    std::complex<double> to_complex() const;

    std::string str() const;
};

inline constexpr EisensteinInt kOmega{0, 1};          // w
inline constexpr EisensteinInt kOmegaSq{-1, -1};      // w^2
inline constexpr EisensteinInt kLambda{1, -1};        // 1 - w, the ramified prime
// The unit group <-w> in a fixed order.
inline constexpr EisensteinInt kUnits[6] = {
    {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, -1}, {1, 1},
};

// z == 1 (mod 3), i.e. a == 1 (mod 3) and b == 0 (mod 3).
inline bool is_primary(const EisensteinInt& z) {
    return ((z.a - 1) % 3 + 3) % 3 == 0 && (z.b % 3 + 3) % 3 == 0;
}

// Rounded division: q minimizes N(n - q*d) with N(r) <= (3/4) N(d).
std::pair<EisensteinInt, EisensteinInt> divmod(const EisensteinInt& n, const EisensteinInt& d);

// Exact quotient; throws std::domain_error if d does not divide n.
EisensteinInt div_exact(const EisensteinInt& n, const EisensteinInt& d);

bool divides(const EisensteinInt& d, const EisensteinInt& n);

EisensteinInt pow(EisensteinInt base, unsigned e);

struct PrimaryDecomposition {
    EisensteinInt unit;     // one of the six units
    int lambda_exp{0};
    EisensteinInt primary;  // == 1 (mod 3)
};

// z = unit * lambda^k * primary, the unique such factorization.  z != 0.
PrimaryDecomposition primary_associate(const EisensteinInt& z);

struct PrimaryFactorization {
    EisensteinInt unit;
    int lambda_exp{0};
    // primary primes == 1 (mod 3), pairwise non-associate, sorted by (norm, a, b)
    std::vector<std::pair<EisensteinInt, int>> factors;

    EisensteinInt recompose() const;
    bool operator==(const PrimaryFactorization&) const = default;
};

PrimaryFactorization factor(const EisensteinInt& z);

// gcd normalized to lambda^k * primary; (0, 0) is rejected.
EisensteinInt gcd(EisensteinInt x, EisensteinInt y);

int moebius(const EisensteinInt& z);

// sigma(n) = sum of N(d) over primary divisors d | n.
int128 sigma_primary(const EisensteinInt& z);

// Family conductors: squarefree q == 1 (mod 9), 1 < N(q) <= Q,
// sorted by (norm, a, b).  q = 1 is excluded.
std::vector<EisensteinInt> enumerate_family(double Q);

// All m == 1 (mod 3) with N(m) <= X, sorted by (norm, a, b).
std::vector<EisensteinInt> enumerate_primary(double X);

// Streaming variant (deterministic scan order, not sorted).
void for_each_primary(double X, const std::function<void(const EisensteinInt&)>& fn);

// Split primes above a rational p == 1 (mod 3): primary pi with N(pi) = p,
// returned with its non-associate conjugate partner.
std::pair<EisensteinInt, EisensteinInt> split_prime_above(std::int64_t p);

struct EisensteinHash {
    std::size_t operator()(const EisensteinInt& z) const {
        std::uint64_t h = std::uint64_t(z.a) * 0x9e3779b97f4a7c15ULL;
        h ^= std::uint64_t(z.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return std::size_t(h);
    }
};

// ---------------------------------------------------------------------------
// PrimaryTable: all primary elements with N <= bound, sorted by (norm, a, b),
// with factorization links (index of a primary prime divisor and of the
// quotient).  This is the shared backbone of the character-sum hot loops:
// any multiplicative function of m can be filled in one in-order pass.
// ---------------------------------------------------------------------------
class PrimaryTable {
public:
    explicit PrimaryTable(std::int64_t bound);

    std::int64_t bound() const { return bound_; }
    std::size_t size() const { return elems_.size(); }
    const EisensteinInt& elem(std::size_t i) const { return elems_[i]; }
    std::int64_t norm(std::size_t i) const { return norms_[i]; }
    double log_norm(std::size_t i) const { return log_norms_[i]; }
    bool is_prime(std::size_t i) const { return prime_link_[i] == std::int32_t(i); }
    // Index of a primary prime dividing elem(i); -1 for the unit.
    std::int32_t prime_link(std::size_t i) const { return prime_link_[i]; }
    std::int32_t quot_link(std::size_t i) const { return quot_link_[i]; }

    // Index of a primary element, or -1 if absent.
    std::int64_t index_of(const EisensteinInt& m) const;

    // chi[i] = chi[prime_link[i]] applied multiplicatively; out must have
    // size() entries, prime entries are produced by `prime_fn`.
    // Values are 0,1,2 for w^k and 3 for "zero".
    void fill_cubic_character(const std::function<int(const EisensteinInt&)>& prime_fn,
                              std::vector<std::uint8_t>& out) const;

    // Factorization of elem(i) as (prime index, exponent) pairs.
    std::vector<std::pair<std::int32_t, int>> factor_indices(std::size_t i) const;

private:
    std::int64_t bound_;
    std::vector<EisensteinInt> elems_;
    std::vector<std::int64_t> norms_;
    std::vector<double> log_norms_;
    std::vector<std::int32_t> prime_link_;
    std::vector<std::int32_t> quot_link_;
};

}  // namespace em
