#include "em/eisenstein.hpp"
#include "em/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace em {

std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

void check_coord(int128 v) {
    if (v > int128(kCoordBound) || v < -int128(kCoordBound))
        throw overflow_error("EisensteinInt: coordinate exceeds 128-bit norm bound");
}

}  // namespace

EisensteinInt EisensteinInt::operator*(const EisensteinInt& o) const {
    // (a1 + b1 w)(a2 + b2 w), w^2 = -1 - w
    int128 a1 = a, b1 = b, a2 = o.a, b2 = o.b;
    int128 ra = a1 * a2 - b1 * b2;
    int128 rb = a1 * b2 + a2 * b1 - b1 * b2;
    check_coord(ra);
    check_coord(rb);
    return {std::int64_t(ra), std::int64_t(rb)};
}

std::int64_t EisensteinInt::norm64() const {
    int128 n = norm();
    if (n > int128(INT64_MAX)) throw overflow_error("norm64: norm exceeds 63 bits");
    return std::int64_t(n);
}

std::complex<double> EisensteinInt::to_complex() const {
    static const double kSqrt3Half = std::sqrt(3.0) / 2.0;
    return {double(a) - 0.5 * double(b), kSqrt3Half * double(b)};
}

std::string EisensteinInt::str() const {
    std::string s = std::to_string(a);
    if (b != 0) {
        s += (b > 0) ? "+" : "-";
        std::int64_t ab = std::llabs(b);
        if (ab != 1) s += std::to_string(ab);
        s += "w";
    }
    return s;
}

std::pair<EisensteinInt, EisensteinInt> divmod(const EisensteinInt& n, const EisensteinInt& d) {
    if (d.is_zero()) throw std::domain_error("divmod: zero divisor");
    // n * conj(d) / N(d), coordinates rounded to nearest
    EisensteinInt dc = d.conj();
    int128 na = int128(n.a) * dc.a - int128(n.b) * dc.b;
    int128 nb = int128(n.a) * dc.b + int128(n.b) * dc.a - int128(n.b) * dc.b;
    int128 nd = d.norm();
    auto round_div = [](int128 num, int128 den) -> std::int64_t {
        int128 q = num / den;
        int128 r = num - q * den;
        if (2 * r >= den) ++q;
        else if (-2 * r > den) --q;
        return std::int64_t(q);
    };
    EisensteinInt q{round_div(na, nd), round_div(nb, nd)};
    EisensteinInt r = n - q * d;
    return {q, r};
}

bool divides(const EisensteinInt& d, const EisensteinInt& n) {
    if (d.is_zero()) return n.is_zero();
    return divmod(n, d).second.is_zero();
}

EisensteinInt div_exact(const EisensteinInt& n, const EisensteinInt& d) {
    auto [q, r] = divmod(n, d);
    if (!r.is_zero()) throw std::domain_error("div_exact: not divisible");
    return q;
}

EisensteinInt pow(EisensteinInt base, unsigned e) {
    EisensteinInt r{1, 0};
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

PrimaryDecomposition primary_associate(const EisensteinInt& z) {
    if (z.is_zero()) throw std::domain_error("primary_associate: zero input");
    PrimaryDecomposition out;
    EisensteinInt m = z;
    // strip lambda = 1 - w; z/lambda = z*(2+w)/3
    while (true) {
        EisensteinInt w = m * EisensteinInt{2, 1};
        if (w.a % 3 == 0 && w.b % 3 == 0) {
            m = {w.a / 3, w.b / 3};
            ++out.lambda_exp;
        } else {
            break;
        }
    }
    for (const auto& u : kUnits) {
        EisensteinInt cand = u * m;
        if (is_primary(cand)) {
            out.primary = cand;
            // unit = m / cand-normalizer, i.e. inverse of u
            for (const auto& v : kUnits) {
                if ((v * u) == EisensteinInt{1, 0}) {
                    out.unit = v;
                    break;
                }
            }
            return out;
        }
    }
    throw std::logic_error("primary_associate: no primary associate found");
}

EisensteinInt PrimaryFactorization::recompose() const {
    EisensteinInt z = unit * pow(kLambda, unsigned(lambda_exp));
    for (const auto& [p, e] : factors) z = z * pow(p, unsigned(e));
    return z;
}

EisensteinInt gcd(EisensteinInt x, EisensteinInt y) {
    if (x.is_zero() && y.is_zero()) throw std::domain_error("gcd: both inputs zero");
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = y;
        y = r;
    }
    auto d = primary_associate(x);
    return pow(kLambda, unsigned(d.lambda_exp)) * d.primary;
}

std::pair<EisensteinInt, EisensteinInt> split_prime_above(std::int64_t p) {
    static std::unordered_map<std::int64_t, std::pair<EisensteinInt, EisensteinInt>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(p);
        if (it != cache.end()) return it->second;
    }
    if (p % 3 != 1 || !is_prime_u64(std::uint64_t(p)))
        throw std::domain_error("split_prime_above: p must be a prime == 1 (mod 3)");
    // find a primitive cube root of unity t mod p, then pi | gcd(p, t - w)
    std::uint64_t t = 1;
    for (std::uint64_t g = 2; ; ++g) {
        t = powmod_u64(g, std::uint64_t((p - 1) / 3), std::uint64_t(p));
        if (t != 1) break;
    }
    EisensteinInt pi = gcd(EisensteinInt{p, 0}, EisensteinInt{std::int64_t(t), -1});
    pi = primary_associate(pi).primary;
    EisensteinInt pibar = primary_associate(pi.conj()).primary;
    auto result = std::make_pair(pi, pibar);
    std::lock_guard<std::mutex> lk(mu);
    cache[p] = result;
    return result;
}

PrimaryFactorization factor(const EisensteinInt& z) {
    if (z.is_zero()) throw std::domain_error("factor: zero input");
    PrimaryFactorization out;
    auto dec = primary_associate(z);
    out.unit = dec.unit;
    out.lambda_exp = dec.lambda_exp;
    EisensteinInt m = dec.primary;
    std::int64_t nm = m.norm64();
    auto rational = factor_u64(std::uint64_t(nm));
    for (auto [p64, e] : rational) {
        std::int64_t p = std::int64_t(p64);
        if (p % 3 == 2) {
            // inert; -p is the primary associate of p
            if (e % 2 != 0) throw std::logic_error("factor: odd inert exponent");
            EisensteinInt pi{-p, 0};
            out.factors.emplace_back(pi, e / 2);
            for (int i = 0; i < e / 2; ++i) m = div_exact(m, pi);
        } else if (p % 3 == 1) {
            auto [pi, pibar] = split_prime_above(p);
            int e1 = 0;
            while (divides(pi, m)) {
                m = div_exact(m, pi);
                ++e1;
            }
            int e2 = 0;
            while (divides(pibar, m)) {
                m = div_exact(m, pibar);
                ++e2;
            }
            if (e1 + e2 != e) throw std::logic_error("factor: split exponent mismatch");
            if (e1) out.factors.emplace_back(pi, e1);
            if (e2) out.factors.emplace_back(pibar, e2);
        } else {
            throw std::logic_error("factor: primary part divisible by 3");
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) {
                  auto nx = x.first.norm(), ny = y.first.norm();
                  if (nx != ny) return nx < ny;
                  if (x.first.a != y.first.a) return x.first.a < y.first.a;
                  return x.first.b < y.first.b;
              });
    return out;
}

int moebius(const EisensteinInt& z) {
    auto f = factor(z);
    if (f.lambda_exp >= 2) return 0;
    int omega = f.lambda_exp;
    for (const auto& [p, e] : f.factors) {
        (void)p;
        if (e >= 2) return 0;
        ++omega;
    }
    return (omega % 2 == 0) ? 1 : -1;
}

int128 sigma_primary(const EisensteinInt& z) {
    auto f = factor(z);
    int128 s = 1;
    for (const auto& [p, e] : f.factors) {
        int128 np = p.norm();
        int128 term = 1, powv = 1;
        for (int i = 0; i < e; ++i) {
            powv *= np;
            term += powv;
        }
        s *= term;
    }
    return s;
}

namespace {

struct CoordLess {
    bool operator()(const EisensteinInt& x, const EisensteinInt& y) const {
        auto nx = x.norm(), ny = y.norm();
        if (nx != ny) return nx < ny;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

}  // namespace

void for_each_primary(double X, const std::function<void(const EisensteinInt&)>& fn) {
    if (X < 1) return;
    std::int64_t R = std::int64_t(std::sqrt(4.0 * X / 3.0)) + 2;
    std::int64_t a0 = -((R + 2) / 3) * 3 + 1;  // smallest a >= -R with a == 1 (mod 3)
    std::int64_t b0 = -((R + 2) / 3) * 3;      // smallest b >= -R-ish with b == 0 (mod 3)
    for (std::int64_t a = a0; a <= R; a += 3) {
        for (std::int64_t b = b0; b <= R; b += 3) {
            EisensteinInt m{a, b};
            if (double(m.norm64()) <= X && !m.is_zero()) fn(m);
        }
    }
}

std::vector<EisensteinInt> enumerate_primary(double X) {
    std::vector<EisensteinInt> out;
    for_each_primary(X, [&](const EisensteinInt& m) { out.push_back(m); });
    std::sort(out.begin(), out.end(), CoordLess{});
    return out;
}

std::vector<EisensteinInt> enumerate_family(double Q) {
    std::vector<EisensteinInt> out;
    if (Q < 1) return out;
    std::int64_t R = std::int64_t(std::sqrt(4.0 * Q / 3.0)) + 2;
    for (std::int64_t a = -R; a <= R; ++a) {
        if (((a - 1) % 9 + 9) % 9 != 0) continue;
        for (std::int64_t b = -(R / 9) * 9 - 9; b <= R; b += 9) {
            EisensteinInt q{a, b};
            std::int64_t n = q.norm64();
            if (n <= 1 || double(n) > Q) continue;
            if (moebius(q) == 0) continue;
            out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end(), CoordLess{});
    return out;
}

// ---------------------------------------------------------------------------
// PrimaryTable
// ---------------------------------------------------------------------------

PrimaryTable::PrimaryTable(std::int64_t bound) : bound_(bound) {
    elems_ = enumerate_primary(double(bound));
    const std::size_t n = elems_.size();
    norms_.resize(n);
    log_norms_.resize(n);
    prime_link_.assign(n, -1);
    quot_link_.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        norms_[i] = elems_[i].norm64();
        log_norms_[i] = std::log(double(norms_[i]));
    }
    auto spf = spf_table(std::int32_t(bound));
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t nm = norms_[i];
        if (nm == 1) continue;
        std::int32_t p = spf[nm];
        EisensteinInt pi;
        if (p % 3 == 2) {
            pi = {-p, 0};
        } else {
            auto [p1, p2] = split_prime_above(p);
            pi = divides(p1, elems_[i]) ? p1 : p2;
        }
        std::int64_t pidx = index_of(pi);
        std::int64_t qidx = index_of(div_exact(elems_[i], pi));
        if (pidx < 0 || qidx < 0) throw std::logic_error("PrimaryTable: missing link");
        prime_link_[i] = std::int32_t(pidx);
        quot_link_[i] = std::int32_t(qidx);
    }
}

std::int64_t PrimaryTable::index_of(const EisensteinInt& m) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), m, CoordLess{});
    if (it == elems_.end() || !(*it == m)) return -1;
    return it - elems_.begin();
}

void PrimaryTable::fill_cubic_character(
    const std::function<int(const EisensteinInt&)>& prime_fn,
    std::vector<std::uint8_t>& out) const {
    out.resize(size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (norms_[i] == 1) {
            out[i] = 0;
            continue;
        }
        if (is_prime(i)) {
            out[i] = std::uint8_t(prime_fn(elems_[i]));
            continue;
        }
        std::uint8_t x = out[std::size_t(prime_link_[i])];
        std::uint8_t y = out[std::size_t(quot_link_[i])];
        out[i] = (x == 3 || y == 3) ? std::uint8_t(3) : std::uint8_t((x + y) % 3);
    }
}

std::vector<std::pair<std::int32_t, int>> PrimaryTable::factor_indices(std::size_t i) const {
    // peel one prime per link step, then merge duplicates
    std::vector<std::pair<std::int32_t, int>> out;
    while (norms_[i] != 1) {
        out.emplace_back(prime_link_[i], 1);
        i = std::size_t(quot_link_[i]);
    }
    std::sort(out.begin(), out.end());
    std::vector<std::pair<std::int32_t, int>> merged;
    for (auto& [p, e] : out) {
        if (!merged.empty() && merged.back().first == p) merged.back().second += e;
        else merged.emplace_back(p, e);
    }
    return merged;
}

}  // namespace em
