#include "em/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace em {

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound < 2) return out;
    std::vector<bool> comp(std::size_t(bound) + 1, false);
    for (std::int64_t p = 2; p * p <= bound; ++p) {
        if (comp[p]) continue;
        for (std::int64_t q = p * p; q <= bound; q += p) comp[q] = true;
    }
    out.reserve(std::size_t(double(bound) / (std::log(double(bound)) - 1.1) + 16));
    for (std::int64_t p = 2; p <= bound; ++p)
        if (!comp[p]) out.push_back(p);
    return out;
}

std::vector<std::int32_t> spf_table(std::int32_t bound) {
    std::vector<std::int32_t> spf(std::size_t(bound) + 1, 0);
    for (std::int32_t i = 2; i <= bound; ++i) {
        if (spf[i] == 0) {
            for (std::int64_t j = i; j <= bound; j += i)
                if (spf[j] == 0) spf[j] = i;
        }
    }
    return spf;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return std::uint64_t((unsigned __int128)a * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic witness set for 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    std::uint64_t c = 1;
    while (true) {
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t count = 0;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            d = std::gcd(x > y ? x - y : y - x, n);
            if (++count > (std::uint64_t(1) << 22)) break;
        }
        if (d != 1 && d != n) return d;
        ++c;
    }
}

}  // namespace

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    if (n == 0) throw std::domain_error("factor_u64: zero");
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) out.emplace_back(p, e);
    }
    // wheel over 6k+-1 up to 10^6, then rho on what remains
    for (std::uint64_t p = 7; p <= 1000000 && p * p <= n; p += (p % 6 == 1) ? 4 : 2) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    std::vector<std::uint64_t> stack;
    if (n > 1) stack.push_back(n);
    std::vector<std::uint64_t> primes;
    while (!stack.empty()) {
        std::uint64_t m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime_u64(m)) {
            primes.push_back(m);
            continue;
        }
        std::uint64_t d = pollard_rho(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.emplace_back(primes[i], int(j - i));
        i = j;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace em
