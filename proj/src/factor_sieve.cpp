#include "ratiolab/factor_sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ratiolab {

std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    r = std::min<std::uint64_t>(r, 0xFFFFFFFFu);
    while (r > 0 && r > n / r) --r;          // r*r > n, overflow-free
    while (r + 1 <= n / (r + 1)) ++r;        // (r+1)^2 <= n
    return r;
}

std::vector<std::uint64_t> base_primes(std::uint64_t limit) {
    if (limit < 2) throw std::invalid_argument("base_primes: limit must be >= 2");
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

namespace {

// A base-prime list with a hole produces silently wrong signatures (an
// untouched composite is declared prime), so the list is validated up front:
// it must be exactly the primes in [2, sqrt(hi-1)], in order. Each q is
// trial-divided by the already-verified prefix, which proves the whole
// prefix sound by induction; the cost is tiny next to the sieve itself.
void check_base_primes(const std::vector<std::uint64_t>& primes, std::uint64_t hi) {
    const std::uint64_t s = isqrt(hi - 1);
    if (s < 2) return;
    if (primes.empty() || primes.front() != 2)
        throw std::invalid_argument("sieve_segment: base primes must start at 2");
    std::size_t idx = 0;
    for (std::uint64_t q = 2; q <= s; ++q) {
        bool is_prime = true;
        for (std::size_t j = 0; j < idx; ++j) {
            const std::uint64_t p = primes[j];
            if (p > q / p) break;
            if (q % p == 0) {
                is_prime = false;
                break;
            }
        }
        if (is_prime) {
            if (idx >= primes.size() || primes[idx] != q)
                throw std::invalid_argument(
                    "sieve_segment: base primes must cover every prime <= sqrt(hi-1)");
            ++idx;
        } else if (idx < primes.size() && primes[idx] == q) {
            throw std::invalid_argument("sieve_segment: base prime list contains a composite");
        }
    }
    // entries beyond sqrt(hi-1) are unused; still reject a shuffled tail
    for (std::size_t j = (idx > 0 ? idx - 1 : 0); j + 1 < primes.size(); ++j)
        if (primes[j + 1] <= primes[j])
            throw std::invalid_argument("sieve_segment: base primes must be strictly ascending");
}

}  // namespace

Segment sieve_segment(std::uint64_t lo, std::uint64_t hi,
                      const std::vector<std::uint64_t>& primes) {
    if (lo < 2 || hi <= lo)
        throw std::invalid_argument("sieve_segment: need 2 <= lo < hi");
    check_base_primes(primes, hi);

    const auto len = static_cast<std::size_t>(hi - lo);
    Segment seg;
    seg.lo = lo;
    seg.hi = hi;
    seg.signatures.assign(len, FactorSignature{});

    // removed[i] is the product of all base-prime powers dividing n = lo + i.
    // Tracking the product instead of the quotient keeps the hot loops on
    // multiplies; the cofactor costs a single division per n at the end.
    std::vector<std::uint64_t> removed(len, 1);

    const std::uint64_t nmax = hi - 1;
    for (std::uint64_t p : primes) {
        if (p > nmax / p) break;  // p*p > nmax: larger primes can only be cofactors
        const std::uint64_t first = ((lo + p - 1) / p) * p;
        for (std::uint64_t m = first; m < hi; m += p) {
            const auto i = static_cast<std::size_t>(m - lo);
            removed[i] *= p;
            FactorSignature& sig = seg.signatures[i];
            if (sig.omega == 0) sig.spf = p;
            sig.lpf = p;
            ++sig.omega;
        }
        const std::uint64_t pp = p * p;
        const std::uint64_t first2 = ((lo + pp - 1) / pp) * pp;
        for (std::uint64_t m = first2; m < hi; m += pp) {
            const auto i = static_cast<std::size_t>(m - lo);
            seg.signatures[i].squarefree = false;
            // fold in the multiplicity beyond the first power
            std::uint64_t pk = pp;
            std::uint64_t extra = p;
            while (pk <= m / p && m % (pk * p) == 0) {
                pk *= p;
                extra *= p;
            }
            removed[i] *= extra;
        }
    }

    for (std::size_t i = 0; i < len; ++i) {
        const std::uint64_t n = lo + i;
        FactorSignature& sig = seg.signatures[i];
        if (sig.omega == 0) {
            // untouched by every base prime: n is prime
            sig.spf = n;
            sig.lpf = n;
            sig.omega = 1;
        } else if (removed[i] != n) {
            // surviving cofactor exceeds sqrt(hi-1), hence prime and largest;
            // it appears to the first power, so squarefree is unaffected
            sig.lpf = n / removed[i];
            ++sig.omega;
        }
    }
    return seg;
}

std::uint64_t count_primes(std::uint64_t x) {
    if (x < 2) return 0;
    const auto primes = base_primes(std::max<std::uint64_t>(isqrt(x), 2));
    constexpr std::uint64_t kBlock = std::uint64_t{1} << 20;
    std::vector<std::uint8_t> composite;
    std::uint64_t count = 0;
    for (std::uint64_t lo = 2; lo <= x; lo += kBlock) {
        const std::uint64_t hi = std::min(x, lo + kBlock - 1) + 1;
        composite.assign(static_cast<std::size_t>(hi - lo), 0);
        for (std::uint64_t p : primes) {
            if (p > (hi - 1) / p) break;
            std::uint64_t m = std::max(p * p, ((lo + p - 1) / p) * p);
            for (; m < hi; m += p) composite[static_cast<std::size_t>(m - lo)] = 1;
        }
        for (std::uint8_t c : composite) count += (c == 0);
    }
    return count;
}

}  // namespace ratiolab
