#include "dzeta/combinatorics.hpp"

#include <mutex>
#include <vector>

namespace dzeta {

BigRational binom(long long n, long long r) {
    if (n < 0) throw domain_error("binom: negative upper index");
    if (r < 0 || r > n) return BigRational(0);
    // multiplicative form, exact at every step since C(n,k) is an integer
    if (r > n - r) r = n - r;
    BigInt acc = 1;
    for (long long k = 1; k <= r; ++k) {
        acc *= n - r + k;
        acc /= k;
    }
    return BigRational(acc);
}

BigRational harmonic(long long N) {
    if (N < 1) throw domain_error("harmonic: N must be >= 1");
    BigRational h = 0;
    for (long long k = 1; k <= N; ++k) h += rat(1, k);
    return h;
}

namespace {

std::mutex bernoulli_mutex;
// B_0, B_1, ... computed so far
std::vector<BigRational> bernoulli_cache = {BigRational(1), rat(-1, 2)};

} // namespace

BigRational bernoulli(long long n) {
    if (n < 0) throw domain_error("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    while (static_cast<long long>(bernoulli_cache.size()) <= n) {
        const long long m = static_cast<long long>(bernoulli_cache.size());
        // B_m = -1/(m+1) * sum_{k=0..m-1} binom(m+1,k) B_k
        BigRational s = 0;
        for (long long k = 0; k < m; ++k) s += binom(m + 1, k) * bernoulli_cache[k];
        bernoulli_cache.push_back(-s / BigRational(m + 1));
    }
    return bernoulli_cache[n];
}

} // namespace dzeta
