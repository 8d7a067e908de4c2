#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace avslope {

using Int = mpz_class;
using Rat = mpq_class;

// Reduced fraction with positive denominator; den == 0 is rejected.
Rat make_rat(const Int& num, const Int& den);

// Strict decimal integer syntax: [+-]?digits.
Int parse_int(const std::string& s);
// "a" or "a/b" with the same integer syntax on both sides.
Rat parse_rat(const std::string& s);

std::string int_str(const Int& z);
// "n" when the denominator is 1, else "n/d".
std::string rat_str(const Rat& q);

Int int_pow(const Int& base, unsigned long e);
Int binomial(unsigned long n, unsigned long k);

// v_p(x), x != 0.
long valuation(const Int& x, long p);
long valuation(const Rat& x, long p);

bool is_prime_u64(std::uint64_t n);
// Primes in [lo, hi], ascending.
std::vector<long> primes_in(long lo, long hi);
// Distinct prime factors of |n|, ascending; n must be nonzero.
std::vector<Int> distinct_prime_factors(const Int& n);

unsigned default_jobs();

// Runs fn(0..n-1), distributing over `jobs` threads when jobs > 1. Callers
// write results into index-addressed slots, so output never depends on the
// schedule. The first exception thrown by fn is rethrown after all workers
// finish.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace avslope
