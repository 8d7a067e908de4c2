#include "avslope/arith.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "avslope/errors.hpp"

namespace avslope {

const char* errc_name(errc c) {
  switch (c) {
    case errc::total_mass_odd: return "TotalMassOdd";
    case errc::symmetry_violation: return "SymmetryViolation";
    case errc::denominator_violation: return "DenominatorViolation";
    case errc::slope_out_of_range: return "SlopeOutOfRange";
    case errc::bad_multiplicity: return "BadMultiplicity";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::wedge_degree_out_of_range: return "WedgeDegreeOutOfRange";
    case errc::empty_multiset: return "EmptyMultiset";
    case errc::not_monic: return "NotMonic";
    case errc::odd_degree: return "OddDegree";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::functional_equation_failed: return "FunctionalEquationFailed";
    case errc::asymmetric_polygon: return "AsymmetricPolygon";
    case errc::zero_constant_term: return "ZeroConstantTerm";
    case errc::not_prime: return "NotPrime";
    case errc::zero_discriminant: return "ZeroDiscriminant";
    case errc::bad_prime: return "BadPrime";
    case errc::small_prime: return "SmallPrime";
    case errc::even_prime: return "EvenPrime";
    case errc::hasse_violation: return "HasseViolation";
    case errc::non_integral_coefficient: return "NonIntegralCoefficient";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(errc::parse_error, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

static bool valid_int_token(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int parse_int(const std::string& s) {
  if (!valid_int_token(s)) fail(errc::parse_error, "bad integer '" + s + "'");
  // mpz_set_str takes a minus sign but not a plus
  return Int(s[0] == '+' ? s.substr(1) : s, 10);
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) fail(errc::parse_error, "zero denominator in '" + s + "'");
  return make_rat(num, den);
}

std::string int_str(const Int& z) { return z.get_str(); }

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

long valuation(const Int& x, long p) {
  if (x == 0) fail(errc::parse_error, "valuation of zero");
  if (p < 2) fail(errc::not_prime, "valuation base " + std::to_string(p));
  Int reduced;
  Int pz(p);
  return static_cast<long>(mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

long valuation(const Rat& x, long p) {
  if (x == 0) fail(errc::parse_error, "valuation of zero");
  return valuation(Int(x.get_num()), p) - valuation(Int(x.get_den()), p);
}

// deterministic Miller-Rabin, valid for all 64-bit inputs with these bases
static std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

static std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<long> primes_in(long lo, long hi) {
  std::vector<long> out;
  if (hi < 2 || hi < lo) return out;
  if (lo < 2) lo = 2;
  std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
  for (long i = 2; i * i <= hi; ++i)
    if (!composite[i])
      for (long j = i * i; j <= hi; j += i) composite[j] = true;
  for (long i = lo; i <= hi; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

static std::uint64_t pollard_rho(std::uint64_t n) {
  // Brent's cycle variant; n odd composite, no factor below 10^6
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto step = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      std::uint64_t diff = x > y ? x - y : y - x;
      if (diff == 0) {
        d = 0;
        break;
      }
      d = std::gcd(diff, n);
    }
    if (d != 0 && d != n) return d;
  }
}

static void factor_u64_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_u64_into(d, out);
  factor_u64_into(n / d, out);
}

std::vector<Int> distinct_prime_factors(const Int& n) {
  if (n == 0) fail(errc::parse_error, "factoring zero");
  Int m = abs(n);
  std::vector<Int> out;
  // trial division below 10^6, then 64-bit machinery on the cofactor
  for (long p : primes_in(2, 1000000)) {
    if (m == 1) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
      out.emplace_back(p);
      Int pz(p);
      Int reduced;
      mpz_remove(reduced.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
      m = reduced;
    }
  }
  if (m != 1) {
    if (!m.fits_ulong_p()) fail(errc::bound_exceeded, "cofactor exceeds 64 bits: " + m.get_str());
    std::vector<std::uint64_t> fs;
    factor_u64_into(m.get_ui(), fs);
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    for (std::uint64_t f : fs) out.emplace_back(std::to_string(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned default_jobs() {
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  if (jobs == 0) jobs = default_jobs();
  if (jobs > n) jobs = static_cast<unsigned>(n);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace avslope
