#include "avslope/scan.hpp"

#include <algorithm>

#include "avslope/errors.hpp"

namespace avslope {

namespace {

// table-based counting keeps every intermediate product below 2 p^2 + p
constexpr long kMaxCountingPrime = 1L << 26;

long mod_coeff(const Int& a, long p) {
  return static_cast<long>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p)));
}

// chi[v] = Legendre symbol (v | p) for v in [0, p)
std::vector<signed char> legendre_table(long p) {
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (long y = 1; 2 * y <= p; ++y) chi[static_cast<std::size_t>((y * y) % p)] = 1;
  return chi;
}

bool divides_product(const CurveSpec& c, long p) {
  Int prod = bad_reduction_product(c);
  return mpz_divisible_ui_p(prod.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

}  // namespace

long count_points_ec(const CurveSpec& c, long p) {
  if (c.kind != CurveSpec::Kind::Elliptic) fail(errc::parse_error, "not an elliptic model");
  if (p < 5) fail(errc::small_prime, "p = " + std::to_string(p) + " below counting threshold 5");
  if (p > kMaxCountingPrime) fail(errc::bound_exceeded, "p = " + std::to_string(p));
  if (!is_prime_u64(static_cast<std::uint64_t>(p))) fail(errc::not_prime, "p = " + std::to_string(p));
  if (divides_product(c, p)) fail(errc::bad_prime, "p = " + std::to_string(p) + " divides the discriminant");

  // complete the square: y^2 = x^3 + (b2/4) x^2 + (b4/2) x + b6/4, i.e.
  // count via the quartic-free form 4 f(x) = ((4x + b2) x + 2 b4) x + b6
  auto w = weierstrass_data(c);
  long b2 = mod_coeff(w.b2, p);
  long b4_2 = mod_coeff(2 * w.b4, p);
  long b6 = mod_coeff(w.b6, p);
  auto chi = legendre_table(p);
  long sum = 0;
  for (long x = 0; x < p; ++x) {
    long v = ((4 * x + b2) % p * x + b4_2) % p * x % p;
    v = (v + b6) % p;
    sum += chi[static_cast<std::size_t>(v)];
  }
  return p + 1 + sum;
}

WeilPolynomial frobenius_poly_ec(long n_points, long p) {
  if (!is_prime_u64(static_cast<std::uint64_t>(p))) fail(errc::not_prime, "p = " + std::to_string(p));
  long a = p + 1 - n_points;
  if (Int(a) * a > 4 * Int(p))
    fail(errc::hasse_violation, "a_p = " + std::to_string(a) + " at p = " + std::to_string(p));
  return validate_weil({Int(p), Int(-a), Int(1)}, p, 1, 1);
}

std::pair<long, long> count_points_hyp2(const CurveSpec& c, long p) {
  if (c.kind != CurveSpec::Kind::Hyperelliptic2) fail(errc::parse_error, "not a genus-2 model");
  if (p == 2) fail(errc::even_prime, "y^2 = f(x) needs odd characteristic");
  if (p > kMaxCountingPrime) fail(errc::bound_exceeded, "p = " + std::to_string(p));
  if (!is_prime_u64(static_cast<std::uint64_t>(p))) fail(errc::not_prime, "p = " + std::to_string(p));
  if (divides_product(c, p)) fail(errc::bad_prime, "p = " + std::to_string(p) + " divides 2 disc(f) lc(f)");

  long d = static_cast<long>(c.coeffs.size()) - 1;
  std::vector<long> f(d + 1);
  for (long j = 0; j <= d; ++j) f[j] = mod_coeff(c.coeffs[j], p);
  auto chi = legendre_table(p);

  // over F_p
  long n1 = 0;
  for (long x = 0; x < p; ++x) {
    long v = 0;
    for (long j = d; j >= 0; --j) v = (v * x + f[j]) % p;
    n1 += 1 + chi[static_cast<std::size_t>(v)];
  }
  // points at infinity on the smooth model: one for deg 5; for deg 6 one per
  // square root of lc(f)
  n1 += d == 5 ? 1 : (chi[static_cast<std::size_t>(f[d])] == 1 ? 2 : 0);

  // over F_{p^2} = F_p[u]/(u^2 - r), r the smallest non-residue; the norm map
  // turns the quadratic character into chi(a^2 - r b^2)
  long r = 2;
  while (chi[static_cast<std::size_t>(r)] != -1) ++r;
  long n2 = 0;
  for (long xa = 0; xa < p; ++xa)
    for (long xb = 0; xb < p; ++xb) {
      long va = 0, vb = 0;
      for (long j = d; j >= 0; --j) {
        long ta = (va * xa + vb * xb % p * r + f[j]) % p;
        long tb = (va * xb + vb * xa) % p;
        va = ta;
        vb = tb;
      }
      long norm = (va * va - vb * vb % p * r % p + p * p) % p;
      n2 += 1 + chi[static_cast<std::size_t>(norm)];
    }
  // in F_{p^2} every element of F_p* is a square (norms are surjective onto
  // squares of the subfield), so deg 6 always has two points at infinity
  n2 += d == 5 ? 1 : 2;
  return {n1, n2};
}

WeilPolynomial frobenius_poly_hyp2(long n1, long n2, long p) {
  if (!is_prime_u64(static_cast<std::uint64_t>(p))) fail(errc::not_prime, "p = " + std::to_string(p));
  long s1 = p + 1 - n1;
  Int s2 = Int(p) * p + 1 - n2;
  if (Int(s1) * s1 > 16 * Int(p))
    fail(errc::hasse_violation, "s1 = " + std::to_string(s1) + " at p = " + std::to_string(p));
  Int num = Int(s1) * s1 - s2;
  if (mpz_odd_p(num.get_mpz_t()))
    fail(errc::non_integral_coefficient, "(s1^2 - s2)/2 at p = " + std::to_string(p));
  Int a1 = -s1;
  Int a2 = num / 2;
  return validate_weil({Int(p) * p, Int(p) * a1, a2, a1, Int(1)}, p, 1, 2);
}

const char* status_name(ReductionStatus s) {
  switch (s) {
    case ReductionStatus::Good: return "Good";
    case ReductionStatus::Bad: return "Bad";
    case ReductionStatus::Skipped: return "Skipped";
  }
  return "?";
}

ScanRecord record_from_frobenius(const WeilPolynomial& f) {
  ScanRecord rec;
  rec.p = f.p;
  rec.status = ReductionStatus::Good;
  rec.frobenius = f;
  rec.polygon = h1_polygon(f);
  rec.cls = classify(*rec.polygon);
  long g = rec.polygon->g;
  auto wedge = g == 1 ? f : wedge_char_poly(f, g);
  rec.min_wedge_slope = min_slope(newton_polygon_of(wedge));
  rec.twist_integral = is_integral(tate_twist(wedge));
  rec.wedge_trace = wedge.trace();
  rec.trace_div_p =
      mpz_divisible_ui_p(rec.wedge_trace.get_mpz_t(), static_cast<unsigned long>(f.p)) != 0;
  if (g >= 2) rec.audit = audit_entry(f, g);
  return rec;
}

namespace {

ScanRecord scan_one(const CurveSpec& c, long p, const Int& bad_product) {
  ScanRecord rec;
  rec.p = p;
  if (mpz_divisible_ui_p(bad_product.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
    rec.status = ReductionStatus::Bad;
    return rec;
  }
  bool skip = c.kind == CurveSpec::Kind::Elliptic ? p < 5 : p < 3;
  if (skip) {
    rec.status = ReductionStatus::Skipped;
    return rec;
  }
  WeilPolynomial f;
  if (c.kind == CurveSpec::Kind::Elliptic) {
    f = frobenius_poly_ec(count_points_ec(c, p), p);
  } else {
    auto [n1, n2] = count_points_hyp2(c, p);
    f = frobenius_poly_hyp2(n1, n2, p);
  }
  return record_from_frobenius(f);
}

}  // namespace

Rat DensityReport::freq(long count) const {
  if (good == 0) return Rat(0);
  return make_rat(Int(count), Int(good));
}

SelfProductReport self_product_of_records(const std::vector<ScanRecord>& records) {
  SelfProductReport sp;
  for (const auto& rec : records) {
    if (rec.status != ReductionStatus::Good) continue;
    ++sp.good;
    auto doubled = product_polygon(*rec.polygon, *rec.polygon);
    switch (classify(doubled).label) {
      case Label::Ordinary:
        ++sp.ordinary;
        ++sp.hodge_witt;
        break;
      case Label::HodgeWittNotOrdinary:
        ++sp.hodge_witt;
        break;
      case Label::NonHodgeWitt:
        ++sp.non_hodge_witt;
        break;
    }
  }
  return sp;
}

DensityReport report_from_records(const std::string& label, const std::vector<ScanRecord>& records) {
  DensityReport rep;
  rep.label = label;
  rep.primes_scanned = static_cast<long>(records.size());
  for (const auto& rec : records) {
    switch (rec.status) {
      case ReductionStatus::Bad: ++rep.bad; break;
      case ReductionStatus::Skipped: ++rep.skipped; break;
      case ReductionStatus::Good: {
        ++rep.good;
        switch (rec.cls->label) {
          case Label::Ordinary: ++rep.ordinary; break;
          case Label::HodgeWittNotOrdinary: ++rep.hw_not_ordinary; break;
          case Label::NonHodgeWitt: ++rep.non_hodge_witt; break;
        }
        if (rec.cls->supersingular) ++rep.supersingular;
        break;
      }
    }
  }
  return rep;
}

ScanResult scan(const CurveSpec& c, long p_min, long p_max, unsigned jobs) {
  if (p_min > p_max)
    fail(errc::parse_error,
         "empty range [" + std::to_string(p_min) + ", " + std::to_string(p_max) + "]");
  ScanResult res;
  res.curve = c;
  Int bad_product = bad_reduction_product(c);
  auto ps = primes_in(std::max<long>(2, p_min), p_max);
  res.records.resize(ps.size());
  parallel_for(ps.size(), jobs,
               [&](std::size_t k) { res.records[k] = scan_one(c, ps[k], bad_product); });
  res.report = report_from_records(c.label, res.records);
  res.self_product = self_product_of_records(res.records);
  return res;
}

}  // namespace avslope
