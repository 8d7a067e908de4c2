#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

using avslope::CurveSpec;
using avslope::Int;
using avslope::NewtonPolygon;
using avslope::Rat;
using avslope::Slope;
using avslope::SlopeMultiset;
using avslope::WeilPolynomial;

namespace {

void partition_rec(const std::vector<Slope>& slots, std::size_t idx, long remaining,
                   std::vector<long>& mult, std::vector<NewtonPolygon>& out) {
  if (idx == slots.size()) {
    if (remaining != 0) return;
    // filter: symmetry m(s) = m(1-s)
    for (std::size_t a = 0; a < slots.size(); ++a) {
      Slope mirror = Slope(1) - slots[a];
      long mm = 0;
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (slots[b] == mirror) mm = mult[b];
      if (mm != mult[a]) return;
    }
    NewtonPolygon np;
    long mass = 0;
    for (std::size_t a = 0; a < slots.size(); ++a) {
      if (mult[a] > 0) np.pairs.emplace_back(slots[a], mult[a]);
      mass += mult[a];
    }
    np.g = mass / 2;
    out.push_back(np);
    return;
  }
  long b = slots[idx].get_den().get_si();
  for (long m = 0; m <= remaining; m += b) {
    mult[idx] = m;
    partition_rec(slots, idx + 1, remaining - m, mult, out);
  }
  mult[idx] = 0;
}

}  // namespace

std::vector<NewtonPolygon> enumerate_by_partition(long g) {
  std::vector<Slope> slots;
  for (long b = 1; b <= 2 * g; ++b)
    for (long a = 0; a <= b; ++a)
      if (std::gcd(a, b) == 1 || a == 0) {
        Slope s = avslope::make_rat(a, b);
        if (std::find(slots.begin(), slots.end(), s) == slots.end()) slots.push_back(s);
      }
  std::sort(slots.begin(), slots.end());
  std::vector<long> mult(slots.size(), 0);
  std::vector<NewtonPolygon> out;
  partition_rec(slots, 0, 2 * g, mult, out);
  std::sort(out.begin(), out.end(), avslope::polygon_less);
  return out;
}

SlopeMultiset wedge_by_subsets(const NewtonPolygon& np, long i) {
  std::vector<Slope> flat;
  for (const auto& [s, m] : np.pairs)
    for (long k = 0; k < m; ++k) flat.push_back(s);
  long n = static_cast<long>(flat.size());
  if (i < 1 || i > n) throw std::runtime_error("bad wedge degree");
  std::map<Slope, Int> acc;
  std::vector<long> idx(i);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    Slope sum(0);
    for (long k = 0; k < i; ++k) sum += flat[idx[k]];
    acc[sum] += 1;
    long k = i - 1;
    while (k >= 0 && idx[k] == n - i + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (long j = k + 1; j < i; ++j) idx[j] = idx[j - 1] + 1;
  }
  SlopeMultiset out;
  out.wedge_degree = i;
  out.pairs.assign(acc.begin(), acc.end());
  return out;
}

namespace {

using Poly = std::vector<Int>;  // ascending

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Poly poly_add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (std::size_t j = 0; j < b.size(); ++j) a[j] += b[j];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (std::size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

// det over Z[t] by first-row cofactor expansion
Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly det{Int(0)};
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Poly>> sub(n - 1, std::vector<Poly>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        sub[r - 1][cc++] = m[r][k];
      }
    }
    Poly term = poly_mul(m[0][c], poly_det(sub));
    det = c % 2 == 0 ? poly_add(det, term) : poly_sub(det, term);
  }
  return det;
}

using IMat = std::vector<std::vector<Int>>;

IMat mat_mul(const IMat& a, const IMat& b) {
  std::size_t n = a.size();
  IMat c(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// char poly of an integer matrix (ascending), by polynomial cofactor det
Poly char_poly_cofactor(const IMat& m) {
  std::size_t n = m.size();
  std::vector<std::vector<Poly>> tm(n, std::vector<Poly>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r == c)
        tm[r][c] = Poly{-m[r][c], Int(1)};
      else
        tm[r][c] = Poly{-m[r][c]};
    }
  return poly_det(tm);
}

}  // namespace

std::vector<Int> wedge_poly_by_power_sums(const WeilPolynomial& f, long i) {
  long N = f.degree();
  if (i < 1 || i > N) throw std::runtime_error("bad wedge degree");
  IMat comp(N, std::vector<Int>(N, Int(0)));
  for (long r = 1; r < N; ++r) comp[r][r - 1] = 1;
  for (long r = 0; r < N; ++r) comp[r][N - 1] = -f.coeffs[r];

  // D = C(N, i)
  Int d_int = avslope::binomial(static_cast<unsigned long>(N), static_cast<unsigned long>(i));
  long D = d_int.get_si();

  // p_k = tr(Lambda^i(C^k)) = e_i(eigenvalues of C^k), read from char(C^k)
  std::vector<Int> p(D + 1);
  IMat pw = comp;
  for (long k = 1; k <= D; ++k) {
    Poly cp = char_poly_cofactor(pw);  // degree N, ascending
    Int ei = cp[N - i];
    if (i % 2 != 0) ei = -ei;
    p[k] = ei;
    if (k < D) pw = mat_mul(pw, comp);
  }

  // Newton's identities: k e_k = sum_{j=1..k} (-1)^{j-1} e_{k-j} p_j
  std::vector<Int> e(D + 1);
  e[0] = 1;
  for (long k = 1; k <= D; ++k) {
    Int s = 0;
    for (long j = 1; j <= k; ++j) {
      Int term = e[k - j] * p[j];
      if (j % 2 == 0) term = -term;
      s += term;
    }
    if (!mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(k)))
      throw std::runtime_error("newton identity division failed");
    e[k] = s / k;
  }

  // char(Lambda^i C) = sum (-1)^k e_k t^{D-k}
  std::vector<Int> asc(D + 1);
  for (long k = 0; k <= D; ++k) {
    Int c = e[k];
    if (k % 2 != 0) c = -c;
    asc[D - k] = c;
  }
  return asc;
}

long count_ec_by_pairs(const CurveSpec& c, long p) {
  auto md = [&](const Int& z) { return static_cast<long>(mpz_fdiv_ui(z.get_mpz_t(), p)); };
  long a1 = md(c.coeffs[0]), a2 = md(c.coeffs[1]), a3 = md(c.coeffs[2]), a4 = md(c.coeffs[3]),
       a6 = md(c.coeffs[4]);
  long count = 1;  // infinity
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y) {
      long lhs = (y * y + a1 * x % p * y + a3 * y) % p;
      long rhs = ((x * x % p * x) % p + a2 * x % p * x + a4 * x + a6) % p;
      if (lhs == rhs) ++count;
    }
  return count;
}

std::pair<long, long> count_hyp2_by_tables(const CurveSpec& c, long p) {
  long d = static_cast<long>(c.coeffs.size()) - 1;
  std::vector<long> f(d + 1);
  for (long j = 0; j <= d; ++j)
    f[j] = static_cast<long>(mpz_fdiv_ui(c.coeffs[j].get_mpz_t(), p));

  // F_p square counts
  std::vector<long> sq(p, 0);
  for (long y = 0; y < p; ++y) ++sq[(y * y) % p];
  long n1 = 0;
  for (long x = 0; x < p; ++x) {
    long v = 0;
    for (long j = d; j >= 0; --j) v = (v * x + f[j]) % p;
    n1 += sq[v];
  }
  n1 += d == 5 ? 1 : sq[f[d]];

  // F_{p^2} on the largest non-residue
  long r = -1;
  for (long v = p - 1; v >= 2; --v)
    if (sq[v] == 0) {
      r = v;
      break;
    }
  if (r < 0) throw std::runtime_error("no non-residue");
  auto id = [&](long a, long b) { return static_cast<std::size_t>(a * p + b); };
  std::vector<long> sq2(static_cast<std::size_t>(p) * p, 0);
  for (long ya = 0; ya < p; ++ya)
    for (long yb = 0; yb < p; ++yb)
      ++sq2[id((ya * ya + yb * yb % p * r) % p, (2 * ya * yb) % p)];
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
      n2 += sq2[id(va, vb)];
    }
  n2 += d == 5 ? 1 : sq2[id(f[d], 0)];
  return {n1, n2};
}

Int ec_disc_by_c_invariants(const CurveSpec& c) {
  auto w = avslope::weierstrass_data(c);
  Int c4 = w.b2 * w.b2 - 24 * w.b4;
  Int c6 = -w.b2 * w.b2 * w.b2 + 36 * w.b2 * w.b4 - 216 * w.b6;
  Int num = c4 * c4 * c4 - c6 * c6;
  if (!mpz_divisible_ui_p(num.get_mpz_t(), 1728ul))
    throw std::runtime_error("c4^3 - c6^2 not divisible by 1728");
  return num / 1728;
}

Int det_by_subset_dp(const std::vector<std::vector<Int>>& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n > 24) throw std::runtime_error("matrix too large for subset DP");
  // dp[mask] = det of the top-left |mask| x (columns in mask) block
  std::vector<Int> dp(1u << n, Int(0));
  dp[0] = 1;
  for (std::size_t mask = 1; mask < (1u << n); ++mask) {
    std::size_t row = static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask))) - 1;
    Int acc = 0;
    int sign = row % 2 == 0 ? 1 : -1;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      Int sub = dp[mask & ~(1u << col)];
      if (sign > 0)
        acc += m[row][col] * sub;
      else
        acc -= m[row][col] * sub;
      sign = -sign;
    }
    dp[mask] = acc;
  }
  return dp[(1u << n) - 1];
}

Int hyp_disc_by_subset_dp(const CurveSpec& c) {
  const auto& f = c.coeffs;
  long d = static_cast<long>(f.size()) - 1;
  std::vector<Int> fp;
  for (long j = 1; j <= d; ++j) fp.push_back(Int(j) * f[j]);
  long n = d + (d - 1);
  std::vector<std::vector<Int>> s(n, std::vector<Int>(n, Int(0)));
  for (long r = 0; r < d - 1; ++r)
    for (long j = 0; j <= d; ++j) s[r][r + j] = f[d - j];
  for (long r = 0; r < d; ++r)
    for (long j = 0; j <= d - 1; ++j) s[d - 1 + r][r + j] = fp[d - 1 - j];
  Int res = det_by_subset_dp(s);
  Int disc;
  mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(), f[d].get_mpz_t());
  if ((d * (d - 1) / 2) % 2 != 0) disc = -disc;
  return disc;
}

SlopeMultiset hull_by_gift_wrapping(const std::vector<Int>& coeffs, long p, long n) {
  std::vector<std::pair<long, long>> pts;
  for (long j = 0; j < static_cast<long>(coeffs.size()); ++j)
    if (coeffs[j] != 0) pts.emplace_back(j, avslope::valuation(coeffs[j], p));
  // from the leftmost point, repeatedly take the smallest slope to any
  // remaining point, largest step on ties
  SlopeMultiset out;
  out.wedge_degree = 1;
  std::size_t cur = 0;
  std::vector<std::pair<Slope, Int>> segs;
  while (pts[cur].first != pts.back().first) {
    std::size_t best = cur + 1;
    Rat best_slope =
        avslope::make_rat(Int(pts[cur + 1].second - pts[cur].second), Int(pts[cur + 1].first - pts[cur].first));
    for (std::size_t k = cur + 2; k < pts.size(); ++k) {
      Rat sl = avslope::make_rat(Int(pts[k].second - pts[cur].second), Int(pts[k].first - pts[cur].first));
      if (sl < best_slope || (sl == best_slope && pts[k].first > pts[best].first)) {
        best_slope = sl;
        best = k;
      }
    }
    segs.emplace_back(avslope::make_rat(-best_slope.get_num(), best_slope.get_den() * n),
                      Int(pts[best].first - pts[cur].first));
    cur = best;
  }
  std::reverse(segs.begin(), segs.end());
  // merge equal neighbors
  for (const auto& sgm : segs) {
    if (!out.pairs.empty() && out.pairs.back().first == sgm.first)
      out.pairs.back().second += sgm.second;
    else
      out.pairs.push_back(sgm);
  }
  return out;
}

}  // namespace oracle
