#include "avslope/linalg.hpp"

#include <utility>

namespace avslope {

Int det_exact(Mat a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        // Bareiss: the previous pivot divides exactly
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

std::vector<Int> char_poly(const Mat& a) {
  std::size_t n = a.size();
  std::vector<Int> p{Int(1)};
  for (std::size_t i = n; i-- > 0;) {
    std::size_t m = n - i;  // size of the trailing principal block
    // first column of the Berkowitz Toeplitz matrix:
    // 1, -a_ii, -(R C), -(R B C), -(R B^2 C), ...
    std::vector<Int> t(m + 1);
    t[0] = 1;
    t[1] = -a[i][i];
    if (m >= 2) {
      std::size_t w = n - i - 1;
      std::vector<Int> v(w);
      for (std::size_t r = 0; r < w; ++r) v[r] = a[i + 1 + r][i];
      for (std::size_t k = 2; k <= m; ++k) {
        Int dot = 0;
        for (std::size_t c = 0; c < w; ++c) dot += a[i][i + 1 + c] * v[c];
        t[k] = -dot;
        if (k < m) {
          std::vector<Int> v2(w, Int(0));
          for (std::size_t r = 0; r < w; ++r)
            for (std::size_t c = 0; c < w; ++c) v2[r] += a[i + 1 + r][i + 1 + c] * v[c];
          v = std::move(v2);
        }
      }
    }
    std::vector<Int> pn(m + 1, Int(0));
    for (std::size_t r = 0; r <= m; ++r)
      for (std::size_t c = 0; c < p.size() && c <= r; ++c) pn[r] += t[r - c] * p[c];
    p = std::move(pn);
  }
  return p;
}

}  // namespace avslope
