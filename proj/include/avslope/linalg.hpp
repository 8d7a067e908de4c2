#pragma once
// Division-free exact linear algebra over Z.

#include <vector>

#include "avslope/arith.hpp"

namespace avslope {

using Mat = std::vector<std::vector<Int>>;

// Determinant by fraction-free (Bareiss) elimination.
Int det_exact(Mat a);

// Characteristic polynomial det(tI - A) by the Berkowitz method,
// coefficients descending: out[0] = 1, out[n] = (-1)^n det(A).
std::vector<Int> char_poly(const Mat& a);

}  // namespace avslope
