#include "resval/resultant.hpp"

#include <utility>

#include "resval/errors.hpp"

namespace resval {

IntegerMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g) {
  const int m = f.degree();
  const int n = g.degree();
  const auto size = static_cast<std::size_t>(m + n);
  IntegerMatrix s(size, std::vector<Integer>(size, 0));
  // n shifted rows of f, then m shifted rows of g; coefficients highest first.
  for (int row = 0; row < n; ++row) {
    for (int i = 0; i <= m; ++i) s[row][row + i] = f.coefficient(m - i);
  }
  for (int row = 0; row < m; ++row) {
    for (int j = 0; j <= n; ++j) s[n + row][row + j] = g.coefficient(n - j);
  }
  return s;
}

Integer bareiss_determinant(IntegerMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a[swap_with][k] == 0) ++swap_with;
      if (swap_with == n) return 0;
      std::swap(a[k], a[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
      }
      a[i][k] = 0;
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Integer resultant(const Polynomial& f, const Polynomial& g) {
  if (!f.is_monic() || !g.is_monic()) throw NotMonicError("resultant requires monic polynomials");
  if (f.degree() < 1 || g.degree() < 1) throw NotMonicError("resultant requires nonconstant polynomials");
  return bareiss_determinant(sylvester_matrix(f, g));
}

}  // namespace resval
