#ifndef POLECALC_EXACT_LINALG_HPP
#define POLECALC_EXACT_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace polecalc {

using BigInt = boost::multiprecision::cpp_int;

// Dense exact integer matrix for span and rank computations.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<BigInt> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  BigInt& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const BigInt& at(int r, int c) const { return a[size_t(r) * cols + c]; }
  void append_row(const std::vector<long long>& row);
};

// Rank over the rationals by fraction-free (Bareiss) elimination; exact,
// no tolerances. Works on a copy.
int rank_bareiss(IntMat m);

}  // namespace polecalc

#endif
