#include "polecalc/exact_linalg.hpp"

#include <stdexcept>

namespace polecalc {

void IntMat::append_row(const std::vector<long long>& row) {
  if (rows == 0 && cols == 0) cols = int(row.size());
  if (int(row.size()) != cols) throw std::invalid_argument("row length mismatch");
  for (long long v : row) a.emplace_back(v);
  ++rows;
}

int rank_bareiss(IntMat m) {
  int rank = 0;
  BigInt prev = 1;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    const BigInt piv = m.at(rank, col);
    for (int r = rank + 1; r < m.rows; ++r) {
      const BigInt factor = m.at(r, col);
      for (int c = col; c < m.cols; ++c) {
        BigInt v = piv * m.at(r, c) - factor * m.at(rank, c);
        m.at(r, c) = v / prev;  // exact by the Bareiss identity
      }
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

}  // namespace polecalc
