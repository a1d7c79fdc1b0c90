#ifndef POLECALC_RELATIONS_HPP
#define POLECALC_RELATIONS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polecalc {

// Thrown when an operation would exceed its desk-scale resource guard.
struct resource_limit_error : std::runtime_error {
  explicit resource_limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact 64-bit coefficient arithmetic. Overflow aborts, never wraps.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

// A finite ground set {0,...,size-1} with optional display labels.
struct GroundSet {
  int size = 0;
  std::vector<std::string> labels;  // empty, or one unique label per element

  GroundSet() = default;
  explicit GroundSet(int n);
  GroundSet(int n, std::vector<std::string> lab);
  std::string label(int i) const;
  bool operator==(const GroundSet& o) const { return size == o.size && labels == o.labels; }
};

// A binary relation, subset of Y x X, stored as a bit matrix with rows packed
// into 64-bit words so that composition is word-parallel.
class Relation {
 public:
  Relation() = default;
  Relation(int rows, int cols);
  static Relation identity(int n);
  static Relation full(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return wpr_; }
  bool square() const { return rows_ == cols_; }

  bool at(int r, int c) const {
    return (bits_[size_t(r) * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(int r, int c, bool v = true);
  uint64_t row_word(int r, int w) const { return bits_[size_t(r) * wpr_ + w]; }

  bool none() const;                           // no pair set
  int count() const;                           // number of pairs
  bool contains(const Relation& sub) const;    // sub as a subset of *this
  Relation united(const Relation& o) const;    // union, same shape

  bool operator==(const Relation& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
  }
  bool operator<(const Relation& o) const;  // shape, then bits; total order for map keys
  std::string to_string() const;            // rows of '0'/'1'

 private:
  int rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<uint64_t> bits_;
  friend Relation compose_rel(const Relation&, const Relation&);
};

// A bijection of {0,...,n-1}.
struct Permutation {
  std::vector<int> image;

  Permutation() = default;
  explicit Permutation(std::vector<int> img);
  static Permutation identity(int n);
  int size() const { return int(image.size()); }
  int operator()(int x) const { return image[x]; }
  Permutation inverse() const;
  Permutation after(const Permutation& g) const;  // x -> (*this)(g(x))
  bool is_identity() const;
  bool is_involution() const;
  bool operator==(const Permutation& o) const { return image == o.image; }
  bool operator<(const Permutation& o) const { return image < o.image; }
};

// Composition of S over Z x Y with T over Y x X; boolean matrix product.
Relation compose_rel(const Relation& s, const Relation& t);

// Transposed bit matrix.
Relation opposite_rel(const Relation& r);

// The relation {(sigma(x), x)}.
Relation delta_of_permutation(const Permutation& sigma);

// Bitwise negation of a square relation.
Relation complement_rel(const Relation& r);

// Reflexive, antisymmetric and transitive.
bool is_order(const Relation& r);

// All permutations of {0..n-1} in lexicographic order; guarded for n <= 8.
std::vector<Permutation> all_permutations(int n);

}  // namespace polecalc

#endif
