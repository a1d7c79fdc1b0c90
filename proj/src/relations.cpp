#include "polecalc/relations.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace polecalc {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in addition");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in multiplication");
  return r;
}

GroundSet::GroundSet(int n) : size(n) {
  if (n < 0) throw std::invalid_argument("ground set size must be non-negative");
}

GroundSet::GroundSet(int n, std::vector<std::string> lab) : size(n), labels(std::move(lab)) {
  if (n < 0) throw std::invalid_argument("ground set size must be non-negative");
  if (!labels.empty()) {
    if (int(labels.size()) != n) throw std::invalid_argument("label count must equal ground set size");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (int(seen.size()) != n) throw std::invalid_argument("labels must be unique");
  }
}

std::string GroundSet::label(int i) const {
  if (i < 0 || i >= size) throw std::out_of_range("ground set index");
  return labels.empty() ? std::to_string(i) : labels[i];
}

Relation::Relation(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative relation shape");
  wpr_ = cols == 0 ? 1 : (cols + 63) / 64;
  bits_.assign(size_t(rows) * wpr_, 0);
}

Relation Relation::identity(int n) {
  Relation r(n, n);
  for (int i = 0; i < n; ++i) r.set(i, i);
  return r;
}

Relation Relation::full(int rows, int cols) {
  Relation r(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.set(i, j);
  return r;
}

void Relation::set(int r, int c, bool v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("relation index");
  uint64_t& w = bits_[size_t(r) * wpr_ + (c >> 6)];
  uint64_t m = uint64_t(1) << (c & 63);
  if (v)
    w |= m;
  else
    w &= ~m;
}

bool Relation::none() const {
  for (uint64_t w : bits_)
    if (w) return false;
  return true;
}

int Relation::count() const {
  int c = 0;
  for (uint64_t w : bits_) c += std::popcount(w);
  return c;
}

bool Relation::contains(const Relation& sub) const {
  if (rows_ != sub.rows_ || cols_ != sub.cols_) throw std::invalid_argument("shape mismatch in containment");
  for (size_t i = 0; i < bits_.size(); ++i)
    if (sub.bits_[i] & ~bits_[i]) return false;
  return true;
}

Relation Relation::united(const Relation& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in union");
  Relation r = *this;
  for (size_t i = 0; i < r.bits_.size(); ++i) r.bits_[i] |= o.bits_[i];
  return r;
}

bool Relation::operator<(const Relation& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  return bits_ < o.bits_;
}

std::string Relation::to_string() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) s += at(i, j) ? '1' : '0';
    if (i + 1 < rows_) s += '\n';
  }
  return s;
}

Relation compose_rel(const Relation& s, const Relation& t) {
  if (s.cols() != t.rows()) throw std::invalid_argument("dimension error: inner shapes differ in composition");
  Relation r(s.rows(), t.cols());
  const int wpr = r.wpr_;
  for (int z = 0; z < s.rows(); ++z) {
    uint64_t* out = &r.bits_[size_t(z) * wpr];
    for (int y = 0; y < s.cols(); ++y) {
      if (!s.at(z, y)) continue;
      const uint64_t* row = &t.bits_[size_t(y) * t.wpr_];
      for (int w = 0; w < wpr; ++w) out[w] |= row[w];
    }
  }
  return r;
}

Relation opposite_rel(const Relation& r) {
  Relation o(r.cols(), r.rows());
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j)
      if (r.at(i, j)) o.set(j, i);
  return o;
}

Relation delta_of_permutation(const Permutation& sigma) {
  int n = sigma.size();
  Relation r(n, n);
  for (int x = 0; x < n; ++x) r.set(sigma(x), x);
  return r;
}

Relation complement_rel(const Relation& r) {
  if (!r.square()) throw std::invalid_argument("dimension error: complement needs a square relation");
  Relation c(r.rows(), r.cols());
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j)
      if (!r.at(i, j)) c.set(i, j);
  return c;
}

bool is_order(const Relation& r) {
  if (!r.square()) return false;
  int n = r.rows();
  for (int i = 0; i < n; ++i)
    if (!r.at(i, i)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && r.at(i, j) && r.at(j, i)) return false;
      if (!r.at(i, j)) continue;
      for (int k = 0; k < n; ++k)
        if (r.at(j, k) && !r.at(i, k)) return false;
    }
  return true;
}

Permutation::Permutation(std::vector<int> img) : image(std::move(img)) {
  std::vector<char> seen(image.size(), 0);
  for (int v : image) {
    if (v < 0 || v >= int(image.size()) || seen[v]) throw std::invalid_argument("permutation image is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(n);
  for (int i = 0; i < n; ++i) p.image[i] = i;
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image.resize(image.size());
  for (int i = 0; i < int(image.size()); ++i) p.image[image[i]] = i;
  return p;
}

Permutation Permutation::after(const Permutation& g) const {
  if (size() != g.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation p;
  p.image.resize(image.size());
  for (int i = 0; i < int(image.size()); ++i) p.image[i] = image[g.image[i]];
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < int(image.size()); ++i)
    if (image[i] != i) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (int i = 0; i < int(image.size()); ++i)
    if (image[image[i]] != i) return false;
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  if (n > 8) throw resource_limit_error("permutation enumeration guarded at n <= 8");
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::vector<Permutation> out;
  do {
    Permutation p;
    p.image = img;
    out.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace polecalc
