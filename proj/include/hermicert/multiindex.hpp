#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace hermicert {

/// Exponent vector of a monomial in n variables. Ordering is graded
/// lexicographic (weight first, then lex), which fixes the basis order of
/// every coefficient matrix in the library.
class multi_index {
 public:
  multi_index() = default;
  explicit multi_index(std::size_t n) : e_(n, 0) {}
  multi_index(std::initializer_list<int> e) : e_(e) {}
  explicit multi_index(std::vector<int> e) : e_(std::move(e)) {}

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }

  int weight() const { return std::accumulate(e_.begin(), e_.end(), 0); }

  bool all_nonnegative() const {
    for (int v : e_)
      if (v < 0) return false;
    return true;
  }

  multi_index operator+(const multi_index& o) const {
    multi_index r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  /// Appends one extra slot (used by bihomogenization).
  multi_index extended(int extra) const {
    multi_index r(*this);
    r.e_.push_back(extra);
    return r;
  }

  /// Removes the slot at position `slot` (used by dehomogenization).
  multi_index without_slot(std::size_t slot) const {
    multi_index r;
    r.e_.reserve(e_.size() - 1);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (i != slot) r.e_.push_back(e_[i]);
    return r;
  }

  // Graded-lex: compare total weight, then entries left to right.
  friend bool operator<(const multi_index& a, const multi_index& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.e_ < b.e_;
  }
  friend bool operator==(const multi_index& a, const multi_index& b) { return a.e_ == b.e_; }
  friend bool operator!=(const multi_index& a, const multi_index& b) { return !(a == b); }

  const std::vector<int>& exponents() const { return e_; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> e_;
};

/// e_j in n variables.
inline multi_index unit_index(std::size_t n, std::size_t j) {
  multi_index m(n);
  m[j] = 1;
  return m;
}

/// All multi-indices of the given weight in n variables, graded-lex sorted.
std::vector<multi_index> monomials_of_weight(std::size_t n, int weight);

}  // namespace hermicert
