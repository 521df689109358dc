#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "mrq/words.hpp"

// Integer Smith normal form and first homology of a finite presentation,
// all in exact arbitrary-precision arithmetic.

namespace mrq {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  BigInt& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const BigInt& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  void swap_rows(size_t i, size_t j);
  void swap_cols(size_t i, size_t j);
  void add_row(size_t dst, size_t src, const BigInt& factor);
  void add_col(size_t dst, size_t src, const BigInt& factor);
  void negate_row(size_t i);

 private:
  size_t rows_, cols_;
  std::vector<BigInt> e_;
};

struct SnfResult {
  IntMatrix d, u, v;  // u * m * v == d, u and v unimodular, diagonal chain d1 | d2 | ...
};

SnfResult smith_normal_form(const IntMatrix& m);

struct HomologyResult {
  long long betti = 0;
  std::vector<BigInt> torsion;  // entries >= 2, each dividing the next
};

// First homology of <generators | relators> from the abelianized relator matrix.
HomologyResult homology_of_presentation(const AlphabetPtr& generators,
                                        const std::vector<Word>& relators);

}  // namespace mrq
