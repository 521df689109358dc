#include "mrq/abelian.hpp"

#include <stdexcept>

namespace mrq {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i) {
    for (size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (size_t j = 0; j < b.cols_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return out;
}

void IntMatrix::swap_rows(size_t i, size_t j) {
  for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(size_t i, size_t j) {
  for (size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(size_t dst, size_t src, const BigInt& factor) {
  for (size_t c = 0; c < cols_; ++c) at(dst, c) += factor * at(src, c);
}

void IntMatrix::add_col(size_t dst, size_t src, const BigInt& factor) {
  for (size_t r = 0; r < rows_; ++r) at(r, dst) += factor * at(r, src);
}

void IntMatrix::negate_row(size_t i) {
  for (size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

namespace {

// Smallest nonzero |entry| in the lower-right submatrix at (s,s).
bool locate_pivot(const IntMatrix& d, size_t s, size_t& pi, size_t& pj) {
  bool found = false;
  BigInt best;
  for (size_t i = s; i < d.rows(); ++i) {
    for (size_t j = s; j < d.cols(); ++j) {
      if (d.at(i, j) == 0) continue;
      BigInt mag = abs(d.at(i, j));
      if (!found || mag < best) {
        found = true;
        best = mag;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

bool cross_cleared(const IntMatrix& d, size_t s) {
  for (size_t i = s + 1; i < d.rows(); ++i)
    if (d.at(i, s) != 0) return false;
  for (size_t j = s + 1; j < d.cols(); ++j)
    if (d.at(s, j) != 0) return false;
  return true;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  const size_t rows = m.rows(), cols = m.cols();
  SnfResult res{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  size_t steps = rows < cols ? rows : cols;
  for (size_t s = 0; s < steps; ++s) {
    while (true) {
      size_t pi = s, pj = s;
      if (!locate_pivot(d, s, pi, pj)) break;  // submatrix is zero
      if (pi != s) {
        d.swap_rows(s, pi);
        u.swap_rows(s, pi);
      }
      if (pj != s) {
        d.swap_cols(s, pj);
        v.swap_cols(s, pj);
      }
      for (size_t i = s + 1; i < rows; ++i) {
        if (d.at(i, s) != 0) {
          BigInt q = d.at(i, s) / d.at(s, s);
          d.add_row(i, s, -q);
          u.add_row(i, s, -q);
        }
      }
      for (size_t j = s + 1; j < cols; ++j) {
        if (d.at(s, j) != 0) {
          BigInt q = d.at(s, j) / d.at(s, s);
          d.add_col(j, s, -q);
          v.add_col(j, s, -q);
        }
      }
      if (!cross_cleared(d, s)) continue;
      // enforce the divisibility chain before moving on
      bool divides_all = true;
      for (size_t i = s + 1; i < rows && divides_all; ++i) {
        for (size_t j = s + 1; j < cols; ++j) {
          if (d.at(i, j) % d.at(s, s) != 0) {
            d.add_row(s, i, 1);
            u.add_row(s, i, 1);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    if (d.at(s, s) < 0) {
      d.negate_row(s);
      u.negate_row(s);
    }
  }

  if (!(u * m * v == d)) throw std::logic_error("smith normal form self-check failed");
  return res;
}

HomologyResult homology_of_presentation(const AlphabetPtr& generators,
                                        const std::vector<Word>& relators) {
  const size_t g = generators->rank();
  IntMatrix rel(relators.size(), g);
  for (size_t r = 0; r < relators.size(); ++r) {
    if (!relators[r].empty() && !same_alphabet(relators[r].alphabet(), generators))
      throw std::invalid_argument("relator over a different alphabet");
    auto ev = exponent_vector(relators[r]);
    for (size_t c = 0; c < ev.size(); ++c) rel.at(r, c) = ev[c];
  }
  auto snf = smith_normal_form(rel);
  HomologyResult out;
  size_t nonzero = 0;
  size_t diag = std::min(rel.rows(), rel.cols());
  for (size_t i = 0; i < diag; ++i) {
    const BigInt& e = snf.d.at(i, i);
    if (e == 0) continue;
    ++nonzero;
    if (e > 1) out.torsion.push_back(e);
  }
  out.betti = static_cast<long long>(g - nonzero);
  return out;
}

}  // namespace mrq
