#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hg/scalars.hpp"

namespace hg {

using Vect = std::vector<Cyc>;

Vect zero_vec(const Ctx& ctx, int n);
Vect unit_vec(const Ctx& ctx, int n, int i);
bool is_zero(const Vect& v);
Vect add(const Vect& a, const Vect& b);
Vect sub(const Vect& a, const Vect& b);
Vect scale(const Cyc& c, const Vect& v);
void axpy(Vect& y, const Cyc& c, const Vect& x);  // y += c*x
std::string vec_str(const Vect& v);

// row-major dense matrix
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Cyc> a;
  Mat() = default;
  Mat(const Ctx& ctx, int r, int c);
  static Mat identity(const Ctx& ctx, int n);
  static Mat from_columns(const std::vector<Vect>& cols);
  Cyc& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Cyc& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  Vect column(int j) const;
  Vect row(int i) const;
  Mat operator*(const Mat& o) const;
  Vect operator*(const Vect& v) const;
  bool operator==(const Mat& o) const;
  Mat transpose() const;
  const Ctx& ctx() const { return a.front().ctx(); }
};

// reduced row echelon form of a list of row vectors; zero rows dropped
struct Echelon {
  std::vector<Vect> rows;
  std::vector<int> pivots;
};
Echelon rref(std::vector<Vect> rows);
int rank_of(const std::vector<Vect>& rows);
// basis of {x : M x = 0}, one vector per free column, in increasing free-column order
std::vector<Vect> kernel(const Mat& M);
std::optional<Mat> inverse(const Mat& M);
// coefficients c with sum c_i basis_i = v, if v is in the span
std::optional<Vect> express(const std::vector<Vect>& basis, const Vect& v);
bool in_span(const std::vector<Vect>& basis, const Vect& v);
// canonical basis (rref rows) of the intersection of two subspaces
std::vector<Vect> intersect(const std::vector<Vect>& A, const std::vector<Vect>& B, const Ctx& ctx, int n);
bool same_span(const std::vector<Vect>& A, const std::vector<Vect>& B);

}  // namespace hg
