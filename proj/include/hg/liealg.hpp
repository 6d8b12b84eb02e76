#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hg/linalg.hpp"

namespace hg {

using SparseVec = std::vector<std::pair<int, Cyc>>;

// Structure-constant (super)algebra. table[i][j] = [b_i, b_j].
struct Algebra {
  Ctx ctx;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<int> parity;
  std::vector<std::vector<SparseVec>> table;
  std::string kind = "custom";

  Algebra() = default;
  Algebra(Ctx c, std::vector<std::string> labels, std::vector<int> parity);
  void set(int i, int j, const Vect& v);       // sets [b_i,b_j] only
  void set_pair(int i, int j, const Vect& v);  // and [b_j,b_i] by super skew-symmetry
  Vect basis_bracket(int i, int j) const;
  Vect bracket(const Vect& a, const Vect& b) const;
  Vect unit(int i) const { return unit_vec(ctx, dim, i); }
  Vect zero() const { return zero_vec(ctx, dim); }
  int index(const std::string& label) const;
  bool is_super() const;
};

Algebra heisenberg(int k, Ctx ctx = nullptr);
Algebra heisenberg_super(int k, int m, Ctx ctx = nullptr);
Algebra twisted(const std::vector<Cyc>& lambda);

std::vector<Vect> center(const Algebra& A);
std::vector<Vect> derived(const Algebra& A);

struct AxiomReport {
  bool ok = true;
  std::string failure;        // "skew" | "jacobi" | "parity" | ""
  std::vector<int> witness;   // basis indices
  std::string detail;
};

// eps(i,j) is the commutation factor of b_i, b_j; default is the super sign
using CommFactor = std::function<Cyc(int, int)>;
AxiomReport verify_axioms(const Algebra& A);
AxiomReport verify_axioms(const Algebra& A, const CommFactor& eps);

bool is_automorphism(const Mat& f, const Algebra& A);
std::optional<Cyc> similitude_factor(const Mat& f, const Algebra& A);
// exp(ad x) for x in the derived algebra of a two-step nilpotent ideal
Mat exp_ad(const Algebra& A, const Vect& x);

// random automorphism with small rational entries: symplectic transvections, inner maps,
// torus scalings and (super) reflections of the odd part
Mat random_automorphism(const Algebra& A, std::mt19937_64& rng);

}  // namespace hg
