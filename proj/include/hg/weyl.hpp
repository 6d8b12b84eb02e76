#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hg/fine.hpp"

namespace hg {

using Perm = std::vector<int>;

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a self-equivalence of a grading: perm on components, optional explicit matrix
struct GradedAut {
  std::string name;
  Perm perm;
  std::optional<Mat> map;
};

GradedAut induced_permutation(const Mat& f, const Grading& G);

// brackets of a grading with one-dimensional components: [b_a, b_b] = kappa b_target
struct StructureTable {
  int n = 0;
  std::vector<Vect> basis;
  std::vector<std::vector<int>> target;  // -1 when the bracket vanishes
  std::vector<std::vector<Cyc>> kappa;
  std::vector<int> parity;
};
StructureTable structure_table(const Grading& G);

// the linear map b_a -> c_a b_{perm(a)} (between two gradings of the same algebra)
Mat graded_map(const StructureTable& from, const StructureTable& to, const Perm& perm, const std::vector<Cyc>& c);

// Decides whether b_a -> c_a b'_{perm(a)} extends to an automorphism for some nonzero c.
// Over an algebraically closed field this is a set of "gamma = 1" conditions; a witness
// is returned only when the needed roots lie in the current field.
class MultSolver {
 public:
  MultSolver(const StructureTable& from, const StructureTable& to);
  bool pattern_ok(const Perm& perm) const;
  bool consistent(const Perm& perm) const;
  std::optional<std::vector<Cyc>> witness(const Perm& perm) const;

 private:
  std::vector<Cyc> gammas(const Perm& perm) const;
  const StructureTable& a_;
  const StructureTable& b_;
  struct Row {
    int a, b, t;
  };
  std::vector<Row> rows_;
  IntMat U_, V_;
  std::vector<mpz_class> diag_;
  int rank_ = 0;
};

std::optional<GradedAut> realize(const Grading& G, const Perm& perm, const std::string& name = "");

struct PermGroup {
  int degree = 0;
  std::vector<Perm> gens;
  std::vector<Perm> elements;  // sorted
  size_t order() const { return elements.size(); }
  bool is_abelian() const;
  long element_order(const Perm& p) const;
  bool dihedral_pattern() const;  // non-abelian with a cyclic subgroup of index 2
};

Perm perm_compose(const Perm& a, const Perm& b);  // a after b
PermGroup closure(const std::vector<Perm>& gens, int degree, size_t limit = 2000000);
std::string cycle_str(const Perm& p, const std::vector<std::string>& names);

struct PQSplit {
  long p = 1, q = 1;
  std::optional<Cyc> eps;  // generator of the scalar symmetry modulo the trivial classes
};
PQSplit compute_pq(const std::vector<Cyc>& lambda, const FineTwistedParams& p);

mpz_class weyl_order_heisenberg(int k);
mpz_class weyl_order_super(int k, int m, int r);
mpz_class weyl_order_twisted(const std::vector<Cyc>& lambda, const FineTwistedParams& p);

std::vector<GradedAut> generators_heisenberg(const Grading& G, int k);
std::vector<GradedAut> generators_super(const Grading& G, int k, int m, int r);
std::vector<GradedAut> generators_twisted(const FineTwisted& F);

struct WeylReport {
  PermGroup group;
  std::vector<GradedAut> generators;
  mpz_class formula;
  bool agree = false;
  PQSplit pq;
};
WeylReport weyl_heisenberg(int k);
WeylReport weyl_super(int k, int m, int r);
WeylReport weyl_twisted(const FineTwisted& F);

// every component permutation realized by an automorphism
PermGroup weyl_bruteforce(const Grading& G, int cap = 12);
// an automorphism carrying the components of G onto those of H, if any
std::optional<Perm> equivalence_oracle(const Grading& G, const Grading& H, int cap = 12);

}  // namespace hg
