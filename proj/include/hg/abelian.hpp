#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hg {

using IntMat = std::vector<std::vector<mpz_class>>;
using IntVec = std::vector<mpz_class>;

struct SNF {
  IntMat U, D, V;  // U*A*V = D
};

SNF smith_normal_form(const IntMat& A);
IntMat int_matmul(const IntMat& A, const IntMat& B);
mpz_class int_det(const IntMat& A);

struct AbPresentation {
  int n_gens = 0;
  IntMat relations;  // one row per relation, length n_gens
};

class AbGroup;
using Group = std::shared_ptr<const AbGroup>;

// Canonical form Z^rank x Z_{d1} x ... with d1 | d2 | ...
class AbGroup {
 public:
  int rank = 0;
  std::vector<mpz_class> torsion;
  // coordinates (free..., torsion...) of each presentation generator
  std::vector<IntVec> gen_images;

  int ncoords() const { return rank + static_cast<int>(torsion.size()); }
  bool is_torsion_free() const { return torsion.empty(); }
  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  bool same_as(const AbGroup& o) const { return rank == o.rank && torsion == o.torsion; }
  std::string str() const;
};

Group canonicalize(const AbPresentation& p);
// direct product Z^r x Z_{m1} x ... given as raw moduli (0 = free); not canonicalized
Group make_group(int rank, const std::vector<long>& torsion);
Group parse_group(const std::string& text);

class GroupElt {
 public:
  GroupElt() = default;
  GroupElt(Group g, IntVec coords);  // reduces torsion residues
  static GroupElt zero(const Group& g);
  static GroupElt gen(const Group& g, int presentation_gen);

  const Group& group() const { return g_; }
  const IntVec& coords() const { return x_; }

  GroupElt operator+(const GroupElt& o) const;
  GroupElt operator-(const GroupElt& o) const;
  GroupElt operator-() const;
  GroupElt times(long k) const;
  bool operator==(const GroupElt& o) const;
  bool operator!=(const GroupElt& o) const { return !(*this == o); }
  bool operator<(const GroupElt& o) const;
  bool is_zero() const;
  std::optional<mpz_class> order() const;
  std::string str() const;

 private:
  void same(const GroupElt& o) const;
  Group g_;
  IntVec x_;
};

// image of an integer combination of presentation generators
GroupElt combine(const Group& g, const IntVec& coeffs);

}  // namespace hg
