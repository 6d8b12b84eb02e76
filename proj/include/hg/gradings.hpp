#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hg/abelian.hpp"
#include "hg/liealg.hpp"

namespace hg {

using AlgPtr = std::shared_ptr<const Algebra>;

struct Component {
  GroupElt deg;
  std::vector<Vect> basis;
  std::vector<std::string> names;  // optional labels of the basis vectors
};

struct Grading {
  AlgPtr alg;
  Group group;
  std::vector<Component> comps;

  int find(const GroupElt& g) const;  // -1 if not in the support
  int total_dim() const;
  bool one_dimensional() const;
  // component basis vectors concatenated, in component order
  std::vector<Vect> homogeneous_basis() const;
  void sort_components();
};

Grading make_grading(AlgPtr alg, Group group, std::vector<Component> comps);

struct GradingReport {
  bool ok = true;
  std::string failure;  // "empty" | "duplicate" | "dependent" | "span" | "parity" | "bracket"
  std::vector<int> comps;
  std::vector<Vect> witness;
  std::string detail;
};

GradingReport verify_grading(const Grading& G);

struct UniversalResult {
  Group group;
  Grading grading;
  AbPresentation presentation;
};
UniversalResult universal_group(const Grading& G);
bool is_toral_fine(const Grading& G);

// images[i] is the image of component i in the target group
Grading coarsen(const Grading& G, const Group& target, const std::vector<GroupElt>& images);

enum class FormKind { Alternating, Symmetric };

struct PairedDecomposition {
  std::vector<std::vector<Vect>> spaces;
  Mat form;
  FormKind kind = FormKind::Alternating;
};

Cyc form_eval(const Mat& B, const Vect& x, const Vect& y);
// partner index of each space; throws MathError on violation
std::vector<int> pairing_partners(const PairedDecomposition& d);

struct SymplecticBasis {
  std::vector<Vect> u, up;
  std::vector<int> comp_u, comp_up;
};
SymplecticBasis homogeneous_symplectic_basis(const PairedDecomposition& d);

struct OrthogonalBasis {
  std::vector<Vect> u, v, z;
  std::vector<int> comp_u, comp_v, comp_z;
};
OrthogonalBasis homogeneous_orthogonal_basis(const PairedDecomposition& d);

struct DarbouxBasis {
  Vect z;
  std::vector<Vect> u, up;
  std::vector<int> comp_z_u, comp_u, comp_up;  // comp_z_u holds the component of z
};
DarbouxBasis darboux_homogeneous_basis(const Grading& G);

// transport a grading by an automorphism (components mapped by f)
Grading transport(const Grading& G, const Mat& f);

}  // namespace hg
