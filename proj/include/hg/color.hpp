#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hg/gradings.hpp"

namespace hg {

// skew bicharacter given on the canonical generators of a group
struct Bicharacter {
  Group group;
  std::vector<std::vector<Cyc>> values;
  Cyc operator()(const GroupElt& g, const GroupElt& h) const;
};
// throws std::invalid_argument unless skew and well defined on torsion
Bicharacter make_bicharacter(Group group, std::vector<std::vector<Cyc>> values);

struct ColorType {
  Group group;
  GroupElt g0;
  Bicharacter eps;
  std::map<GroupElt, int> dims;  // dimension of each homogeneous component, z included
};
void validate_color_type(const ColorType& t);

struct ColorAlgebra {
  AlgPtr alg;
  Grading grading;
  ColorType type;
  std::vector<GroupElt> deg;  // degree of each basis vector
};

// basis: z, then per pair {g, -g+g0} the u_{g,i}, uh_{g,i}, then orthonormal u_{g,i} when 2g = g0
ColorAlgebra color_algebra(const ColorType& t);

// skew symmetry and color Jacobi on the homogeneous basis of G
AxiomReport verify_color_axioms(const Grading& G, const Bicharacter& eps);

// the Z_2-grading by the sign of eps(g, -g+g0) when every such value is +-1
std::optional<Grading> is_super_realizable(const ColorAlgebra& C);

struct ColorClassification {
  ColorType type;
  std::vector<Vect> basis;  // z first
  std::vector<std::string> names;
  std::vector<int> comp;  // component of each basis vector
  bool support_generates = true;
};
ColorClassification classify_color(const Grading& G, const Bicharacter& eps);

}  // namespace hg
