#pragma once

#include <string>
#include <vector>

#include "hg/gradings.hpp"

namespace hg {

// Gamma on H_n over Z^{k+1}
Grading gamma_Hn(int k, Ctx ctx = nullptr);
// Gamma^r on H_{n,m} over Z^{1+k+r} x Z_2^{m-2r}
Grading gamma_super(int k, int m, int r, Ctx ctx = nullptr);
// Gamma_1 over Z x Z_2^k (basis e, eh) and Gamma_2 over Z^{1+k} (u_i = e_i + eh_i, v_i = e_i - eh_i)
Grading gamma1(const std::vector<Cyc>& lambda);
Grading gamma2(const std::vector<Cyc>& lambda);

struct FineTwistedParams {
  int l = 1, s = 0, r = 0;
  std::vector<Cyc> betas, alphas;
  std::string str() const;
};

// the m-relation: (a/b)^m = 1
bool m_related(const Cyc& a, const Cyc& b, long m);
// modulus of the class used for type I blocks: l if l is even, 2l if l is odd
long type1_modulus(int l);

bool spectrum_check(const std::vector<Cyc>& lambda, const FineTwistedParams& p);

// B_l^I(u, alpha) = {x_1, y_1, ..., x_l, y_l}
struct BlockI {
  int l = 0;
  Cyc alpha;
  std::vector<Vect> x, y;
};
// a cyclic type II block {a_1, ..., a_n}, n even: [u,a_i] = alpha a_{i+1}, [a_i, a_{n+1-i}] = (-1)^i alpha z
struct BlockII {
  int n = 0;
  Cyc alpha;
  std::vector<Vect> a;
};

// U[t], V[t] with [u,U_t] = mu_t U_t, [u,V_t] = -mu_t V_t, [U_t,V_t] = -2 mu_t z where mu_t = xi^t alpha
BlockI block_I(const Algebra& A, int l, const Cyc& alpha, const std::vector<Vect>& U, const std::vector<Vect>& V);
// 2l elements from l pairs with mu_t = zeta^t alpha, zeta a primitive 2l-th root
BlockII block_II(const Algebra& A, int l, const Cyc& alpha, const std::vector<Vect>& U, const std::vector<Vect>& V);

// exact relation checks; on failure *why describes the first broken relation
bool check_block_I(const Algebra& A, const Vect& u, const Vect& z, const BlockI& b, std::string* why = nullptr);
bool check_block_II(const Algebra& A, const Vect& u, const Vect& z, const BlockII& b, std::string* why = nullptr);

struct FineTwisted {
  std::vector<Cyc> lambda;
  FineTwistedParams params;
  Grading grading;
  // component indices: z, u, then per type I block x_1,y_1,...,x_l,y_l, then per type II block a_1..a_l
  int cz = 0, cu = 1;
  std::vector<BlockI> b1;
  std::vector<BlockII> b2;
  std::vector<std::vector<int>> cx, cy, ca;
  Vect z, u;
};

FineTwisted fine_twisted(const std::vector<Cyc>& lambda, const FineTwistedParams& p);
// expected universal group: Z_l x Z^{s+1} x Z_2^{r-1}, or Z_l x Z^{s+1} when r = 0
Group predicted_universal_group(const FineTwistedParams& p);

struct EnumerationResult {
  std::vector<FineTwistedParams> classes;      // up to equivalence
  std::vector<FineTwistedParams> param_types;  // up to class data with epsilon = 1
  std::vector<int> rejected_l;                 // divisors of 2k that fail the closure test
};
EnumerationResult enumerate_fine_twisted(const std::vector<Cyc>& lambda);
// the class multisets of p and eps*q agree (classes modulo m-th roots of unity)
bool classes_match(const std::vector<Cyc>& p, const std::vector<Cyc>& q, const Cyc& eps, long m);
bool equivalent_fine(const std::vector<Cyc>& lambda, const FineTwistedParams& p, const FineTwistedParams& q);
// the conductor needed for enumeration over lambda (given the zeta orders already present)
long twisted_conductor(int k, long zeta_lcm);

struct Homogenized {
  Vect u;                  // u' = u + alpha z + sum alpha_i u_i + beta_i v_i
  int comp = -1;           // component of u'
  std::vector<Vect> up, vp;  // adjusted u_i', v_i'
  Vect z;
};
// lambda read off the brackets [u, e_i] of a twisted algebra
std::vector<Cyc> lambda_of(const Algebra& A);
Homogenized homogenize_u(const Grading& G);

struct Decomposition {
  Vect u, z;
  std::vector<BlockI> b1;
  std::vector<BlockII> b2;
  FineTwistedParams params;
};
Decomposition decompose_twisted_grading(const Grading& G);

struct SuperFine {
  int r;
  Grading grading;
  Group universal;
};
std::vector<SuperFine> enumerate_fine_super(int k, int m, Ctx ctx = nullptr);

}  // namespace hg
