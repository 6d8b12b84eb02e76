#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hg {

using Q = mpq_class;
using Z = mpz_class;

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Q(zeta_N): phi holds the monic N-th cyclotomic polynomial, low degree first.
class CycloCtx {
 public:
  explicit CycloCtx(int N);
  int N() const { return N_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  const std::vector<Z>& phi() const { return phi_; }
  // x^j mod phi for j < 2*degree-1, as integer vectors
  const std::vector<Z>& power(int j) const { return pow_[j]; }

 private:
  int N_;
  std::vector<Z> phi_;
  std::vector<std::vector<Z>> pow_;
};

using Ctx = std::shared_ptr<const CycloCtx>;

Ctx ctx_new(int N);
std::vector<Z> cyclotomic_poly(int N);

class Cyc {
 public:
  Cyc() = default;
  Cyc(const Ctx& ctx, const Q& q);
  Cyc(const Ctx& ctx, long q) : Cyc(ctx, Q(q)) {}
  Cyc(const Ctx& ctx, std::vector<Q> coeffs);

  const Ctx& ctx() const { return ctx_; }
  const std::vector<Q>& coeffs() const { return c_; }
  int N() const { return ctx_->N(); }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Q rational() const;  // throws unless rational

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o) { return *this *= o.inv(); }
  Cyc operator+(const Cyc& o) const { Cyc r = *this; return r += o; }
  Cyc operator-(const Cyc& o) const { Cyc r = *this; return r -= o; }
  Cyc operator*(const Cyc& o) const;
  Cyc operator/(const Cyc& o) const { return *this * o.inv(); }
  Cyc scaled(const Q& q) const;

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }
  // lexicographic on coefficients; a deterministic total order, nothing more
  bool operator<(const Cyc& o) const;

  Cyc inv() const;
  Cyc pow(long e) const;

  std::string str() const;

 private:
  void check(const Cyc& o) const;
  Ctx ctx_;
  std::vector<Q> c_;
};

Cyc zeta(const Ctx& ctx);
Cyc zeta_pow(const Ctx& ctx, long k);
// zeta(M)^k inside Q(zeta_N); requires M | N
Cyc root_of_unity(const Ctx& ctx, long M, long k);
Cyc imag_unit(const Ctx& ctx);
Cyc embed(const Cyc& x, const Ctx& target);
Cyc sqrt_int(long l, const Ctx& ctx);
std::optional<long> root_of_unity_order(const Cyc& x);
// k with x = zeta_N^k, when x is a root of unity and N is even
std::optional<long> root_of_unity_exponent(const Cyc& x);
// y with y^2 = x when y is found as (root of unity) * (rational or sqrt_int)
std::optional<Cyc> try_sqrt(const Cyc& x);
// y with y^n = x, found among roots of unity times rationals
std::optional<Cyc> try_root(const Cyc& x, long n);

Cyc parse_cyc(const std::string& text, const Ctx& ctx);
// lcm of every M in "zeta(M)" occurrences; 1 if none
long zeta_orders_lcm(const std::string& text);

long lcm_l(long a, long b);
long gcd_l(long a, long b);

}  // namespace hg
