#include "hg/scalars.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hg {

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return (a == 0 || b == 0) ? 0 : std::lcm(a, b); }

namespace {

using ZPoly = std::vector<Z>;
using QPoly = std::vector<Q>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact quotient of a by monic b
ZPoly zdiv_exact(ZPoly a, const ZPoly& b) {
  trim(a);
  int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) throw MathError("cyclotomic division underflow");
  ZPoly q(a.size() - db, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    Z c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw MathError("cyclotomic division not exact");
  return q;
}

std::map<int, ZPoly>& phi_cache() {
  static std::map<int, ZPoly> m;
  return m;
}
std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

ZPoly phi_locked(int N) {
  auto& cache = phi_cache();
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  ZPoly p(N + 1, 0);
  p[0] = -1;
  p[N] = 1;
  for (int d = 1; d < N; ++d)
    if (N % d == 0) p = zdiv_exact(p, phi_locked(d));
  cache[N] = p;
  return p;
}

// (q, r) with a = q*b + r over Q
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  trim(a);
  int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return {{}, a};
  QPoly q(a.size() - db, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    if (a[i] == 0) continue;
    Q c = a[i] / b[db];
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

std::vector<Z> cyclotomic_poly(int N) {
  if (N < 1) throw MathError("conductor must be positive");
  std::lock_guard<std::mutex> g(phi_mutex());
  return phi_locked(N);
}

CycloCtx::CycloCtx(int N) : N_(N), phi_(cyclotomic_poly(N)) {
  int d = degree();
  int top = std::max(2 * d - 1, 1);
  pow_.assign(top, ZPoly(d, 0));
  for (int j = 0; j < top; ++j) {
    if (j < d) {
      pow_[j][j] = 1;
      continue;
    }
    // x * x^{j-1}, then replace x^d by -(phi_0 + ... + phi_{d-1} x^{d-1})
    const ZPoly& prev = pow_[j - 1];
    ZPoly cur(d, 0);
    Z carry = prev[d - 1];
    for (int k = d - 1; k >= 1; --k) cur[k] = prev[k - 1];
    for (int k = 0; k < d; ++k) cur[k] -= carry * phi_[k];
    pow_[j] = cur;
  }
}

Ctx ctx_new(int N) {
  static std::map<int, Ctx> cache;
  static std::mutex m;
  if (N < 1) throw MathError("conductor must be positive");
  std::lock_guard<std::mutex> g(m);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  auto c = std::make_shared<const CycloCtx>(N);
  cache[N] = c;
  return c;
}

Cyc::Cyc(const Ctx& ctx, const Q& q) : ctx_(ctx), c_(ctx->degree(), 0) {
  c_[0] = q;
  c_[0].canonicalize();
}

Cyc::Cyc(const Ctx& ctx, std::vector<Q> coeffs) : ctx_(ctx) {
  int d = ctx->degree();
  c_.assign(d, 0);
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    if (static_cast<int>(j) < d) {
      c_[j] += coeffs[j];
      continue;
    }
    // reduce arbitrary powers by x^N = 1 first, then the table
    int e = static_cast<int>(j % ctx->N());
    if (e < d) {
      c_[e] += coeffs[j];
    } else if (e < 2 * d - 1) {
      const auto& pw = ctx->power(e);
      for (int k = 0; k < d; ++k)
        if (pw[k] != 0) c_[k] += coeffs[j] * pw[k];
    } else {
      QPoly xe(e + 1, 0);
      xe[e] = 1;
      QPoly ph(ctx->phi().begin(), ctx->phi().end());
      auto r = qdivmod(xe, ph).second;
      for (size_t k = 0; k < r.size(); ++k) c_[k] += coeffs[j] * r[k];
    }
  }
  for (auto& c : c_) c.canonicalize();
}

void Cyc::check(const Cyc& o) const {
  if (!ctx_ || !o.ctx_) throw MathError("uninitialised cyclotomic value");
  if (ctx_ != o.ctx_ && ctx_->N() != o.ctx_->N())
    throw MathError("cyclotomic conductor mismatch: " + std::to_string(ctx_->N()) + " vs " +
                    std::to_string(o.ctx_->N()));
}

bool Cyc::is_zero() const {
  for (auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Cyc::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Q Cyc::rational() const {
  if (!is_rational()) throw MathError("value is not rational: " + str());
  return c_[0];
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  check(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  check(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyc Cyc::operator*(const Cyc& o) const {
  check(o);
  int d = ctx_->degree();
  std::vector<Q> prod(2 * d - 1, 0);
  bool any = false;
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
      any = true;
    }
  }
  Cyc r(ctx_, Q(0));
  if (!any) return r;
  for (int j = 0; j < d; ++j) r.c_[j] = prod[j];
  for (int j = d; j < 2 * d - 1; ++j) {
    if (prod[j] == 0) continue;
    const auto& pw = ctx_->power(j);
    for (int k = 0; k < d; ++k)
      if (pw[k] != 0) r.c_[k] += prod[j] * pw[k];
  }
  return r;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  *this = *this * o;
  return *this;
}

Cyc Cyc::scaled(const Q& q) const {
  Cyc r = *this;
  Q k = q;
  k.canonicalize();
  for (auto& c : r.c_) c *= k;
  return r;
}

bool Cyc::operator==(const Cyc& o) const {
  check(o);
  return c_ == o.c_;
}

bool Cyc::operator<(const Cyc& o) const {
  check(o);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

Cyc Cyc::inv() const {
  if (is_zero()) throw MathError("division by zero in Q(zeta_" + std::to_string(N()) + ")");
  if (is_rational()) return Cyc(ctx_, Q(1) / c_[0]);
  // extended Euclid: s*a + t*phi = g, g a nonzero constant
  QPoly a(c_.begin(), c_.end());
  trim(a);
  QPoly b(ctx_->phi().begin(), ctx_->phi().end());
  QPoly s0{Q(1)}, s1{};
  QPoly r0 = a, r1 = b;
  while (!r1.empty()) {
    auto [q, r] = qdivmod(r0, r1);
    QPoly s2 = qsub(s0, qmul(q, s1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
  }
  if (r0.size() != 1) throw MathError("non-invertible cyclotomic element");
  Q g = r0[0];
  for (auto& c : s0) c /= g;
  return Cyc(ctx_, s0);
}

Cyc Cyc::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Cyc base = *this, r(ctx_, Q(1));
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

Cyc zeta(const Ctx& ctx) { return zeta_pow(ctx, 1); }

Cyc zeta_pow(const Ctx& ctx, long k) {
  long N = ctx->N();
  long e = ((k % N) + N) % N;
  std::vector<Q> c(e + 1, 0);
  c[e] = 1;
  return Cyc(ctx, c);
}

Cyc root_of_unity(const Ctx& ctx, long M, long k) {
  if (M < 1 || ctx->N() % M != 0)
    throw MathError("zeta(" + std::to_string(M) + ") is not in Q(zeta_" + std::to_string(ctx->N()) + ")");
  return zeta_pow(ctx, (ctx->N() / M) * k);
}

Cyc imag_unit(const Ctx& ctx) { return root_of_unity(ctx, 4, 1); }

Cyc embed(const Cyc& x, const Ctx& target) {
  long M = x.N(), N = target->N();
  if (N % M != 0)
    throw MathError("cannot embed Q(zeta_" + std::to_string(M) + ") into Q(zeta_" + std::to_string(N) + ")");
  long step = N / M;
  const auto& c = x.coeffs();
  std::vector<Q> out(step * (c.size() ? c.size() - 1 : 0) + 1, 0);
  for (size_t j = 0; j < c.size(); ++j) out[j * step] = c[j];
  return Cyc(target, out);
}

namespace {

std::vector<long> prime_factors(long n) {
  std::vector<long> f;
  for (long p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      f.push_back(p);
      n /= p;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

// sqrt(p) for a prime p, if the field contains it
std::optional<Cyc> sqrt_prime(long p, const Ctx& ctx) {
  long N = ctx->N();
  if (p == 2) {
    if (N % 8 != 0) return std::nullopt;
    return root_of_unity(ctx, 8, 1) + root_of_unity(ctx, 8, -1);
  }
  if (N % p != 0) return std::nullopt;
  Cyc g(ctx, Q(0));
  for (long k = 0; k < p; ++k) g += root_of_unity(ctx, p, (k * k) % p);
  if (p % 4 == 1) return g;
  if (N % 4 != 0) return std::nullopt;
  return -(imag_unit(ctx) * g);
}

std::optional<Cyc> sqrt_posint(const Z& m, const Ctx& ctx) {
  if (m == 0) return Cyc(ctx, Q(0));
  Z sq = 1, rest = m;
  Z r;
  // peel square factors by trial division; inputs here are small
  for (Z p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      sq *= p;
    }
  }
  Cyc out(ctx, Q(sq));
  if (rest == 1) return out;
  if (!rest.fits_slong_p()) return std::nullopt;
  for (long p : prime_factors(rest.get_si())) {
    auto s = sqrt_prime(p, ctx);
    if (!s) return std::nullopt;
    out *= *s;
  }
  return out;
}

// x = q * zeta^k with q rational; returns (k, q)
std::optional<std::pair<long, Q>> as_scaled_root(const Cyc& x) {
  const auto& ctx = x.ctx();
  long N = ctx->N();
  for (long k = 0; k < N; ++k) {
    Cyc y = x * zeta_pow(ctx, -k);
    if (y.is_rational()) return std::make_pair(k, y.rational());
  }
  return std::nullopt;
}

}  // namespace

Cyc sqrt_int(long l, const Ctx& ctx) {
  if (l < 1) throw MathError("sqrt_int expects a positive integer");
  if (ctx->N() % (4 * l) != 0)
    throw MathError("sqrt_int(" + std::to_string(l) + ") needs a conductor divisible by " + std::to_string(4 * l));
  auto s = sqrt_posint(Z(l), ctx);
  if (!s) throw MathError("sqrt_int failed");
  return *s;
}

std::optional<long> root_of_unity_exponent(const Cyc& x) {
  const auto& ctx = x.ctx();
  long N = ctx->N();
  int d = ctx->degree();
  const auto& c = x.coeffs();
  for (auto& q : c)
    if (q.get_den() != 1) return std::nullopt;
  // walk zeta^k by repeated multiplication in integer arithmetic
  std::vector<Z> cur(d, 0);
  cur[0] = 1;
  for (long k = 0; k < N; ++k) {
    bool eq = true;
    for (int i = 0; i < d && eq; ++i) eq = (c[i].get_num() == cur[i]);
    if (eq) return k;
    std::vector<Z> nxt(d, 0);
    Z carry = cur[d - 1];
    for (int i = d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    for (int i = 0; i < d; ++i) nxt[i] -= carry * ctx->phi()[i];
    cur = std::move(nxt);
  }
  return std::nullopt;
}

std::optional<long> root_of_unity_order(const Cyc& x) {
  long N = x.N();
  if (auto k = root_of_unity_exponent(x)) return N / gcd_l(*k, N);
  if (N % 2 == 1) {
    if (auto k = root_of_unity_exponent(-x)) return 2 * (N / gcd_l(*k, N));
  }
  return std::nullopt;
}

std::optional<Cyc> try_sqrt(const Cyc& x) {
  const auto& ctx = x.ctx();
  if (x.is_zero()) return x;
  auto sr = as_scaled_root(x);
  if (!sr) return std::nullopt;
  auto [k, q] = *sr;
  long N = ctx->N();
  if (q < 0) {
    if (N % 2 != 0) return std::nullopt;
    q = -q;
    k = (k + N / 2) % N;
  }
  long half;
  if (k % 2 == 0) {
    half = k / 2;
  } else if (N % 2 == 1) {
    half = (k + N) / 2;
  } else {
    return std::nullopt;
  }
  Z num = q.get_num(), den = q.get_den();
  auto s = sqrt_posint(num * den, ctx);
  if (!s) return std::nullopt;
  return zeta_pow(ctx, half) * s->scaled(Q(1) / Q(den));
}

std::optional<Cyc> try_root(const Cyc& x, long n) {
  const auto& ctx = x.ctx();
  if (n < 1) throw MathError("root degree must be positive");
  if (n == 1 || x.is_zero()) return x;
  auto sr = as_scaled_root(x);
  if (!sr) return std::nullopt;
  auto [k, q] = *sr;
  long N = ctx->N();
  if (q < 0) {
    if (n % 2 == 1) {
      auto r = try_root(-x, n);
      if (!r) return std::nullopt;
      return -*r;
    }
    if (N % 2 != 0) return std::nullopt;
    q = -q;
    k = (k + N / 2) % N;
  }
  Z num = q.get_num(), den = q.get_den(), rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return std::nullopt;
  // j*n = k mod N
  for (long j = 0; j < N; ++j)
    if ((j * n - k) % N == 0) return zeta_pow(ctx, j).scaled(Q(rn, rd));
  return std::nullopt;
}

namespace {

std::string root_text(long k, long N) {
  k = ((k % N) + N) % N;
  long g = gcd_l(k, N);
  long M = N / g, e = k / g;
  if (M == 1) return "1";
  if (M == 2) return "-1";
  if (e == 1) return "zeta(" + std::to_string(M) + ")";
  return "zeta(" + std::to_string(M) + ")^" + std::to_string(e);
}

}  // namespace

std::string Cyc::str() const {
  if (!ctx_) return "<unset>";
  if (is_rational()) return c_[0].get_str();
  long N = ctx_->N();
  if (auto k = root_of_unity_exponent(*this)) return root_text(*k, N);
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    Q q = c_[j];
    if (q == 0) continue;
    std::string mono = j == 0 ? "1" : root_text(static_cast<long>(j), N);
    bool neg = q < 0;
    if (mono == "-1") {
      neg = !neg;
      mono = "1";
    }
    Q a = neg ? Q(-q) : q;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (mono == "1") {
      os << a.get_str();
    } else if (a == 1) {
      os << mono;
    } else {
      os << a.get_str() << "*" << mono;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, const Ctx& ctx) : s_(s), ctx_(ctx) {}

  Cyc run() {
    Cyc v = expr();
    ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("scalar parse error at " + std::to_string(pos_) + " in \"" + s_ + "\": " + why);
  }
  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Z integer() {
    ws();
    size_t st = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (st == pos_) fail("expected integer");
    return Z(s_.substr(st, pos_ - st));
  }
  long small_int() {
    bool neg = eat('-');
    Z v = integer();
    if (!v.fits_slong_p()) fail("integer too large");
    return neg ? -v.get_si() : v.get_si();
  }
  Cyc expr() {
    Cyc v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }
  Cyc term() {
    Cyc v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        Cyc d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  Cyc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    Cyc b = primary();
    if (eat('^')) {
      long e = 0;
      if (eat('(')) {
        e = small_int();
        if (!eat(')')) fail("expected ')'");
      } else {
        e = small_int();
      }
      if (e < 0 && b.is_zero()) fail("division by zero");
      b = b.pow(e);
    }
    return b;
  }
  Cyc primary() {
    ws();
    if (eat('(')) {
      Cyc v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return Cyc(ctx_, Q(integer()));
    if (s_.compare(pos_, 5, "zeta(") == 0) {
      pos_ += 5;
      long M = small_int();
      if (!eat(')')) fail("expected ')'");
      if (M < 1) fail("zeta order must be positive");
      if (ctx_->N() % M != 0)
        fail("zeta(" + std::to_string(M) + ") needs a conductor divisible by " + std::to_string(M) +
             " (have " + std::to_string(ctx_->N()) + ")");
      return root_of_unity(ctx_, M, 1);
    }
    if (s_.compare(pos_, 5, "sqrt(") == 0) {
      pos_ += 5;
      long m = small_int();
      if (!eat(')')) fail("expected ')'");
      if (m < 1) fail("sqrt expects a positive integer");
      auto r = sqrt_posint(Z(m), ctx_);
      if (!r) fail("sqrt(" + std::to_string(m) + ") is not in Q(zeta_" + std::to_string(ctx_->N()) + ")");
      return *r;
    }
    if (pos_ < s_.size() && s_[pos_] == 'i' &&
        (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      if (ctx_->N() % 4 != 0) fail("i needs a conductor divisible by 4");
      return imag_unit(ctx_);
    }
    fail("expected number, zeta(M), sqrt(m), i or '('");
  }

  std::string s_;
  size_t pos_ = 0;
  Ctx ctx_;
};

}  // namespace

Cyc parse_cyc(const std::string& text, const Ctx& ctx) { return Parser(text, ctx).run(); }

long zeta_orders_lcm(const std::string& text) {
  long acc = 1;
  size_t p = 0;
  while ((p = text.find("zeta(", p)) != std::string::npos) {
    p += 5;
    size_t q = p;
    while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
    if (q > p) acc = lcm_l(acc, std::stol(text.substr(p, q - p)));
    p = q;
  }
  // a bare i needs 4
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'i') continue;
    bool left = i == 0 || !std::isalnum(static_cast<unsigned char>(text[i - 1]));
    bool right = i + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[i + 1]));
    if (left && right) acc = lcm_l(acc, 4);
  }
  return acc;
}

}  // namespace hg
