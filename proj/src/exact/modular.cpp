#include "trigimpl/exact/modular.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace trigimpl {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

/// Montgomery arithmetic modulo an odd p < 2^62 with R = 2^64.
struct Mont {
  u64 p, pneg, r2;
  explicit Mont(u64 prime) : p(prime) {
    u64 inv = p;  // Newton iteration for p^{-1} mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    pneg = ~inv + 1;
    const u128 r = (static_cast<u128>(1) << 64) % p;
    r2 = static_cast<u64>(r * r % p);
  }
  u64 redc(u128 t) const {
    const u64 m = static_cast<u64>(t) * pneg;
    const u64 r = static_cast<u64>((t + static_cast<u128>(m) * p) >> 64);
    return r >= p ? r - p : r;
  }
  u64 mul(u64 a, u64 b) const { return redc(static_cast<u128>(a) * b); }
  u64 to(u64 a) const { return mul(a, r2); }
  u64 from(u64 a) const { return redc(a); }
  u64 pow(u64 a, u64 e) const {
    u64 r = to(1);
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

u64 reduce(const Integer& x, u64 p) {
  return static_cast<u64>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p)));
}

/// Determinant of a matrix in Montgomery form; the result is too.
u64 det_mod(std::vector<u64>& m, std::size_t n, const Mont& M) {
  const u64 p = M.p;
  u64 det = M.to(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(m[k * n + c], m[piv * n + c]);
      det = det == 0 ? 0 : p - det;
    }
    const u64 pv = m[k * n + k];
    det = M.mul(det, pv);
    const u64 inv = M.inv(pv);
    u64* rk = &m[k * n];
    for (std::size_t i = k + 1; i < n; ++i) {
      u64* ri = &m[i * n];
      if (ri[k] == 0) continue;
      const u64 f = M.mul(ri[k], inv);
      for (std::size_t c = k + 1; c < n; ++c) ri[c] = submod(ri[c], M.mul(f, rk[c]), p);
    }
  }
  return det;
}

/// log2 of the l1 norm.
double log2_l1(const ZPoly& c) {
  if (c.is_zero()) return -INFINITY;
  Integer s = 0;
  for (const auto& x : c.coefficients()) s += abs(x);
  long e = 0;
  const double m = mpz_get_d_2exp(&e, s.get_mpz_t());
  return std::log2(m) + static_cast<double>(e);
}

const ZPoly& coeff(const ZPolyCoeffs& p, int k) {
  static const ZPoly zero;
  return k >= 0 && k < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(k)] : zero;
}

}  // namespace

u64 modular_prime(std::size_t index) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard<std::mutex> lock(mu);
  u64 candidate = primes.empty() ? (u64(1) << 62) - 1 : primes.back() - 2;
  while (primes.size() <= index) {
    Integer z(std::to_string(candidate), 10);
    // Baillie-PSW is exact below 2^64.
    if (mpz_probab_prime_p(z.get_mpz_t(), 25) > 0) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[index];
}

int resultant_degree_bound(const ZPolyCoeffs& a, const ZPolyCoeffs& b, int fa, int fb) {
  int ra = 0, rb = 0, wa = 0, wb = 0;
  for (int k = 0; k <= fa; ++k) {
    const int d = coeff(a, k).degree();
    if (d < 0) continue;
    ra = std::max(ra, d);
    wa = std::max(wa, d + k);
  }
  for (int k = 0; k <= fb; ++k) {
    const int d = coeff(b, k).degree();
    if (d < 0) continue;
    rb = std::max(rb, d);
    wb = std::max(wb, d + k);
  }
  // rows, and the weighted form deg(A_k) <= wa - k
  const int by_rows = fb * ra + fa * rb;
  const int by_weight = fb * std::max(wa, fa) + fa * std::max(wb, fb) - fa * fb;
  return std::max(0, std::min(by_rows, by_weight));
}

ZPoly modular_resultant(const ZPolyCoeffs& a, const ZPolyCoeffs& b, int fa, int fb) {
  const int n = fa + fb;
  if (n == 0) return ZPoly(Integer(1));
  const int D = resultant_degree_bound(a, b, fa, fb);
  const std::size_t N = static_cast<std::size_t>(D) + 1;
  const std::size_t un = static_cast<std::size_t>(n);

  // |coefficients| <= max over |t| = 1 of |det| <= product of row norms
  double bits = 2;
  auto add_rows = [&](const ZPolyCoeffs& p, int f, int copies) {
    double sq = 0, top = -INFINITY;
    std::vector<double> logs;
    for (int k = 0; k <= f; ++k) logs.push_back(log2_l1(coeff(p, k)));
    for (double l : logs) top = std::max(top, l);
    if (top == -INFINITY) return;
    for (double l : logs)
      if (l != -INFINITY) sq += std::exp2(2 * (l - top));
    bits += copies * (top + 0.5 * std::log2(sq));
  };
  add_rows(a, fa, fb);
  add_rows(b, fb, fa);

  std::vector<Integer> value(N, Integer(0));
  Integer modulus = 1;
  double covered = 0;
  std::vector<u64> m(un * un), ys(N), poly;
  for (std::size_t pi = 0; covered < bits; ++pi) {
    const u64 p = modular_prime(pi);
    const Mont M(p);
    std::vector<std::vector<u64>> ar(static_cast<std::size_t>(fa) + 1), br(static_cast<std::size_t>(fb) + 1);
    for (int k = 0; k <= fa; ++k)
      for (const auto& c : coeff(a, k).coefficients()) ar[k].push_back(M.to(reduce(c, p)));
    for (int k = 0; k <= fb; ++k)
      for (const auto& c : coeff(b, k).coefficients()) br[k].push_back(M.to(reduce(c, p)));
    auto eval = [&](const std::vector<u64>& c, u64 x) {
      u64 r = 0;
      for (std::size_t i = c.size(); i-- > 0;) r = addmod(M.mul(r, x), c[i], p);
      return r;
    };
    std::vector<u64> av(static_cast<std::size_t>(fa) + 1), bv(static_cast<std::size_t>(fb) + 1);
    std::vector<u64> xm(N);
    for (std::size_t i = 0; i < N; ++i) xm[i] = M.to(i);
    for (std::size_t i = 0; i < N; ++i) {
      for (int k = 0; k <= fa; ++k) av[k] = eval(ar[k], xm[i]);
      for (int k = 0; k <= fb; ++k) bv[k] = eval(br[k], xm[i]);
      std::fill(m.begin(), m.end(), 0);
      for (int r = 0; r < fb; ++r)
        for (int k = 0; k <= fa; ++k) m[static_cast<std::size_t>(r) * un + static_cast<std::size_t>(r + fa - k)] = av[k];
      for (int r = 0; r < fa; ++r)
        for (int k = 0; k <= fb; ++k)
          m[static_cast<std::size_t>(fb + r) * un + static_cast<std::size_t>(r + fb - k)] = bv[k];
      ys[i] = det_mod(m, un, M);
    }
    // Newton form on the points 0..D, then the monomial basis
    std::vector<u64> inv(N, 0);
    for (std::size_t j = 1; j < N; ++j) inv[j] = M.to(invmod(j, p));
    for (std::size_t j = 1; j < N; ++j)
      for (std::size_t i = N - 1; i >= j; --i) ys[i] = M.mul(submod(ys[i], ys[i - 1], p), inv[j]);
    poly.assign(1, ys[N - 1]);
    for (std::size_t k = N - 1; k-- > 0;) {
      poly.push_back(0);
      for (std::size_t i = poly.size() - 1; i > 0; --i) poly[i] = submod(poly[i - 1], M.mul(xm[k], poly[i]), p);
      poly[0] = submod(ys[k], M.mul(xm[k], poly[0]), p);
    }
    for (auto& c : poly) c = M.from(c);
    // Garner step
    const u64 minv = invmod(reduce(modulus, p), p);
    Integer t;
    for (std::size_t i = 0; i < N; ++i) {
      const u64 r = submod(poly[i], reduce(value[i], p), p);
      const u64 s = mulmod(r, minv, p);
      if (s == 0) continue;
      mpz_mul_ui(t.get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(s));
      value[i] += t;
    }
    mpz_mul_ui(modulus.get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(p));
    covered += std::log2(static_cast<double>(p)) - 1e-9;
  }
  const Integer half = modulus / 2;
  for (auto& v : value)
    if (v > half) v -= modulus;
  return ZPoly(std::move(value));
}

}  // namespace trigimpl
