#include "trigimpl/trig/classify.hpp"

#include <algorithm>

#include "trigimpl/errors.hpp"

namespace trigimpl {

namespace {

int sign_at(const ZPoly& p, const Rational& x) {
  Rational v = p(x);
  return sgn(v);
}

std::vector<QPoly> sturm_sequence(const ZPoly& p) {
  std::vector<QPoly> seq{to_rational(p), to_rational(p.derivative())};
  while (!seq.back().is_zero()) {
    auto [q, r] = divmod(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int sign_changes(const std::vector<QPoly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& s : seq) {
    int v = sgn(s(x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

// Roots in (lo, hi]; neither endpoint is a root.
int roots_between(const std::vector<QPoly>& seq, const Rational& lo, const Rational& hi) {
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

void isolate(const std::vector<QPoly>& seq, const ZPoly& p, Rational lo, Rational hi, int count,
             std::vector<Rational>& cuts) {
  if (count <= 1) {
    cuts.push_back(hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  while (sign_at(p, mid) == 0) mid = (lo + mid) / 2;
  const int left = roots_between(seq, lo, mid);
  if (left > 0) isolate(seq, p, lo, mid, left, cuts);
  if (count - left > 0) isolate(seq, p, mid, hi, count - left, cuts);
}

}  // namespace

const char* to_string(CurveKind k) {
  switch (k) {
    case CurveKind::circle: return "circle";
    case CurveKind::constant_width: return "constant_width";
    case CurveKind::rotor: return "rotor";
    case CurveKind::generic: return "generic";
  }
  return "generic";
}

Classification classify(const TrigPoly& p) {
  Classification c;
  const auto spectrum = p.spectrum();
  c.witness = spectrum;
  if (p.degree() <= 1) {
    c.kind = CurveKind::circle;
    return c;
  }
  for (int n = 3; n <= spectrum.front() + 1; ++n) {
    bool fits = std::all_of(spectrum.begin(), spectrum.end(), [n](int k) {
      int r = k % n;
      return r == 1 || r == n - 1;
    });
    if (fits) c.admissible_n.push_back(n);
  }
  const bool odd = std::all_of(spectrum.begin(), spectrum.end(), [](int k) { return k % 2 == 1; });
  if (odd && p.a0() > 0) {
    c.kind = CurveKind::constant_width;
    c.alpha = 2 * p.a0();
    c.antipodal_identity = (p + p.shifted_by_pi()) == TrigPoly(c.alpha);
    return c;
  }
  if (!c.admissible_n.empty() && p.a0() > 0) {
    c.kind = CurveKind::rotor;
    c.n = c.admissible_n.back();
    c.rho = p.a0();
  }
  return c;
}

std::vector<Rational> real_root_separators(const ZPoly& p, int& root_count) {
  root_count = 0;
  if (p.degree() <= 0) return {Rational(0)};
  // Cauchy bound: every real root lies in (-bound, bound).
  Rational bound = 0;
  for (const auto& c : p.coefficients()) bound = std::max(bound, Rational(Rational(abs(c)) / Rational(abs(p.lc()))));
  bound += 1;
  auto seq = sturm_sequence(p);
  root_count = roots_between(seq, -bound, bound);
  std::vector<Rational> cuts{-bound};
  if (root_count > 0) isolate(seq, p, -bound, bound, root_count, cuts);
  if (cuts.back() != bound) cuts.push_back(bound);
  return cuts;
}

ConvexityCertificate is_convex(const TrigPoly& p) {
  ConvexityCertificate cert;
  const TrigPoly rho = curvature_radius(p);
  const int n = rho.degree();
  const ZPoly one_plus_t2(std::vector<Integer>{1, 0, 1});
  QPoly r = to_rational(one_plus_t2.pow(static_cast<unsigned>(n))) * rho.a0();
  for (int k = 1; k <= n; ++k) {
    QPoly h = to_rational(cheb_C_dense(k)) * rho.a(k) + to_rational(cheb_S_dense(k)) * rho.b(k);
    r += h * to_rational(one_plus_t2.pow(static_cast<unsigned>(n - k)));
  }
  // clear denominators with a positive factor so signs are preserved
  Integer den = 1;
  for (const auto& c : r.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> zc;
  for (const auto& c : r.coefficients()) zc.push_back(Integer(c * den));
  cert.numerator = ZPoly(std::move(zc));
  cert.rho_at_pi = rho.value_at(Rational(-1), Rational(0));

  if (cert.numerator(Rational(0)) < 0) cert.witness_t = Rational(0);
  if (!cert.numerator.is_zero()) {
    const ZPoly sf = square_free_part(cert.numerator);
    for (const auto& x : real_root_separators(sf, cert.real_roots)) {
      int s = sign_at(cert.numerator, x);
      cert.sign_table.push_back({x, s});
      if (s < 0 && !cert.witness_t) cert.witness_t = x;
    }
  }
  if (!cert.witness_t && cert.rho_at_pi < 0) cert.witness_at_pi = true;
  cert.convex = !cert.witness_t && !cert.witness_at_pi;
  return cert;
}

}  // namespace trigimpl
