#include "trigimpl/trig/legendre.hpp"

#include "trigimpl/errors.hpp"

namespace trigimpl {

QPoly legendre_W(int l, int m) {
  if (l < 0 || m < 0 || m > l) throw MathError("associated Legendre index out of range");
  QPoly w = QPoly(std::vector<Rational>{1, 0, -1}).pow(static_cast<unsigned>(l));
  for (int i = 0; i < l + m; ++i) w = w.derivative();
  Integer scale;
  mpz_fac_ui(scale.get_mpz_t(), static_cast<unsigned long>(l));
  scale <<= l;
  Rational f(1, scale);
  if ((m + l) % 2) f = -f;
  return w * f;
}

LegendreForm legendre_assoc(int l, int m) {
  LegendreForm out;
  out.parity = m % 2;
  out.poly = legendre_W(l, m) * QPoly(std::vector<Rational>{1, 0, -1}).pow(static_cast<unsigned>(m / 2));
  return out;
}

void SphericalSupport::check(int l, int m) const {
  if (l < 0 || m < 0 || m > l) throw MathError("spherical harmonic index out of range");
}

void SphericalSupport::prune(const std::pair<int, int>& key) {
  auto it = c_.find(key);
  if (it != c_.end() && it->second.first == 0 && it->second.second == 0) c_.erase(it);
}

void SphericalSupport::set(int l, int m, Rational a, Rational b) {
  check(l, m);
  if (m == 0 && b != 0) throw MathError("b coefficient with m = 0");
  c_[{l, m}] = {std::move(a), std::move(b)};
  prune({l, m});
}

void SphericalSupport::set_a(int l, int m, Rational a) {
  check(l, m);
  c_[{l, m}].first = std::move(a);
  prune({l, m});
}

void SphericalSupport::set_b(int l, int m, Rational b) {
  check(l, m);
  if (m == 0 && b != 0) throw MathError("b coefficient with m = 0");
  c_[{l, m}].second = std::move(b);
  prune({l, m});
}

int SphericalSupport::degree() const { return c_.empty() ? -1 : c_.rbegin()->first.first; }

std::string SphericalSupport::to_string() const {
  std::string out;
  for (const auto& [key, ab] : c_) {
    const auto& [l, m] = key;
    const std::string tag = "Y" + std::to_string(l) + "," + std::to_string(m);
    if (ab.first != 0) out += (out.empty() ? "" : " ") + tag + "a=" + trigimpl::to_string(ab.first);
    if (ab.second != 0) out += (out.empty() ? "" : " ") + tag + "b=" + trigimpl::to_string(ab.second);
  }
  return out.empty() ? "0" : out;
}

}  // namespace trigimpl
