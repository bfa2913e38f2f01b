#include <map>
#include <mutex>

#include "ntazrp/qscalar.hpp"

namespace ntazrp {

namespace {

QPoly one_minus_q_power(int j) { return QPoly(1) - QPoly::q_power(j); }

}  // namespace

QPoly q_factorial(int m) {
  if (m < 0) throw std::invalid_argument("q_factorial: negative m");
  static std::mutex mu;
  static std::vector<QPoly> cache{QPoly(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) <= m) {
    const int j = static_cast<int>(cache.size());
    cache.push_back(cache.back() * one_minus_q_power(j));
  }
  return cache[static_cast<std::size_t>(m)];
}

QPoly q2_factorial(int m) { return q_factorial(m).substitute_power(2); }

QRat q_pochhammer(const QRat& z_coeff, int z_qshift, int m) {
  if (m < 0) throw std::invalid_argument("q_pochhammer: negative m");
  QRat acc(1);
  for (int j = 1; j <= m; ++j) {
    const int e = z_qshift + j - 1;
    QRat term = e >= 0 ? z_coeff * QRat(QPoly::q_power(e))
                       : z_coeff / QRat(QPoly::q_power(-e));
    acc *= QRat(1) - term;
  }
  return acc;
}

QPoly q_binomial(int m, int j) {
  if (m < 0) throw std::invalid_argument("q_binomial: negative m");
  if (j < 0 || j > m) return {};
  static std::mutex mu;
  static std::map<std::pair<int, int>, QPoly> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({m, j});
    if (it != cache.end()) return it->second;
  }
  QPoly v = div_exact(q_factorial(m), q_factorial(j) * q_factorial(m - j));
  std::lock_guard lock(mu);
  cache.emplace(std::make_pair(m, j), v);
  return v;
}

QRat chi(int m) { return QRat(QPoly(1), q_factorial(m)); }

QRat chi_prime(int m) { return QRat(q2_factorial(m), q_factorial(m)); }

}  // namespace ntazrp
