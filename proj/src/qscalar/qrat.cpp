#include "ntazrp/qscalar.hpp"

#include <utility>

namespace ntazrp {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
  canonicalize();
}

void QRat::canonicalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (!den_.is_one()) {
    QPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = div_exact(num_, g);
      den_ = div_exact(den_, g);
    }
  }
  if (den_.trailing() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QRat QRat::inverse() const {
  if (is_zero()) throw std::domain_error("QRat: inverse of zero");
  return QRat(den_, num_);
}

mpq_class QRat::at_zero() const {
  BigInt d = den_.at_zero();
  if (d == 0) throw std::domain_error("QRat: pole at q = 0 in " + to_string());
  mpq_class r(num_.at_zero(), d);
  r.canonicalize();
  return r;
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = QPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QRat();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  QPoly g1 = poly_gcd(num_, o.den_);
  QPoly g2 = poly_gcd(o.num_, den_);
  num_ = div_exact(num_, g1) * div_exact(o.num_, g2);
  den_ = div_exact(den_, g2) * div_exact(o.den_, g1);
  if (den_.trailing() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

std::string QRat::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace ntazrp
