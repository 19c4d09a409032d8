#include "twistorlab/quat.hpp"

namespace twistorlab {

Quaternion inverse(const Quaternion& q) {
  const double n2 = q.norm2();
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw Error(ErrorCode::ZeroDivisor, "quaternion has zero norm");
  }
  return q.conj() / n2;
}

bool is_zero_divisor(const Biquaternion& a) {
  return std::abs(a.qnorm()) < 1e-12 * (1.0 + a.norm2());
}

Biquaternion bq_inv(const Biquaternion& a) {
  if (is_zero_divisor(a)) {
    throw Error(ErrorCode::ZeroDivisor, "biquaternion is not invertible");
  }
  return a.qconj() / a.qnorm();
}

UnitImaginary::UnitImaginary(double x, double y, double z)
    : UnitImaginary(normalized({0.0, x, y, z})) {}

UnitImaginary UnitImaginary::normalized(const Quaternion& q) {
  const Quaternion v = q.vector();
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::InvalidArgument, "unit imaginary needs a nonzero vector part");
  }
  return UnitImaginary(v / n, 0);
}

UnitImaginary UnitImaginary::checked(const Quaternion& q, double tol) {
  if (std::abs(q.w) > tol || std::abs(q.norm() - 1.0) > tol) {
    throw Error(ErrorCode::InvalidArgument, "not a unit imaginary quaternion");
  }
  return UnitImaginary(q, 0);
}

}  // namespace twistorlab
