#pragma once

#include "twistorlab/forms.hpp"
#include "twistorlab/quat.hpp"

namespace twistorlab::testing {

inline double dist(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }
inline double dist(const Biquaternion& a, const Biquaternion& b) { return (a - b).norm(); }
inline double dist(const QOneForm& a, const QOneForm& b) { return (a - b).norm(); }
inline double dist(const QTwoForm& a, const QTwoForm& b) { return (a - b).norm(); }

inline double dist(const UnitImaginary& a, const UnitImaginary& b) { return (a.quat() - b.quat()).norm(); }
inline double dist(const UnitImaginary& a, const Quaternion& b) { return (a.quat() - b).norm(); }

inline const Quaternion I{0, 1, 0, 0};
inline const Quaternion J{0, 0, 1, 0};
inline const Quaternion K{0, 0, 0, 1};

}  // namespace twistorlab::testing
