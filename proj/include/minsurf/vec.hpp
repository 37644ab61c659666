#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace minsurf {

using Vec3 = Eigen::Vector3d;

inline bool is_finite(const Vec3& v) { return v.allFinite(); }

}  // namespace minsurf
