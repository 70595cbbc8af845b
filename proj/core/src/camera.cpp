#include "cags/camera.hpp"

#include <cmath>
#include <string>

namespace cags {

namespace {

bool is_orthonormal(const Mat3& R, double tol) {
    Mat3 RtR = mul(transposed(R), R);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double want = i == j ? 1.0 : 0.0;
            if (std::abs(RtR.m[i][j] - want) > tol) return false;
        }
    return true;
}

}  // namespace

Camera::Camera(double fx, double fy, double cx, double cy, const Mat3& rot, Vec3 trans, int width,
               int height)
    : fx_(fx), fy_(fy), cx_(cx), cy_(cy), rot_(rot), trans_(trans), width_(width), height_(height) {
    if (fx <= 0.0 || fy <= 0.0)
        throw ConfigError("camera: focal lengths must be positive, got fx=" + std::to_string(fx) +
                          " fy=" + std::to_string(fy));
    if (width <= 0 || height <= 0) throw ConfigError("camera: image dimensions must be positive");
    if (!is_orthonormal(rot_, 1e-9))
        throw ConfigError("camera: world-to-view rotation block is not orthonormal within 1e-9");
}

Camera look_at(Vec3 eye, Vec3 target, Vec3 up, double focal, int width, int height) {
    Vec3 fwd = normalized(target - eye);          // view +z
    Vec3 right = normalized(cross(fwd, up));      // view +x
    Vec3 down = cross(fwd, right);                // view +y (image y grows downward)
    Mat3 R;
    R.m[0][0] = right.x; R.m[0][1] = right.y; R.m[0][2] = right.z;
    R.m[1][0] = down.x;  R.m[1][1] = down.y;  R.m[1][2] = down.z;
    R.m[2][0] = fwd.x;   R.m[2][1] = fwd.y;   R.m[2][2] = fwd.z;
    Vec3 t = -1.0 * mul(R, eye);
    return Camera(focal, focal, width * 0.5, height * 0.5, R, t, width, height);
}

}  // namespace cags
