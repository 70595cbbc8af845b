#pragma once

#include "cags/common.hpp"
#include "cags/vec.hpp"

namespace cags {

// Pinhole camera: intrinsics in pixels plus a rigid world-to-view transform.
// View space: +z in front of the camera; pixel (i,j) has center (i+0.5, j+0.5).
class Camera {
public:
    Camera(double fx, double fy, double cx, double cy, const Mat3& rot, Vec3 trans, int width,
           int height);

    double fx() const { return fx_; }
    double fy() const { return fy_; }
    double cx() const { return cx_; }
    double cy() const { return cy_; }
    int width() const { return width_; }
    int height() const { return height_; }
    const Mat3& rotation() const { return rot_; }
    const Vec3& translation() const { return trans_; }

    Vec3 to_view(Vec3 world) const { return mul(rot_, world) + trans_; }
    // Camera center in world coordinates (-R^T t).
    Vec3 center() const { return -1.0 * mul_t(rot_, trans_); }

    // Pixel coordinates of a view-space point (z > 0 assumed).
    Vec2 project(Vec3 view) const {
        return {fx_ * view.x / view.z + cx_, fy_ * view.y / view.z + cy_};
    }

private:
    double fx_, fy_, cx_, cy_;
    Mat3 rot_;
    Vec3 trans_;
    int width_, height_;
};

// Camera at `eye` looking toward `target`, x right / y down in image space.
Camera look_at(Vec3 eye, Vec3 target, Vec3 up, double focal, int width, int height);

}  // namespace cags
