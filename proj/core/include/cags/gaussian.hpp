#pragma once

#include <cstdint>

#include "cags/autodiff.hpp"
#include "cags/camera.hpp"
#include "cags/tensor.hpp"
#include "cags/vec.hpp"

namespace cags {

// Per-primitive learnable state. Scale is stored as log(scale) and opacity as
// a logit so positivity / (0,1) hold by construction under gradient steps.
// Canonical positions are data: they come from surface anchors, not from the
// optimizer.
struct GaussianField {
    size_t count = 0;
    size_t sh_bands = 1;  // B: 1 (degree 0) or 4 (degree 1)
    Tensor mu_canonical;  // N×3
    Parameter rotation;       // N×4 quaternions (w,x,y,z)
    Parameter log_scale;      // N×3
    Parameter opacity_logit;  // N×1
    Parameter sh_coeffs;      // N×(B*3), band-major: [b0 rgb, b1 rgb, ...]
};

GaussianField make_field(size_t count, size_t sh_bands);

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }
inline double logit(double p) { return std::log(p / (1.0 - p)); }

// ---- rotation ----------------------------------------------------------

// Normalizes q internally; throws DegenerateInputError on |q| == 0.
Mat3 quat_to_rotmat(Vec4 q);
// d(loss)/dq given d(loss)/dR, chained through the normalization.
Vec4 quat_to_rotmat_backward(Vec4 q, const Mat3& grad_R);

// ---- covariance --------------------------------------------------------

// Σ = R S S^T R^T with S = diag(exp(log_s)); PSD by construction.
Mat3 build_covariance(Vec4 q, Vec3 log_s);

struct CovarianceGrads {
    Vec4 q;
    Vec3 log_s;
};
CovarianceGrads build_covariance_backward(Vec4 q, Vec3 log_s, const Mat3& grad_sigma);

// ---- EWA projection ----------------------------------------------------

// Σ' = J Wr Σ Wr^T J^T + floor·I, with J the pinhole Jacobian at the
// view-space mean and Wr the rotation block of world-to-view. Only the
// rotation acts on the covariance.
Mat2 project_covariance(const Mat3& sigma, Vec3 mean_view, const Camera& cam);

struct ProjectionGrads {
    Mat3 sigma;
    Vec3 mean_view;
};
ProjectionGrads project_covariance_backward(const Mat3& sigma, Vec3 mean_view, const Camera& cam,
                                            const Mat2& grad_sigma2d);

// Pixel position of a view-space mean and its backward.
Vec2 project_point(Vec3 mean_view, const Camera& cam);
Vec3 project_point_backward(Vec3 mean_view, const Camera& cam, Vec2 grad_pixel);

// ---- density -----------------------------------------------------------

// exp(-1/2 d^T Σ'^{-1} d); equals 1 at d = 0.
double eval_density(Vec2 d, const Mat2& sigma2d_inv);

struct DensityGrads {
    Vec2 d;
    Mat2 sigma2d_inv;
};
DensityGrads eval_density_backward(Vec2 d, const Mat2& sigma2d_inv, double grad_out);

// ---- spherical harmonics color ----------------------------------------

// Real SH basis (bands 1 or 4), +0.5 offset, clamped to [0, inf).
// coeffs: pointer to B*3 values band-major; view_dir must be unit length.
Vec3 eval_sh_color(const double* coeffs, size_t bands, Vec3 view_dir);

struct ShGrads {
    // filled for `bands*3` coefficients
    double coeffs[12];
    Vec3 view_dir;
};
ShGrads eval_sh_color_backward(const double* coeffs, size_t bands, Vec3 view_dir, Vec3 grad_color);

}  // namespace cags
