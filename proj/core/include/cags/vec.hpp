#pragma once

#include <cmath>

namespace cags {

struct Vec2 {
    double x = 0, y = 0;
};

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

// Quaternion and generic 4-vector, scalar-first (w, x, y, z).
struct Vec4 {
    double w = 0, x = 0, y = 0, z = 0;
};

struct Mat2 {
    // row-major
    double m[2][2] = {{0, 0}, {0, 0}};
};

struct Mat3 {
    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3& operator+=(Vec3& a, Vec3 b) { a.x += b.x; a.y += b.y; a.z += b.z; return a; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(Vec3 a) {
    double n = norm(a);
    return {a.x / n, a.y / n, a.z / n};
}

inline Vec4 operator+(Vec4 a, Vec4 b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec4 operator-(Vec4 a, Vec4 b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec4 operator*(double s, Vec4 a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }
inline Vec4& operator+=(Vec4& a, Vec4 b) { a.w += b.w; a.x += b.x; a.y += b.y; a.z += b.z; return a; }
inline double dot(Vec4 a, Vec4 b) { return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec4 a) { return std::sqrt(dot(a, a)); }

// Hamilton product a ⊗ b.
inline Vec4 quat_mul(Vec4 a, Vec4 b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Vec3 mul(const Mat3& A, Vec3 v) {
    return {A.m[0][0] * v.x + A.m[0][1] * v.y + A.m[0][2] * v.z,
            A.m[1][0] * v.x + A.m[1][1] * v.y + A.m[1][2] * v.z,
            A.m[2][0] * v.x + A.m[2][1] * v.y + A.m[2][2] * v.z};
}

// A^T v without forming the transpose.
inline Vec3 mul_t(const Mat3& A, Vec3 v) {
    return {A.m[0][0] * v.x + A.m[1][0] * v.y + A.m[2][0] * v.z,
            A.m[0][1] * v.x + A.m[1][1] * v.y + A.m[2][1] * v.z,
            A.m[0][2] * v.x + A.m[1][2] * v.y + A.m[2][2] * v.z};
}

inline Mat3 mul(const Mat3& A, const Mat3& B) {
    Mat3 C;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            C.m[i][j] = A.m[i][0] * B.m[0][j] + A.m[i][1] * B.m[1][j] + A.m[i][2] * B.m[2][j];
    return C;
}

inline Mat3 transposed(const Mat3& A) {
    Mat3 T;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) T.m[i][j] = A.m[j][i];
    return T;
}

inline Mat3 identity3() {
    Mat3 I;
    I.m[0][0] = I.m[1][1] = I.m[2][2] = 1.0;
    return I;
}

inline Mat2 operator+(const Mat2& A, const Mat2& B) {
    Mat2 C;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) C.m[i][j] = A.m[i][j] + B.m[i][j];
    return C;
}

inline Vec2 mul(const Mat2& A, Vec2 v) {
    return {A.m[0][0] * v.x + A.m[0][1] * v.y, A.m[1][0] * v.x + A.m[1][1] * v.y};
}

inline double det(const Mat2& A) { return A.m[0][0] * A.m[1][1] - A.m[0][1] * A.m[1][0]; }

inline Mat2 inverse(const Mat2& A, double d) {
    Mat2 inv;
    inv.m[0][0] = A.m[1][1] / d;
    inv.m[0][1] = -A.m[0][1] / d;
    inv.m[1][0] = -A.m[1][0] / d;
    inv.m[1][1] = A.m[0][0] / d;
    return inv;
}

// Rotation about a unit axis by angle (Rodrigues).
inline Mat3 axis_angle_to_mat(Vec3 axis, double angle) {
    double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
    double x = axis.x, y = axis.y, z = axis.z;
    Mat3 R;
    R.m[0][0] = t * x * x + c;
    R.m[0][1] = t * x * y - s * z;
    R.m[0][2] = t * x * z + s * y;
    R.m[1][0] = t * x * y + s * z;
    R.m[1][1] = t * y * y + c;
    R.m[1][2] = t * y * z - s * x;
    R.m[2][0] = t * x * z - s * y;
    R.m[2][1] = t * y * z + s * x;
    R.m[2][2] = t * z * z + c;
    return R;
}

// Shepperd's method; returns a unit quaternion (w >= 0 branch-dependent).
inline Vec4 mat_to_quat(const Mat3& R) {
    double tr = R.m[0][0] + R.m[1][1] + R.m[2][2];
    Vec4 q;
    if (tr > 0.0) {
        double s = std::sqrt(tr + 1.0) * 2.0;
        q.w = 0.25 * s;
        q.x = (R.m[2][1] - R.m[1][2]) / s;
        q.y = (R.m[0][2] - R.m[2][0]) / s;
        q.z = (R.m[1][0] - R.m[0][1]) / s;
    } else if (R.m[0][0] > R.m[1][1] && R.m[0][0] > R.m[2][2]) {
        double s = std::sqrt(1.0 + R.m[0][0] - R.m[1][1] - R.m[2][2]) * 2.0;
        q.w = (R.m[2][1] - R.m[1][2]) / s;
        q.x = 0.25 * s;
        q.y = (R.m[0][1] + R.m[1][0]) / s;
        q.z = (R.m[0][2] + R.m[2][0]) / s;
    } else if (R.m[1][1] > R.m[2][2]) {
        double s = std::sqrt(1.0 + R.m[1][1] - R.m[0][0] - R.m[2][2]) * 2.0;
        q.w = (R.m[0][2] - R.m[2][0]) / s;
        q.x = (R.m[0][1] + R.m[1][0]) / s;
        q.y = 0.25 * s;
        q.z = (R.m[1][2] + R.m[2][1]) / s;
    } else {
        double s = std::sqrt(1.0 + R.m[2][2] - R.m[0][0] - R.m[1][1]) * 2.0;
        q.w = (R.m[1][0] - R.m[0][1]) / s;
        q.x = (R.m[0][2] + R.m[2][0]) / s;
        q.y = (R.m[1][2] + R.m[2][1]) / s;
        q.z = 0.25 * s;
    }
    return q;
}

}  // namespace cags
