// Small numeric building blocks shared across the library: complex scalars,
// real and complex 3-vectors, a 3x3 real matrix, and a low-discrepancy
// sequence used for deterministic domain sampling.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace wf {

using cplx = std::complex<double>;

inline constexpr double kPoleThreshold = 1e-300;

struct Vec3 {
    double x = 0, y = 0, z = 0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double max_abs(const Vec3& a) {
    return std::max(std::abs(a.x), std::max(std::abs(a.y), std::abs(a.z)));
}

// Complex triple, the value of a C^3-valued 1-form coefficient at a point.
struct CVec3 {
    cplx x{}, y{}, z{};

    cplx& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    cplx operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    CVec3 operator+(const CVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    CVec3 operator-(const CVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    CVec3 operator*(cplx s) const { return {x * s, y * s, z * s}; }
    CVec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    CVec3& operator+=(const CVec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
};

inline CVec3 operator*(cplx s, const CVec3& v) { return v * s; }
inline CVec3 operator-(const CVec3& v) { return {-v.x, -v.y, -v.z}; }

// sum of |component|^2
inline double norm2(const CVec3& v) {
    return std::norm(v.x) + std::norm(v.y) + std::norm(v.z);
}
inline double norm(const CVec3& v) { return std::sqrt(norm2(v)); }

// bilinear (not Hermitian) square: v1^2 + v2^2 + v3^2
inline cplx isotropy_defect(const CVec3& v) { return v.x * v.x + v.y * v.y + v.z * v.z; }

inline Vec3 real_part(const CVec3& v) { return {v.x.real(), v.y.real(), v.z.real()}; }
inline Vec3 imag_part(const CVec3& v) { return {v.x.imag(), v.y.imag(), v.z.imag()}; }
inline double max_abs(const CVec3& v) {
    return std::max(std::abs(v.x), std::max(std::abs(v.y), std::abs(v.z)));
}

struct Mat3 {
    // row-major
    std::array<double, 9> m{};

    double& operator()(int r, int c) { return m[3 * r + c]; }
    double operator()(int r, int c) const { return m[3 * r + c]; }

    static Mat3 identity() {
        Mat3 out;
        out(0, 0) = out(1, 1) = out(2, 2) = 1.0;
        return out;
    }

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }
    CVec3 operator*(const CVec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }
    Mat3 operator*(const Mat3& o) const {
        Mat3 out;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                for (int k = 0; k < 3; ++k) out(r, c) += (*this)(r, k) * o(k, c);
        return out;
    }
    Mat3 transposed() const {
        Mat3 out;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) out(r, c) = (*this)(c, r);
        return out;
    }
    double det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }
};

// Halton sequence in the given base, index starts at 1.
inline double halton(std::uint64_t index, std::uint32_t base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

}  // namespace wf
