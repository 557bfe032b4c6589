#pragma once

#include <cmath>

namespace swe {

// Minimal 2D vector used for vertex positions, normals and velocities.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
inline Vec2 operator/(Vec2 v, double s) { return {v.x / s, v.y / s}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

// z-component of the 3D cross product; twice the signed area of the
// triangle (0, a, b).
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

// Clockwise quarter turn: maps a counterclockwise edge direction to the
// outward normal of the region on its left.
inline Vec2 rotate_cw(Vec2 v) { return {v.y, -v.x}; }

// Counterclockwise quarter turn.
inline Vec2 rotate_ccw(Vec2 v) { return {-v.y, v.x}; }

inline double dist(Vec2 a, Vec2 b) { return norm(b - a); }

}  // namespace swe
