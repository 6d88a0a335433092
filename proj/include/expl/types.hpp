// Copyright (c) the expl authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef EXPL_TYPES_HPP
#define EXPL_TYPES_HPP

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "expl/core.hpp"

namespace expl {

/// Point set with optional per-point normals, feature labels and weights.
/// Optional attributes are either empty or exactly points.size() long.
/// A zero normal marks an unoriented point.
struct PointCloud {
  std::vector<Vec3> points;
  std::vector<Vec3> normals;
  std::vector<FeatureLabel> labels;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }

  bool has_normals() const { return !normals.empty(); }
  bool has_labels() const { return !labels.empty(); }
  bool has_weights() const { return !weights.empty(); }

  bool oriented(std::size_t i) const {
    return has_normals() && normals[i].squaredNorm() > 0.25;
  }
  std::size_t oriented_count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < size(); ++i)
      if (oriented(i)) ++c;
    return c;
  }

  double weight(std::size_t i) const { return has_weights() ? weights[i] : 1.0; }

  Aabb bounding_box() const {
    Aabb box;
    for (const Vec3& p : points) box.expand(p);
    return box;
  }
  double diagonal() const { return bounding_box().diagonal(); }

  /// Checks the documented type invariants; throws on violation.
  void validate() const {
    if (has_normals() && normals.size() != points.size())
      fail(ErrorCode::DimensionMismatch, "normals length != points length");
    if (has_labels() && labels.size() != points.size())
      fail(ErrorCode::DimensionMismatch, "labels length != points length");
    if (has_weights() && weights.size() != points.size())
      fail(ErrorCode::DimensionMismatch, "weights length != points length");
    for (std::size_t i = 0; i < size(); ++i) {
      if (oriented(i) && std::abs(normals[i].norm() - 1.0) > 1e-6)
        fail(ErrorCode::DimensionMismatch, "normal not unit length");
      if (has_weights() && !(weights[i] > 0.0))
        fail(ErrorCode::DimensionMismatch, "weights must be strictly positive");
    }
  }
};

/// Triangle mesh with derived per-face areas and unit normals.
/// Faces with zero area are flagged degenerate and excluded from sampling.
struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::uint32_t, 3>> faces;

  // derived by finalize()
  std::vector<double> faceAreas;
  std::vector<Vec3> faceNormals;
  double totalArea = 0.0;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t face_count() const { return faces.size(); }

  bool face_degenerate(std::size_t f) const { return faceAreas[f] <= 0.0; }

  Aabb bounding_box() const {
    Aabb box;
    for (const Vec3& v : vertices) box.expand(v);
    return box;
  }
  double diagonal() const { return bounding_box().diagonal(); }

  /// Validates face indices and computes areas / normals.
  void finalize() {
    faceAreas.assign(faces.size(), 0.0);
    faceNormals.assign(faces.size(), Vec3::Zero());
    totalArea = 0.0;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      for (int k = 0; k < 3; ++k)
        if (faces[f][k] >= vertices.size())
          fail(ErrorCode::InvalidMesh, "face index out of range");
      const Vec3& a = vertices[faces[f][0]];
      const Vec3& b = vertices[faces[f][1]];
      const Vec3& c = vertices[faces[f][2]];
      Vec3 n = (b - a).cross(c - a);
      double n2 = n.norm();
      faceAreas[f] = 0.5 * n2;
      if (faceAreas[f] > 0.0 && std::isfinite(faceAreas[f])) {
        faceNormals[f] = n / n2;
        totalArea += faceAreas[f];
      } else {
        faceAreas[f] = 0.0;  // degenerate, excluded from sampling
      }
    }
  }
};

/// Rotation + translation + uniform scale; maps x to scale * R * x + t.
struct SimilarityTransform {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();
  double scale = 1.0;

  Vec3 apply(const Vec3& x) const { return scale * (rotation * x) + translation; }
  Vec3 apply_normal(const Vec3& n) const { return rotation * n; }

  SimilarityTransform inverse() const {
    SimilarityTransform inv;
    inv.rotation = rotation.transpose();
    inv.scale = 1.0 / scale;
    inv.translation = -(inv.scale) * (inv.rotation * translation);
    return inv;
  }

  /// compose(A, B) applies B first, then A.
  static SimilarityTransform compose(const SimilarityTransform& a,
                                     const SimilarityTransform& b) {
    SimilarityTransform c;
    c.rotation = a.rotation * b.rotation;
    c.scale = a.scale * b.scale;
    c.translation = a.scale * (a.rotation * b.translation) + a.translation;
    return c;
  }

  static SimilarityTransform identity() { return SimilarityTransform{}; }

  /// Max deviation from the type invariants (orthonormality, det=+1).
  double orthonormality_error() const {
    Mat3 d = rotation.transpose() * rotation - Mat3::Identity();
    double e = d.cwiseAbs().maxCoeff();
    return std::max(e, std::abs(rotation.determinant() - 1.0));
  }
};

}  // namespace expl

#endif  // EXPL_TYPES_HPP
