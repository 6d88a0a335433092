// Copyright (c) the expl authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef EXPL_CORE_HPP
#define EXPL_CORE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace expl {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Per-point feature tag carried from database meshes into priors.
/// Values are fixed by the PLY "flabel" encoding and the library file format.
enum class FeatureLabel : std::uint8_t { Regular = 0, Edge = 1, Corner = 2 };

enum class ErrorCode {
  InvalidMesh,
  DegeneratePatch,
  NoOverlap,
  EmptyInput,
  DimensionMismatch,
  TooLarge,
  NoValidModels,
  UnsupportedVersion,
  CorruptLibrary,
  NoExemplars,
  NothingToMatch,
  MatchRejected,
  CannotOrient,
  MeshingFailed,
  NoComparableRegions,
  InvalidConfig,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidMesh: return "InvalidMesh";
    case ErrorCode::DegeneratePatch: return "DegeneratePatch";
    case ErrorCode::NoOverlap: return "NoOverlap";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoValidModels: return "NoValidModels";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::CorruptLibrary: return "CorruptLibrary";
    case ErrorCode::NoExemplars: return "NoExemplars";
    case ErrorCode::NothingToMatch: return "NothingToMatch";
    case ErrorCode::MatchRejected: return "MatchRejected";
    case ErrorCode::CannotOrient: return "CannotOrient";
    case ErrorCode::MeshingFailed: return "MeshingFailed";
    case ErrorCode::NoComparableRegions: return "NoComparableRegions";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, std::string(error_code_name(code)) + ": " + msg);
}

/// Axis-aligned bounding box.
struct Aabb {
  Vec3 min{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
           std::numeric_limits<double>::max()};
  Vec3 max{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest(),
           std::numeric_limits<double>::lowest()};

  bool empty() const { return min.x() > max.x(); }
  void expand(const Vec3& p) {
    min = min.cwiseMin(p);
    max = max.cwiseMax(p);
  }
  Vec3 extent() const { return empty() ? Vec3::Zero() : Vec3(max - min); }
  double diagonal() const { return extent().norm(); }
  Vec3 center() const { return 0.5 * (min + max); }
};

/// splitmix64; used to derive independent per-model / per-task RNG seeds
/// from one user seed without correlated streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Round a double to the nearest f32-representable value (still stored as
/// double). Canonical patch data is kept on this grid so the f32 on-disk
/// format round-trips bit-exactly.
inline double snap_f32(double v) { return static_cast<double>(static_cast<float>(v)); }

inline Vec3 snap_f32(const Vec3& v) {
  return Vec3(snap_f32(v.x()), snap_f32(v.y()), snap_f32(v.z()));
}

}  // namespace expl

#endif  // EXPL_CORE_HPP
