#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "form4/operators.hpp"

namespace form4 {

inline constexpr double kFrameUnitTol = 1e-12;
inline constexpr double kSpatialTol = 1e-12;

// Unit timelike 1-form of a reference frame at a point, optionally carrying
// the frame's vector components in the same chart.  Future-pointing is
// taken as a positive time slot of the 1-form in the working chart.
struct FrameVelocity {
  KVector v;
  std::optional<std::array<double, 4>> vector_components;

  static FrameVelocity make(const KVector& v, const MetricAtPoint& m) {
    if (v.grade != 1) throw std::invalid_argument("frame 1-form must have grade 1");
    if (std::fabs(inner(v, v, m) - 1.0) > kFrameUnitTol)
      throw std::invalid_argument("frame not normalized");
    if (!(v[0] > 0.0)) throw std::invalid_argument("frame not future-pointing");
    return FrameVelocity{v, std::nullopt};
  }

  // Lab rest frame: v = dt.
  static FrameVelocity lab() {
    FrameVelocity f;
    f.v = KVector::basis(1, 0);
    f.vector_components = std::array<double, 4>{1.0, 0.0, 0.0, 0.0};
    return f;
  }
};

inline void require_unit_frame(const FrameVelocity& f, const MetricAtPoint& m) {
  if (f.v.grade != 1 || std::fabs(inner(f.v, f.v, m) - 1.0) > kFrameUnitTol)
    throw std::invalid_argument("frame not normalized");
}

// Frame-spatial electric/magnetic and excitation 1-forms.
struct FieldSplit {
  KVector E, B, D, H;
};

// E = v _| F, B = v _| *F, D = v _| G, H = v _| *G.  All outputs satisfy
// v _| (.) = 0 relative to the splitting frame.
inline FieldSplit split_fields(const KVector& F, const KVector& G, const FrameVelocity& frame,
                               const MetricAtPoint& m) {
  require_unit_frame(frame, m);
  if (F.grade != 2 || G.grade != 2) throw std::invalid_argument("fields must be 2-forms");
  FieldSplit out;
  out.E = contract_left(frame.v, F, m);
  out.B = contract_left(frame.v, hodge(F, m), m);
  out.D = contract_left(frame.v, G, m);
  out.H = contract_left(frame.v, hodge(G, m), m);
  return out;
}

// Rebuild a 2-form from its frame split: v ^ a - *(v ^ b).  Inputs must be
// spatial in the frame; violations are rejected rather than projected.
inline KVector assemble_field(const FrameVelocity& frame, const KVector& spatial_a,
                              const KVector& spatial_b, const MetricAtPoint& m) {
  require_unit_frame(frame, m);
  if (spatial_a.grade != 1 || spatial_b.grade != 1)
    throw std::invalid_argument("spatial inputs must be 1-forms");
  if (std::fabs(contract_left(frame.v, spatial_a, m)[0]) > kSpatialTol ||
      std::fabs(contract_left(frame.v, spatial_b, m)[0]) > kSpatialTol)
    throw std::invalid_argument("input not spatial in the given frame");
  return wedge(frame.v, spatial_a) - hodge(wedge(frame.v, spatial_b), m);
}

}  // namespace form4
