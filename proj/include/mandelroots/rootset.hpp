#ifndef MANDELROOTS_ROOTSET_HPP
#define MANDELROOTS_ROOTSET_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "mandelroots/complex_scalar.hpp"
#include "mandelroots/errors.hpp"

namespace mandelroots {

enum class PointStatus : std::uint8_t { Active, Converged };

struct FamilyTag {
  std::string family;  // "mandelbrot", "quad:<re>,<im>", "custom", or empty
  int k = 0;
};

/// Ordered set of complex approximations with per-point convergence status
/// and, when computed, the distance to the nearest distinct neighbor
/// (NaN = unset).
template <class S>
struct RootSetT {
  std::vector<complex_t<S>> points;
  std::vector<PointStatus> status;
  std::vector<double> neighbor_dist;
  FamilyTag family_tag;

  RootSetT() = default;

  explicit RootSetT(std::vector<complex_t<S>> pts, FamilyTag tag = {})
      : points(std::move(pts)), family_tag(std::move(tag)) {
    status.assign(points.size(), PointStatus::Active);
    neighbor_dist.assign(points.size(), std::nan(""));
  }

  std::size_t degree() const { return points.size(); }

  bool fully_converged() const {
    for (auto s : status)
      if (s != PointStatus::Converged) return false;
    return true;
  }

  std::size_t active_count() const {
    std::size_t n = 0;
    for (auto s : status) n += s == PointStatus::Active;
    return n;
  }

  bool has_neighbor_dists() const {
    if (neighbor_dist.size() != points.size()) return false;
    for (double d : neighbor_dist)
      if (std::isnan(d)) return false;
    return !points.empty();
  }

  void mark_all_converged() { status.assign(points.size(), PointStatus::Converged); }
  void mark_all_active() { status.assign(points.size(), PointStatus::Active); }
};

using RootSet = RootSetT<double>;
using RootSetHP = RootSetT<DoubleDouble>;

inline RootSetHP lift_to_hp(const RootSet& rs) {
  RootSetHP out;
  out.points.reserve(rs.points.size());
  for (const auto& z : rs.points) out.points.emplace_back(z);
  out.status = rs.status;
  out.neighbor_dist = rs.neighbor_dist;
  out.family_tag = rs.family_tag;
  return out;
}

inline RootSet round_to_double(const RootSetHP& rs) {
  RootSet out;
  out.points.reserve(rs.points.size());
  for (const auto& z : rs.points) out.points.push_back(to_std(z));
  out.status = rs.status;
  out.neighbor_dist = rs.neighbor_dist;
  out.family_tag = rs.family_tag;
  return out;
}

struct PhaseTimings {
  double aberth = 0.0;
  double newton = 0.0;
  double neighbors = 0.0;
  double other = 0.0;

  double total() const { return aberth + newton + neighbors + other; }
  PhaseTimings& operator+=(const PhaseTimings& t) {
    aberth += t.aberth;
    newton += t.newton;
    neighbors += t.neighbors;
    other += t.other;
    return *this;
  }
};

/// Bookkeeping of one convergence run: how many points were still active
/// after each sweep, plus wall-clock phase breakdown.
struct ConvergenceRecord {
  std::vector<std::size_t> per_sweep_active;
  std::vector<std::size_t> per_sweep_moved;
  PhaseTimings timings;                       // accumulated over all sweeps
  std::vector<PhaseTimings> per_sweep_times;  // same data, one entry per sweep
  double delta_indicator = std::nan("");      // set by drivers that compute it

  std::size_t sweeps_total() const { return per_sweep_active.size(); }

  /// Sweeps in which at least one point actually moved (at least 1). This is
  /// the count a refinement pass reports: the trailing sweep that only
  /// verifies the stop criterion is not counted.
  std::size_t moving_sweeps() const {
    std::size_t n = 0;
    for (std::size_t m : per_sweep_moved) n += m > 0;
    return n > 0 ? n : 1;
  }
};

}  // namespace mandelroots

#endif
