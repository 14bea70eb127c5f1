#pragma once

#include <string>
#include <vector>

#include "bhphase/compact.hpp"
#include "bhphase/portrait.hpp"

namespace bh {

struct EquilibriumMarker {
  std::string label;
  std::string chart;
  DiskPoint at;
  std::string kind;
  std::vector<std::string> sectors;
};

struct SeparatrixPath {
  std::string origin;
  std::string branch;
  std::string alpha;
  std::string omega;
  std::vector<DiskPoint> points;
};

struct OrbitPath {
  std::vector<DiskPoint> points;
};

/// Disk-coordinate data for a phase portrait.
struct PortraitDocument {
  Params params;
  PortraitClass cls;
  bool assumes_no_limit_cycles = false;
  bool evidence_match = false;
  FixtureSource source = FixtureSource::Text;
  std::vector<EquilibriumMarker> equilibria;
  std::vector<SeparatrixPath> separatrices;
  std::vector<OrbitPath> orbits;
  /// Heteroclinic E1 -> E0 orbit carrying the traveling wave (c >= 2 only).
  std::vector<SeparatrixPath> highlight;
};

/// Orbit fan: 24 grid seeds integrated both ways.
std::vector<OrbitPath> orbit_fan(const Params& p, const IntegratorControls& ctl = {});

/// Builds the portrait document; deterministic for fixed inputs.
PortraitDocument export_portrait(const Params& p, const TraceOptions& opt = {});
PortraitDocument export_portrait(const PortraitResult& result, const TraceOptions& opt = {});

/// JSON text of the document (2-space indent, trailing newline).
std::string to_json(const PortraitDocument& doc);

/// Drops points closer than min_gap to the previously kept one; keeps both ends.
std::vector<DiskPoint> decimate(const std::vector<DiskPoint>& pts, double min_gap = 1e-3);

}  // namespace bh
