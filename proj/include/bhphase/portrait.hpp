#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bhphase/compact.hpp"
#include "bhphase/core.hpp"
#include "bhphase/equilibria.hpp"
#include "bhphase/flow.hpp"

namespace bh {

enum class Stability { Stable, Unstable };

/// Branch of a saddle manifold. Side + lies along the unit eigenvector whose
/// x-component is positive, side - along its negative.
struct Branch {
  Stability stability = Stability::Unstable;
  int side = 1;

  /// "U+", "U-", "S+" or "S-".
  std::string name() const;
  static Branch parse(std::string_view s);
  friend bool operator==(const Branch&, const Branch&) = default;
};

inline constexpr double kDefaultSeedEps = 1e-7;

/// e.location + side * eps * unit eigenvector of the requested stability.
/// Throws PreconditionError for a non-saddle and DomainError for eps <= 0.
PhasePoint seed_manifold(const Params& p, const Equilibrium& e, Branch branch, double eps = kDefaultSeedEps);

struct Separatrix {
  std::string origin;
  Branch branch;
  Trajectory trajectory;
  LimitSet far_end;
  std::string alpha;
  std::string omega;
};

/// Default controls used for separatrix tracing.
IntegratorControls separatrix_controls();

struct TraceOptions {
  IntegratorControls ctl = separatrix_controls();
  double seed_eps = kDefaultSeedEps;
  /// Chart height v at which the I2 separatrix is seeded on the V1 u-nullcline.
  /// Nearby orbits collapse onto the separatrix in forward time, while smaller
  /// heights make the planar flow stiff (x^k y term).
  double infinite_seed_v = 0.1;
  bool parallel = true;
};

/// All four branches of every finite saddle, each traced to its limit set.
std::vector<Separatrix> trace_separatrices(const Params& p, const TraceOptions& opt = {});

/// The separatrix of I2 leaving into the finite plane (n = 1, k odd only).
std::optional<Separatrix> trace_infinite_separatrix(const Params& p, const TraceOptions& opt = {});

enum class FixtureSource { Text, Figure };

std::string_view to_string(FixtureSource s) noexcept;

struct PortraitClass {
  std::string tag;
  std::string equivalence_class;
};

/// Decision table over (n, k, c); total on valid parameters.
PortraitClass portrait_class(const Params& p);

/// Expected limit sets per "origin branch" key, e.g. "E1 U+" -> "I3^0".
struct ConnectionFixture {
  std::string tag;
  FixtureSource source = FixtureSource::Text;
  std::map<std::string, std::string> expected;
};

/// Connection fixture for a class tag; throws ParameterError for unknown tags.
const ConnectionFixture& connection_fixture(std::string_view tag);

struct PortraitResult {
  Params params;
  PortraitClass cls;
  bool assumes_no_limit_cycles = false;
  std::vector<Separatrix> evidence;
  std::optional<Separatrix> infinite_evidence;
  /// Observed limit set per fixture key.
  std::map<std::string, std::string> observed;
  FixtureSource source = FixtureSource::Text;
  bool evidence_match = false;
};

PortraitResult classify_portrait(const Params& p, const TraceOptions& opt = {});

/// Key used by fixtures: origin + " " + branch name.
std::string connection_key(const Separatrix& s);

}  // namespace bh
