#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slc/arith_graph.hpp"
#include "slc/curves.hpp"
#include "slc/cycles.hpp"
#include "slc/rational.hpp"
#include "slc/surface.hpp"

namespace slc {

// ---------------------------------------------------------------------------
// Curve embedding criterion

enum class CfhrStatus { VeryAmpleOk, BpfOk, Inconclusive };

std::string_view to_string(CfhrStatus status);

struct CfhrResult {
  CfhrStatus status = CfhrStatus::Inconclusive;
  /// First subcurve (mask over components) where deg < 2 p_a, or where
  /// deg = 2 p_a when only base-point-freeness holds.
  std::optional<std::uint64_t> witness;
  std::string justification;

  bool bpf_ok() const { return status != CfhrStatus::Inconclusive; }
  bool very_ample_ok() const { return status == CfhrStatus::VeryAmpleOk; }
};

/// Compares integral sheaf degrees with 2 p_a on every subcurve. The test
/// is only sufficient, so failure is reported as Inconclusive. Throws
/// ValidationError without sheaf degrees and TooManyComponents above cap.
CfhrResult cfhr_check(const PolarizedCurve& p, std::size_t cap = kDefaultSubcurveCap);

// ---------------------------------------------------------------------------
// Numerical conditions

/// (mI - 1)^2 q > 4 and (mI - 1) d >= 2, with q = (K + Delta)^2 and d the
/// least degree on a curve. Needs m >= 3 and q > 0 (ValidationError).
bool kawachi_condition(long index, long m, const Rational& kdelta_squared, const Rational& min_curve_degree);

struct ConnectednessBound {
  Rational bound;                // n - 1/M^2
  bool equality_characterized;   // only when M^2 = 1
};

ConnectednessBound connectedness_bound(long n, long m_squared);

struct AdjunctionCorrection {
  Rational value;                  // (Lambda - hat + pullback).(hat - pullback)
  bool difference_nonpositive;     // (hat - pullback).E_i <= 0 for all i
  bool hat_dominates_codiscrepancy;  // hat >= Lambda where hat > 0
};

/// All inputs live on g; terms outside g throw GraphMismatch.
AdjunctionCorrection adjunction_correction(const ExceptionalGraph& g, const QDivisor& codiscrepancy,
                                           const LatticeCycle& hat, const QDivisor& pullback);

enum class Residue { Zero, Invariant, AntiInvariant };

/// Whether a section with the given residue along the conductor descends
/// to the glued surface in degree m.
bool descend_parity(long m, Residue residue);

// ---------------------------------------------------------------------------
// Threshold tables

/// Three-valued flags: std::nullopt means not known.
struct Hypotheses {
  long index = 1;
  Rational kdelta_squared;
  std::vector<Rational> component_squares;
  std::optional<bool> nodal;                    // D + Delta is a nodal curve
  std::optional<bool> normal;
  std::optional<bool> conductor_smooth;         // normalisation smooth along the conductor
  std::optional<bool> canonical_off_conductor;  // at most canonical singularities elsewhere
  std::optional<bool> semi_canonical;

  friend bool operator==(const Hypotheses&, const Hypotheses&) = default;
};

/// Applies the consequences of semi_canonical. Throws ValidationError when
/// they contradict an explicit false, or when index < 1.
Hypotheses closure(const Hypotheses& h);

enum class Property { Bpf, Birational, VeryAmple, RingGen };

std::string_view to_string(Property p);

enum class Truth { False, True, Unknown };

struct ThresholdRow {
  Property property;
  int m;
  std::string_view statement;
  Truth (*applies)(const Hypotheses&);
};

/// Every row of the threshold tables, grouped by property.
/// Unconditional rows come first in each property.
std::span<const ThresholdRow> threshold_rows();

struct Verdict {
  Property property;
  std::optional<int> threshold;
  std::string justification;
  /// Better rows whose hypotheses are neither known true nor known false.
  std::vector<std::string> pending;
};

Verdict bpf_threshold(const Hypotheses& h);
Verdict very_ample_threshold(const Hypotheses& h);
/// Birational from m >= 6, or earlier when already very ample.
Verdict birational_threshold(const Hypotheses& h);

struct RingBound {
  long surjective_from;       // 2 + 2aI
  long generated_in_degree;   // 3aI + 1
};

RingBound ring_generation_bound(long index, long a);

// ---------------------------------------------------------------------------
// Curves through the non-normal locus

/// Line bundles on a rational curve with a single 3-multi-node.
struct Multinode3Row {
  int degree;
  int h0;
  int h1;
  bool bpf;
  bool is_morphism;
  bool birational;
  bool embedding;
};

/// Throws DegreeTooSmall for deg < 2.
Multinode3Row multinode3_table(int deg);

struct RestrictionVerdict {
  bool bpf = false;
  bool birational = false;
  bool very_ample = false;
  std::vector<std::string> justifications;
  std::optional<CfhrResult> certificate;  // criterion on mI(K + Delta)|D
  std::vector<std::string> notes;

  bool inconclusive() const { return !bpf && !birational && !very_ample; }
};

/// Verdict for mI(K + Delta) restricted to D. Combines the table rows with
/// a scan over all subcurves of D: the degree comparison bounds are checked
/// against the numerical degrees and the embedding criterion is run on the
/// integral degrees. The scan is skipped, with a note, above cap.
RestrictionVerdict restriction_to_D_verdict(const NonNormalLocusReport& report, const PolarizedCurve& d, long index,
                                            long m, std::optional<bool> nodal,
                                            std::size_t cap = kDefaultSubcurveCap);

/// Degree comparison inputs for the subcurve mask of D.
SubcurveBoundData subcurve_bound_data(const NonNormalLocusReport& report, const MultiNodalCurve& d,
                                      std::uint64_t mask);

}  // namespace slc
