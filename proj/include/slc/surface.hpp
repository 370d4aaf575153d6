#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slc/arith_graph.hpp"
#include "slc/curves.hpp"
#include "slc/rational.hpp"

namespace slc {

struct SingularPoint {
  std::string location;
  ExceptionalGraph graph;

  friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
};

/// One irreducible component of the normalisation together with its part of
/// the conductor and boundary. Classes on different components never meet.
struct NormalComponent {
  std::string id;
  std::vector<std::string> classes;
  RationalMatrix form;                 // intersection form on classes
  QDivisor canonical;                  // K in terms of classes
  std::vector<std::string> conductor;  // classes making up the conductor
  std::vector<std::string> boundary;   // classes making up the boundary
  std::vector<SingularPoint> singular_points;
  long chi = 1;  // holomorphic Euler characteristic of the component

  std::optional<std::size_t> class_index(std::string_view name) const;
  /// Throws ValidationError on classes outside the declared list.
  Rational intersect(const QDivisor& a, const QDivisor& b) const;
  /// K + conductor + boundary.
  QDivisor log_canonical() const;

  friend bool operator==(const NormalComponent&, const NormalComponent&) = default;
};

/// A branch of the normalised conductor, in bijection with conductor classes.
struct ConductorBranch {
  std::string id;
  std::string component;
  std::string conductor_class;
  int genus = 0;
  int fixed_points = 0;  // only for branches paired with themselves

  friend bool operator==(const ConductorBranch&, const ConductorBranch&) = default;
};

/// Special point on a conductor branch: a preimage of a node of the
/// conductor (node_partner names the other preimage), a ramification point
/// of the gluing, or a point where boundary branches pass.
struct MarkedPoint {
  std::string id;
  std::string branch;
  Rational different = 1;
  std::optional<std::string> node_partner;
  int boundary_branches = 0;

  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

struct GluingInvolution {
  std::vector<ConductorBranch> branches;
  std::map<std::string, std::string> branch_pairing;  // involution, fixed branches allowed
  std::vector<MarkedPoint> points;
  std::map<std::string, std::string> point_map;       // involution on marked points

  friend bool operator==(const GluingInvolution&, const GluingInvolution&) = default;
};

struct StableLogSurface {
  std::vector<NormalComponent> components;
  GluingInvolution gluing;
  long global_index = 1;

  friend bool operator==(const StableLogSurface&, const StableLogSurface&) = default;
};

/// Sorted, de-duplicated list of violated conditions; empty means valid.
std::vector<std::string> validate_triple(const StableLogSurface& s);

enum class LocusType { I, II };

std::string_view to_string(LocusType type);

/// One point of the non-normal locus, i.e. one class of marked points under
/// the relation generated by the gluing and the node identifications.
struct LocusPoint {
  std::string id;                       // smallest member id
  std::vector<std::string> members;
  int mu = 1;                           // branches of D through the point
  int mu_with_boundary = 1;             // branches of D + Delta
  int node_pairs = 0;
  LocusType type = LocusType::II;
  bool degenerate_cusp = false;         // circular singular class
  std::map<std::string, int> component_branches;  // D component -> branches
};

/// Irreducible component of D, the image of one orbit of conductor branches.
struct DComponent {
  std::string id;
  std::vector<std::string> branches;
  int genus = 0;  // genus of its normalisation
};

struct NonNormalLocusReport {
  std::vector<LocusPoint> singular_points;    // mu >= 2
  std::vector<LocusPoint> boundary_contacts;  // mu = 1 but D + Delta singular
  std::vector<DComponent> components;
  int conductor_nodes = 0;                    // nodes of the conductor upstairs

  std::size_t component_count() const { return components.size(); }
};

/// Throws InvalidTriple when validate_triple reports anything.
NonNormalLocusReport non_normal_locus(const StableLogSurface& s);

/// Genus g' of the quotient of a genus g curve by an involution with the
/// given number of fixed points. Throws InconsistentRamification.
int quotient_genus(int g, int fixed_points);

struct SurfaceInvariants {
  Rational k_squared;
  long chi = 0;
  long chi_conductor = 0;      // of the conductor on the normalisation
  long chi_conductor_nu = 0;   // of the normalisation of D
  long chi_d = 0;              // of the non-normal locus D
};

SurfaceInvariants invariants(const StableLogSurface& s);

/// D as a multi-nodal curve polarised by K + Delta.
PolarizedCurve conductor_curve(const StableLogSurface& s, const NonNormalLocusReport& report);

/// Squares of K + D + Delta on each normal component.
std::vector<Rational> component_squares(const StableLogSurface& s);

/// Disjoint union; ids of b are prefixed to keep them distinct.
StableLogSurface disjoint_union(const StableLogSurface& a, const StableLogSurface& b, const std::string& prefix_b);

}  // namespace slc
