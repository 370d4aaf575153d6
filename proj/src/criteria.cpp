#include "slc/criteria.hpp"

#include <algorithm>
#include <array>

#include "slc/errors.hpp"
#include "slc/linalg.hpp"

namespace slc {

std::string_view to_string(CfhrStatus status) {
  switch (status) {
    case CfhrStatus::VeryAmpleOk: return "VERY_AMPLE_OK";
    case CfhrStatus::BpfOk: return "BPF_OK";
    case CfhrStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::string_view to_string(Property p) {
  switch (p) {
    case Property::Bpf: return "BPF";
    case Property::Birational: return "BIRATIONAL";
    case Property::VeryAmple: return "VERY_AMPLE";
    case Property::RingGen: return "RING_GEN";
  }
  return "BPF";
}

namespace {

std::string describe_mask(const MultiNodalCurve& c, std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < c.components().size(); ++i) {
    if (!(mask >> i & 1)) continue;
    if (!first) out += ", ";
    out += c.components()[i].id;
    first = false;
  }
  return out + "}";
}

}  // namespace

CfhrResult cfhr_check(const PolarizedCurve& p, std::size_t cap) {
  if (!p.sheaf_degrees()) throw ValidationError("the embedding criterion needs integral sheaf degrees");
  CfhrResult result;
  std::optional<std::uint64_t> equality;
  for (const Subcurve& sub : subcurves(p.curve(), cap)) {
    const long twice_genus = 2L * arithmetic_genus(sub.curve);
    const long deg = *p.sheaf_degree(sub.mask);
    if (deg < twice_genus) {
      result.status = CfhrStatus::Inconclusive;
      result.witness = sub.mask;
      result.justification = "deg " + std::to_string(deg) + " < 2p_a = " + std::to_string(twice_genus) + " on " +
                             describe_mask(p.curve(), sub.mask) + "; the criterion is only sufficient";
      return result;
    }
    if (deg == twice_genus && !equality) equality = sub.mask;
  }
  if (equality) {
    result.status = CfhrStatus::BpfOk;
    result.witness = equality;
    result.justification = "deg >= 2p_a on every subcurve, with equality on " + describe_mask(p.curve(), *equality);
  } else {
    result.status = CfhrStatus::VeryAmpleOk;
    result.justification = "deg > 2p_a on every subcurve";
  }
  return result;
}

bool kawachi_condition(long index, long m, const Rational& kdelta_squared, const Rational& min_curve_degree) {
  if (index < 1) throw ValidationError("index must be positive");
  if (m < 3) throw ValidationError("the condition is only stated for m >= 3");
  if (kdelta_squared <= 0) throw ValidationError("(K+Delta)^2 must be positive");
  const Rational t(m * index - 1);
  return t * t * kdelta_squared > 4 && t * min_curve_degree >= 2;
}

ConnectednessBound connectedness_bound(long n, long m_squared) {
  if (n < 2) throw ValidationError("n must be at least 2");
  if (m_squared < 1) throw ValidationError("M^2 must be a positive integer");
  Rational bound = Rational(n) - Rational(1, m_squared);
  bound.canonicalize();
  return {bound, m_squared == 1};
}

AdjunctionCorrection adjunction_correction(const ExceptionalGraph& g, const QDivisor& codiscrepancy,
                                           const LatticeCycle& hat, const QDivisor& pullback) {
  if (hat.size() != g.size()) throw GraphMismatch("hat transform lives on a different graph");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (hat.ids()[i] != g.vertex(i).id) throw GraphMismatch("hat transform lives on a different graph");
  }
  const auto lambda = coefficients_on(g, codiscrepancy);
  const auto pb = coefficients_on(g, pullback);
  const auto h = hat.to_rational();
  std::vector<Rational> v(g.size());
  std::vector<Rational> w(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    v[i] = h[i] - pb[i];
    w[i] = lambda[i] - v[i];
  }
  const RationalMatrix m = intersection_matrix(g).to_rational();
  AdjunctionCorrection out;
  out.value = linalg::bilinear(m, w, v);
  out.difference_nonpositive = true;
  out.hat_dominates_codiscrepancy = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < g.size(); ++j) row += m(i, j) * v[j];
    if (row > 0) out.difference_nonpositive = false;
    if (h[i] > 0 && h[i] < lambda[i]) out.hat_dominates_codiscrepancy = false;
  }
  return out;
}

bool descend_parity(long m, Residue residue) {
  if (m < 1) throw ValidationError("m must be positive");
  if (residue == Residue::Zero) return true;
  return m % 2 == 0 ? residue == Residue::Invariant : residue == Residue::AntiInvariant;
}

// ---------------------------------------------------------------------------

Hypotheses closure(const Hypotheses& h) {
  if (h.index < 1) throw ValidationError("index must be positive");
  Hypotheses out = h;
  if (h.semi_canonical == true) {
    for (auto* flag : {&out.nodal, &out.conductor_smooth, &out.canonical_off_conductor}) {
      if (*flag == false) throw ValidationError("semi_canonical contradicts an explicitly false consequence");
      *flag = true;
    }
  }
  return out;
}

namespace {

Truth known(const std::optional<bool>& flag) {
  if (!flag) return Truth::Unknown;
  return *flag ? Truth::True : Truth::False;
}

Truth fact(bool b) { return b ? Truth::True : Truth::False; }

Truth both(Truth a, Truth b) {
  if (a == Truth::False || b == Truth::False) return Truth::False;
  if (a == Truth::True && b == Truth::True) return Truth::True;
  return Truth::Unknown;
}

Truth no_component_square_one(const Hypotheses& h) {
  if (h.component_squares.empty()) return Truth::Unknown;
  return fact(std::none_of(h.component_squares.begin(), h.component_squares.end(),
                           [](const Rational& q) { return q == 1; }));
}

Truth always(const Hypotheses&) { return Truth::True; }
Truth index_at_least_two(const Hypotheses& h) { return fact(h.index >= 2); }
Truth nodal_no_square_one(const Hypotheses& h) { return both(no_component_square_one(h), known(h.nodal)); }
Truth normal_not_index_one_square_one(const Hypotheses& h) {
  return both(known(h.normal), fact(!(h.index == 1 && h.kdelta_squared == 1)));
}
Truth normal_square_not_one(const Hypotheses& h) { return both(known(h.normal), fact(h.kdelta_squared != 1)); }
Truth smooth_conductor_canonical(const Hypotheses& h) {
  return both(known(h.conductor_smooth), known(h.canonical_off_conductor));
}
Truth nodal_smooth_conductor_canonical(const Hypotheses& h) {
  return both(known(h.nodal), smooth_conductor_canonical(h));
}

constexpr std::array kRows{
    ThresholdRow{Property::Bpf, 4, "base-point-free for m >= 4", always},
    ThresholdRow{Property::Bpf, 3, "base-point-free for m >= 3 since I >= 2", index_at_least_two},
    ThresholdRow{Property::Bpf, 3,
                 "base-point-free for m >= 3 since D + Delta is nodal and no normal component has square 1",
                 nodal_no_square_one},
    ThresholdRow{Property::Bpf, 3, "base-point-free for m >= 3 since X is normal and not I = (K+Delta)^2 = 1",
                 normal_not_index_one_square_one},
    ThresholdRow{Property::Birational, 6, "birational for m >= 6", always},
    ThresholdRow{Property::VeryAmple, 8, "very ample for m >= 8", always},
    ThresholdRow{Property::VeryAmple, 6, "very ample for m >= 6 since I >= 2", index_at_least_two},
    ThresholdRow{Property::VeryAmple, 7,
                 "very ample for m >= 7 since D + Delta is nodal and no normal component has square 1",
                 nodal_no_square_one},
    ThresholdRow{Property::VeryAmple, 7, "very ample for m >= 7 since X is normal and (K+Delta)^2 != 1",
                 normal_square_not_one},
    ThresholdRow{Property::VeryAmple, 6,
                 "very ample for m >= 6 since the normalisation is smooth along the conductor and canonical elsewhere",
                 smooth_conductor_canonical},
    ThresholdRow{Property::VeryAmple, 5,
                 "very ample for m >= 5 since D + Delta is nodal, the normalisation is smooth along the conductor "
                 "and X - D is canonical",
                 nodal_smooth_conductor_canonical},
};

Verdict best_row(Property property, const Hypotheses& raw) {
  const Hypotheses h = closure(raw);
  Verdict v{property, std::nullopt, "", {}};
  for (const auto& row : kRows) {
    if (row.property != property || row.applies(h) != Truth::True) continue;
    if (!v.threshold || row.m < *v.threshold) {
      v.threshold = row.m;
      v.justification = std::string(row.statement);
    }
  }
  for (const auto& row : kRows) {
    if (row.property == property && row.applies(h) == Truth::Unknown && v.threshold && row.m < *v.threshold) {
      v.pending.push_back(std::string(row.statement) + " (hypotheses not known)");
    }
  }
  return v;
}

}  // namespace

std::span<const ThresholdRow> threshold_rows() { return kRows; }

Verdict bpf_threshold(const Hypotheses& h) { return best_row(Property::Bpf, h); }

Verdict very_ample_threshold(const Hypotheses& h) { return best_row(Property::VeryAmple, h); }

Verdict birational_threshold(const Hypotheses& h) {
  Verdict v = best_row(Property::Birational, h);
  const Verdict va = very_ample_threshold(h);
  if (va.threshold && *va.threshold < *v.threshold) {
    v.threshold = va.threshold;
    v.justification = va.justification + ", hence birational";
  }
  return v;
}

RingBound ring_generation_bound(long index, long a) {
  if (index < 1 || a < 1) throw ValidationError("index and a must be positive");
  return {2 + 2 * a * index, 3 * a * index + 1};
}

Multinode3Row multinode3_table(int deg) {
  if (deg < 2) throw DegreeTooSmall("no statement for degree " + std::to_string(deg) + " < 2");
  Multinode3Row row{deg, deg - 1, 0, deg >= 3, deg >= 3, deg >= 4, deg >= 5};
  return row;
}

SubcurveBoundData subcurve_bound_data(const NonNormalLocusReport& report, const MultiNodalCurve& d,
                                      std::uint64_t mask) {
  SubcurveBoundData data{normalization_genus(d.restricted(mask)), {}, 0};
  auto visit = [&](const LocusPoint& p) {
    int mu = 0;
    for (const auto& [comp, count] : p.component_branches) {
      if (mask >> d.index_of(comp) & 1) mu += count;
    }
    if (mu == 0) return;
    data.multiplicities.push_back(mu);
    if (mu == 1) ++*data.smooth_points;
  };
  for (const auto& p : report.singular_points) visit(p);
  for (const auto& p : report.boundary_contacts) visit(p);
  return data;
}

RestrictionVerdict restriction_to_D_verdict(const NonNormalLocusReport& report, const PolarizedCurve& d, long index,
                                            long m, std::optional<bool> nodal, std::size_t cap) {
  if (index < 1 || m < 1) throw ValidationError("index and m must be positive");
  RestrictionVerdict v;
  if (d.curve().components().empty()) {
    v.bpf = v.birational = v.very_ample = true;
    v.justifications.push_back("D is empty");
    return v;
  }
  auto row = [&](bool holds, long from, const std::string& why) {
    if (!holds || m < from) return;
    v.bpf = true;
    v.justifications.push_back("base-point-free on D + Delta for m >= " + std::to_string(from) + why);
    if (m > from) {
      v.very_ample = true;
      v.justifications.push_back("very ample on D + Delta for m > " + std::to_string(from) + why);
    }
  };
  row(true, 4, "");
  if (m >= 4) {
    v.birational = true;
    v.justifications.push_back("birational on D + Delta for m >= 4");
  }
  row(index >= 2, 3, " since I >= 2");
  row(nodal == true, 2, " since D + Delta is nodal");

  if (d.curve().components().size() > cap) {
    v.notes.push_back("subcurve scan skipped: D has " + std::to_string(d.curve().components().size()) +
                      " components, above the cap of " + std::to_string(cap));
  } else {
    for (const Subcurve& sub : subcurves(d.curve(), cap)) {
      const DegreeBounds bounds = deg_comparison_bound(subcurve_bound_data(report, d.curve(), sub.mask));
      const Rational deg = d.degree(sub.mask);
      if (deg < bounds.via_normalization) {
        v.notes.push_back("degree comparison fails on " + describe_mask(d.curve(), sub.mask) + ": deg " +
                          to_string(deg) + " < " + to_string(bounds.via_normalization));
      }
    }
    try {
      v.certificate = cfhr_check(d.with_scaled_sheaf_degrees(m * index), cap);
      if (v.certificate->bpf_ok()) {
        v.bpf = true;
        v.justifications.push_back("deg >= 2p_a on every subcurve of D");
      }
      if (v.certificate->very_ample_ok()) {
        v.very_ample = v.birational = true;
        v.justifications.push_back("deg > 2p_a on every subcurve of D");
      }
    } catch (const ValidationError& e) {
      v.notes.push_back(std::string("no integral degrees on D: ") + e.what());
    }
  }
  if (v.very_ample) v.bpf = v.birational = true;
  return v;
}

}  // namespace slc
