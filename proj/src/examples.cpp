#include "slc/examples.hpp"

#include "slc/errors.hpp"

namespace slc::examples {

namespace {

QDivisor term(const std::string& name, long coeff) {
  QDivisor d;
  d.add(name, coeff);
  return d;
}

}  // namespace

document::SurfaceDocument descend() {
  NormalComponent plane;
  plane.id = "P2";
  plane.classes = {"L", "Q"};
  plane.form = RationalMatrix(2);
  plane.form(0, 0) = 1;
  plane.form(0, 1) = plane.form(1, 0) = 4;
  plane.form(1, 1) = 16;
  plane.canonical = term("L", -3);
  plane.conductor = {"Q"};
  plane.chi = 1;

  document::SurfaceDocument doc;
  doc.surface.global_index = 1;
  doc.surface.components.push_back(std::move(plane));
  doc.surface.gluing.branches.push_back({"Q", "P2", "Q", 3, 4});
  doc.surface.gluing.branch_pairing["Q"] = "Q";
  doc.hypotheses.semi_canonical = true;
  return doc;
}

document::SurfaceDocument large_k2(int k) {
  if (k < 2 || k > 50) throw ValidationError("largeK2 needs 2 <= k <= 50");
  const std::vector<std::string> heights{"0", "1", "inf"};
  std::vector<std::string> slopes;
  for (int j = 1; j <= k; ++j) {
    slopes.push_back(std::to_string(j));
    slopes.push_back(std::to_string(-j));
  }

  NormalComponent q;
  q.id = "P1xP1";
  for (const auto& h : heights) q.classes.push_back("H" + h);
  for (const auto& j : slopes) q.classes.push_back("V" + j);
  q.form = RationalMatrix(q.classes.size());
  for (std::size_t a = 0; a < q.classes.size(); ++a) {
    for (std::size_t b = 0; b < q.classes.size(); ++b) {
      q.form(a, b) = (a < 3) != (b < 3) ? 1 : 0;
    }
  }
  q.canonical = term("H0", -2) + term("V1", -2);
  q.conductor = q.classes;
  q.chi = 1;

  document::SurfaceDocument doc;
  auto& s = doc.surface;
  auto& gl = s.gluing;
  s.global_index = 1;
  s.components.push_back(std::move(q));
  for (const auto& h : heights) gl.branches.push_back({"H" + h, "P1xP1", "H" + h, 0, h == "0" ? 2 : 0});
  for (const auto& j : slopes) gl.branches.push_back({"V" + j, "P1xP1", "V" + j, 0, 0});
  gl.branch_pairing["H0"] = "H0";
  gl.branch_pairing["H1"] = "Hinf";
  gl.branch_pairing["Hinf"] = "H1";
  for (int j = 1; j <= k; ++j) {
    gl.branch_pairing["V" + std::to_string(j)] = "V" + std::to_string(-j);
    gl.branch_pairing["V" + std::to_string(-j)] = "V" + std::to_string(j);
  }

  // Each vertical line meets each horizontal line once; both preimages of
  // the node are marked.
  auto on_v = [](const std::string& j, const std::string& h) { return "V" + j + "@" + h; };
  auto on_h = [](const std::string& h, const std::string& j) { return "H" + h + "@" + j; };
  for (const auto& j : slopes) {
    for (const auto& h : heights) {
      gl.points.push_back({on_v(j, h), "V" + j, 1, on_h(h, j), 0});
      gl.points.push_back({on_h(h, j), "H" + h, 1, on_v(j, h), 0});
    }
  }
  auto pair = [&](const std::string& a, const std::string& b) {
    gl.point_map[a] = b;
    gl.point_map[b] = a;
  };
  for (int j = 1; j <= k; ++j) {
    const std::string pos = std::to_string(j);
    const std::string neg = std::to_string(-j);
    pair(on_h("0", pos), on_h("0", neg));
    pair(on_h("1", pos), on_h("inf", pos));
    pair(on_h("1", neg), on_h("inf", neg));
    // Rotating the heights makes the class of P_j a single cycle.
    pair(on_v(pos, "0"), on_v(neg, "1"));
    pair(on_v(pos, "1"), on_v(neg, "inf"));
    pair(on_v(pos, "inf"), on_v(neg, "0"));
  }

  doc.hypotheses.normal = false;
  doc.hypotheses.nodal = false;
  doc.hypotheses.conductor_smooth = true;
  doc.hypotheses.canonical_off_conductor = true;
  doc.hypotheses.semi_canonical = false;
  return doc;
}

PolarizedCurve multinode3_curve(long deg) {
  MultiNodalCurve curve({{"B", 0}}, {{"p", {{"B", 3}}}});
  return PolarizedCurve(std::move(curve), {{"B", Rational(deg)}}, std::map<std::string, long>{{"B", deg}});
}

namespace {

long binomial2(long j) { return j < 0 ? 0 : (j + 2) * (j + 1) / 2; }

// Degree-j monomials x^a y^b z^c with a + b of the given parity.
long parity_monomials(long j, long parity) {
  long count = 0;
  for (long ab = 0; ab <= j; ++ab) {
    if (ab % 2 == parity) count += ab + 1;
  }
  return count;
}

}  // namespace

std::vector<long> graded_ring_dims(int max_k) {
  if (max_k < 0 || max_k > 64) throw ValidationError("max_k must lie in 0..64");
  std::vector<long> dims;
  for (long k = 0; k <= max_k; ++k) {
    const long parity = k % 2;
    dims.push_back(binomial2(k - 4) + parity_monomials(k, parity) - parity_monomials(k - 4, parity));
  }
  return dims;
}

}  // namespace slc::examples
