// Copyright 2026 The fanocalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FANOCALC_SURFACE_HPP_
#define FANOCALC_SURFACE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanocalc/linalg.hpp"
#include "fanocalc/piecewise.hpp"
#include "fanocalc/poly1.hpp"
#include "fanocalc/rational.hpp"

namespace fanocalc::surface {

// Divisor class in the lattice basis.
struct SurfClass {
  std::vector<Rational> coeffs;

  SurfClass() = default;
  explicit SurfClass(std::vector<Rational> c) : coeffs(std::move(c)) {}
  static SurfClass zero(std::size_t n) { return SurfClass(std::vector<Rational>(n, Rational(0))); }

  std::size_t size() const { return coeffs.size(); }
  SurfClass operator+(const SurfClass& o) const;
  SurfClass operator-(const SurfClass& o) const;
  SurfClass operator*(const Rational& t) const;
  bool operator==(const SurfClass& o) const { return coeffs == o.coeffs; }
  bool operator!=(const SurfClass& o) const { return coeffs != o.coeffs; }
};

struct NegCurve {
  std::string label;
  SurfClass cls;
  std::optional<int> genus;
};

// Neron-Severi data of a surface with a closed list of negative curves.
//
// Nefness and pseudoeffectivity are decided relative to `negcurves`
// together with the reference ample class: a class is treated as
// pseudoeffective when its Zariski positive part is nonnegative on every
// declared curve, on the ample class and on itself.
class SurfaceLattice {
 public:
  SurfaceLattice() = default;
  // Validates the data and throws ValidationError on any violation.
  SurfaceLattice(std::string name, std::vector<std::string> basis, Matrix<Rational> gram, SurfClass canonical,
                 std::vector<NegCurve> negcurves, SurfClass ample);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const Matrix<Rational>& gram() const { return gram_; }
  const SurfClass& canonical() const { return canonical_; }
  SurfClass anticanonical() const { return canonical_ * Rational(-1); }
  const std::vector<NegCurve>& negcurves() const { return negcurves_; }
  const SurfClass& ample() const { return ample_; }
  std::size_t rank() const { return basis_.size(); }

  // Index of a basis label or declared curve label; throws
  // ValidationError when unknown.
  SurfClass class_of(const std::string& label) const;

 private:
  std::string name_;
  std::vector<std::string> basis_;
  Matrix<Rational> gram_;
  SurfClass canonical_;
  std::vector<NegCurve> negcurves_;
  SurfClass ample_;
};

// Family u -> sum_i coeffs[i](u) e_i on [a, b].
struct SurfFamily {
  std::vector<Poly1> coeffs;
  Rational a;
  Rational b;

  SurfClass at(const Rational& u) const;
};

struct ZariskiResult {
  SurfClass positive;
  std::vector<std::pair<std::string, Rational>> negative;
};

struct ZariskiChamber {
  Rational lo;
  Rational hi;
  std::vector<Poly1> positive;
  std::vector<std::pair<std::string, Poly1>> negative;
};

struct ZariskiProfile {
  std::vector<ZariskiChamber> chambers;

  Rational domain_start() const { return chambers.front().lo; }
  Rational domain_end() const { return chambers.back().hi; }
  // P(u)^2 chamber by chamber.
  PiecewisePoly volume(const SurfaceLattice& lat) const;
  // P(u) + N(u) of the chamber containing u (left chamber at walls).
  std::vector<Poly1> full_class(std::size_t chamber, const SurfaceLattice& lat) const;
};

Rational intersect(const SurfaceLattice& lat, const SurfClass& c1, const SurfClass& c2);
// Bilinear form on classes whose coordinates are polynomials in u.
Poly1 intersect(const SurfaceLattice& lat, const std::vector<Poly1>& c1, const std::vector<Poly1>& c2);

bool is_negative_definite(const Matrix<Rational>& m);

ZariskiResult zariski(const SurfaceLattice& lat, const SurfClass& c);
Rational volume(const SurfaceLattice& lat, const SurfClass& c);

// Chamber decomposition of the family over the part of [a, b] where it
// stays pseudoeffective. The profile ends at the first point beyond which
// the family leaves the pseudoeffective cone.
ZariskiProfile zariski_profile(const SurfaceLattice& lat, const SurfFamily& fam);
Rational pseff_threshold(const SurfaceLattice& lat, const SurfFamily& fam);
Rational beta_curve(const SurfaceLattice& lat, const SurfClass& curve);

// Integral over the profile domain of the integral over v >= 0 of
// vol(D(u) - v F), where D(u) is the full class of the profile.
Rational double_integral_volume(const SurfaceLattice& lat, const ZariskiProfile& profile, const SurfClass& f);

}  // namespace fanocalc::surface

#endif  // FANOCALC_SURFACE_HPP_
