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

#include "fanocalc/groups/fixed_locus.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "fanocalc/errors.hpp"
#include "fanocalc/poly1.hpp"

namespace fanocalc::groups {
namespace {

using CMatrix = Matrix<Cyclotomic>;
using CVec = std::vector<Cyclotomic>;

CMatrix columns_to_matrix(const std::vector<CVec>& cols, std::size_t rows, std::size_t begin, std::size_t end) {
  CMatrix m(end - begin, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = begin; i < end; ++i) m(i - begin, j) = cols[j][i];
  (void)rows;
  return m;
}

CMatrix hstack(const CMatrix& a, const CMatrix& b) {
  CMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = -b(i, j);
  }
  return m;
}

// Independent columns spanning the column space of m.
CMatrix column_basis(const CMatrix& m) {
  CMatrix r = m;
  std::vector<std::size_t> piv = r.rref();
  CMatrix out(m.rows(), piv.size());
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, piv[k]);
  return out;
}

const std::vector<Cyclotomic>& eigen_candidates() {
  static const std::vector<Cyclotomic> roots = [] {
    std::vector<Cyclotomic> out;
    for (int n : {8, 12})
      for (long k = 0; k < n; ++k) {
        Cyclotomic z = Cyclotomic::zeta(n, k);
        if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
      }
    return out;
  }();
  return roots;
}

enum class StepResult { kUnchanged, kChanged, kDropped, kSplit };

void apply_to_block(LinearPiece& p, std::size_t b, const CMatrix& m) {
  for (std::size_t i = 0; i < p.block_of.size(); ++i)
    if (p.block_of[i] == b) p.basis[i] = p.basis[i] * m;
  p.block_dims[b] = m.cols();
}

// Imposes "g fixes the point on factor j" on the piece.
StepResult impose(LinearPiece& p, const GroupElement& g, std::size_t j, std::vector<LinearPiece>& split) {
  const std::size_t s = static_cast<std::size_t>(g.source[j]);
  const std::size_t bj = p.block_of[j], bs = p.block_of[s];
  CMatrix a = g.maps[j].dense() * p.basis[s];
  const CMatrix& b = p.basis[j];
  std::vector<CVec> null = hstack(b, a).nullspace();
  if (null.empty()) return StepResult::kDropped;
  const std::size_t dj = b.cols(), ds = a.cols();
  CMatrix nt = columns_to_matrix(null, dj + ds, 0, dj);
  CMatrix ny = columns_to_matrix(null, dj + ds, dj, dj + ds);

  if (bj != bs) {
    // Glue the two blocks along the twisted diagonal.
    for (std::size_t i = 0; i < p.block_of.size(); ++i) {
      if (p.block_of[i] == bj) {
        p.basis[i] = p.basis[i] * nt;
        p.block_of[i] = bs;
      } else if (p.block_of[i] == bs) {
        p.basis[i] = p.basis[i] * ny;
      }
    }
    p.block_dims[bs] = null.size();
    p.block_dims.erase(p.block_dims.begin() + static_cast<long>(bj));
    for (std::size_t& k : p.block_of)
      if (k > bj) --k;
    return StepResult::kChanged;
  }

  const std::size_t d = ds;
  CMatrix w = column_basis(ny);
  if (w.cols() == 0) return StepResult::kDropped;
  if (w.cols() < d) {
    apply_to_block(p, bj, w);
    return StepResult::kChanged;
  }
  std::optional<CMatrix> t = b.solve(a);
  if (!t) throw UnsupportedAction("induced map on a fixed piece is not defined");
  bool scalar = true;
  for (std::size_t r = 0; r < d && scalar; ++r)
    for (std::size_t c = 0; c < d && scalar; ++c)
      if ((r == c && (*t)(r, c) != (*t)(0, 0)) || (r != c && !(*t)(r, c).is_zero())) scalar = false;
  if (scalar) return StepResult::kUnchanged;

  std::size_t found = 0;
  for (const Cyclotomic& rho : eigen_candidates()) {
    std::vector<CVec> ker;
    try {
      CMatrix shifted = *t;
      for (std::size_t r = 0; r < d; ++r) shifted(r, r) = shifted(r, r) - rho;
      ker = shifted.nullspace();
    } catch (const DomainError&) {
      continue;
    }
    if (ker.empty()) continue;
    found += ker.size();
    LinearPiece q = p;
    apply_to_block(q, bj, CMatrix::from_columns(ker, d));
    split.push_back(std::move(q));
  }
  if (found != d) throw UnsupportedAction("eigenvalues of a group element are not supported roots of unity");
  return StepResult::kSplit;
}

// Polynomials in one variable over the cyclotomic numbers, ascending.
using CPoly = std::vector<Cyclotomic>;

void trim(CPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

CPoly poly_mod(CPoly a, const CPoly& b) {
  trim(a);
  Cyclotomic lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    Cyclotomic f = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

CPoly poly_gcd(CPoly a, CPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    CPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Cyclotomic inv = a.back().inverse();
    for (Cyclotomic& c : a) c *= inv;
  }
  return a;
}

struct Reduced {
  std::vector<MPoly> equations;
  std::vector<std::size_t> free_blocks;  // blocks of affine dimension at least 2
  std::vector<std::size_t> var_offset;   // first reduced variable of each free block
  std::size_t nvars = 0;
};

// Restricts the equations to the piece. Blocks of dimension one are points
// and their coordinate is set to 1.
Reduced restrict_equations(const LinearPiece& p, const VarietyModel& v) {
  Reduced red;
  red.var_offset.assign(p.block_dims.size(), 0);
  for (std::size_t b = 0; b < p.block_dims.size(); ++b) {
    if (p.block_dims[b] < 2) continue;
    red.free_blocks.push_back(b);
    red.var_offset[b] = red.nvars;
    red.nvars += p.block_dims[b];
  }
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < v.space.factors(); ++i) {
    std::size_t b = p.block_of[i];
    for (std::size_t r = 0; r < v.space.coords(i); ++r) {
      MPoly img(red.nvars);
      for (std::size_t k = 0; k < p.block_dims[b]; ++k) {
        const Cyclotomic& c = p.basis[i](r, k);
        if (c.is_zero()) continue;
        if (p.block_dims[b] < 2) {
          img = img + MPoly(red.nvars, c);
        } else {
          img = img + MPoly::variable(red.nvars, red.var_offset[b] + k) * c;
        }
      }
      images.push_back(img);
    }
  }
  for (const MPoly& f : v.equations) {
    MPoly g = f.substitute(images);
    if (!g.is_zero()) red.equations.push_back(g);
  }
  return red;
}

Point lift(const LinearPiece& p, const Reduced& red, const CVec& y) {
  std::vector<CVec> blocks;
  for (std::size_t b = 0; b < p.block_dims.size(); ++b) {
    if (p.block_dims[b] < 2) {
      blocks.push_back({Cyclotomic(1)});
    } else {
      blocks.emplace_back(y.begin() + static_cast<long>(red.var_offset[b]),
                          y.begin() + static_cast<long>(red.var_offset[b] + p.block_dims[b]));
    }
  }
  return normalize_point(p.point(blocks));
}

bool all_vanish(const std::vector<MPoly>& eqs, const CVec& y) {
  for (const MPoly& f : eqs)
    if (!f.eval(y).is_zero()) return false;
  return true;
}

// Small search over coordinates in {0, 1, -1}, first nonzero entry of each
// block equal to 1.
std::optional<CVec> search_witness(const Reduced& red, const LinearPiece& p) {
  const std::size_t n = red.nvars;
  if (n == 0) return std::nullopt;
  std::vector<int> digits(n, 0);
  const long budget = 60000;
  for (long iter = 0; iter < budget; ++iter) {
    std::size_t k = 0;
    while (k < n && digits[k] == 2) digits[k++] = 0;
    if (k == n) break;
    ++digits[k];
    bool ok = true;
    for (std::size_t b : red.free_blocks) {
      int first = 0;
      for (std::size_t r = 0; r < p.block_dims[b] && first == 0; ++r) first = digits[red.var_offset[b] + r];
      if (first != 1) ok = false;
    }
    if (!ok) continue;
    CVec y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = Cyclotomic(digits[i] == 2 ? -1 : digits[i]);
    if (all_vanish(red.equations, y)) return y;
  }
  return std::nullopt;
}

// Degree of f in the variables of each free block, or nullopt if f is not
// homogeneous in some block.
std::optional<std::vector<int>> block_degrees(const MPoly& f, const Reduced& red, const LinearPiece& p) {
  std::optional<std::vector<int>> out;
  for (const auto& [e, coef] : f.terms()) {
    std::vector<int> d;
    for (std::size_t b : red.free_blocks) {
      int sum = 0;
      for (std::size_t k = 0; k < p.block_dims[b]; ++k) sum += e[red.var_offset[b] + k];
      d.push_back(sum);
    }
    if (out && *out != d) return std::nullopt;
    out = d;
  }
  return out;
}

// True when the product of the divisor classes of the equations is nonzero
// in the Chow ring of the product of the free blocks.
bool top_chern_class_nonzero(const Reduced& red, const LinearPiece& p) {
  std::map<std::vector<int>, Integer> prod{{std::vector<int>(red.free_blocks.size(), 0), Integer(1)}};
  for (const MPoly& f : red.equations) {
    auto deg = block_degrees(f, red, p);
    if (!deg) return false;
    std::map<std::vector<int>, Integer> next;
    for (const auto& [mono, coef] : prod) {
      for (std::size_t j = 0; j < deg->size(); ++j) {
        if ((*deg)[j] == 0) continue;
        std::vector<int> m = mono;
        if (++m[j] >= static_cast<int>(p.block_dims[red.free_blocks[j]])) continue;
        next[m] += coef * (*deg)[j];
      }
    }
    prod = std::move(next);
    if (prod.empty()) return false;
  }
  return true;
}

Verdict piece_verdict(const LinearPiece& p, const VarietyModel& v) {
  Reduced red = restrict_equations(p, v);
  for (const MPoly& f : red.equations)
    if (f.is_constant()) return Verdict::empty();
  if (red.equations.empty()) {
    CVec y(red.nvars, Cyclotomic(0));
    for (std::size_t b : red.free_blocks) y[red.var_offset[b]] = Cyclotomic(1);
    return Verdict::nonempty(lift(p, red, y));
  }
  if (auto y = search_witness(red, p)) return Verdict::nonempty(lift(p, red, *y));

  const int dim = p.dimension();
  if (dim == 1) {
    const std::size_t off = red.var_offset[red.free_blocks[0]];
    std::vector<CPoly> uni;
    for (const MPoly& f : red.equations) {
      CPoly c;
      for (const auto& [e, coef] : f.terms()) {
        std::size_t deg = static_cast<std::size_t>(e[off]);
        if (c.size() <= deg) c.resize(deg + 1, Cyclotomic(0));
        c[deg] += coef;
      }
      uni.push_back(c);
    }
    CVec at_infinity(red.nvars, Cyclotomic(0));
    at_infinity[off] = Cyclotomic(1);
    if (all_vanish(red.equations, at_infinity)) return Verdict::nonempty(lift(p, red, at_infinity));
    CPoly g = uni[0];
    for (std::size_t i = 1; i < uni.size(); ++i) g = poly_gcd(g, uni[i]);
    g = poly_gcd(g, g);
    if (g.size() <= 1) return Verdict::empty();
    if (g.size() == 2) {
      CVec y(red.nvars, Cyclotomic(0));
      y[off] = -g[0];
      y[off + 1] = Cyclotomic(1);
      return Verdict::nonempty(lift(p, red, y));
    }
    if (std::all_of(g.begin(), g.end(), [](const Cyclotomic& c) { return c.is_rational(); })) {
      std::vector<Rational> q;
      for (const Cyclotomic& c : g) q.push_back(c.rational_value());
      std::vector<Rational> roots = rational_roots(Poly1(q));
      if (!roots.empty()) {
        CVec y(red.nvars, Cyclotomic(0));
        y[off] = Cyclotomic(roots.front());
        y[off + 1] = Cyclotomic(1);
        return Verdict::nonempty(lift(p, red, y));
      }
    }
    return Verdict::nonempty(std::nullopt, "common factor of degree " + std::to_string(g.size() - 1) +
                                               " on a fixed line");
  }
  if (top_chern_class_nonzero(red, p)) {
    return Verdict::nonempty(std::nullopt, std::to_string(red.equations.size()) +
                                               " equations with nonzero top Chern class on a fixed piece of dimension " +
                                               std::to_string(dim));
  }
  return Verdict::undecided("fixed piece of dimension " + std::to_string(dim) +
                            " where the equations do not vanish identically");
}

}  // namespace

int LinearPiece::dimension() const {
  int d = 0;
  for (std::size_t b : block_dims) d += static_cast<int>(b) - 1;
  return d;
}

Point LinearPiece::point(const std::vector<std::vector<Cyclotomic>>& y) const {
  Point p;
  for (std::size_t i = 0; i < basis.size(); ++i) p.push_back(basis[i] * y[block_of[i]]);
  return p;
}

bool LinearPiece::contains(const Point& p) const {
  if (p.size() != basis.size()) throw DimensionMismatch("point has the wrong number of factors");
  for (std::size_t b = 0; b < block_dims.size(); ++b) {
    std::vector<std::size_t> members;
    std::size_t rows = 0;
    for (std::size_t i = 0; i < block_of.size(); ++i)
      if (block_of[i] == b) {
        members.push_back(i);
        rows += basis[i].rows();
      }
    const std::size_t d = block_dims[b];
    CMatrix m(rows, d + members.size());
    std::size_t r0 = 0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const std::size_t i = members[k];
      if (p[i].size() != basis[i].rows()) throw DimensionMismatch("point factor has the wrong length");
      for (std::size_t r = 0; r < basis[i].rows(); ++r) {
        for (std::size_t c = 0; c < d; ++c) m(r0 + r, c) = basis[i](r, c);
        m(r0 + r, d + k) = -p[i][r];
      }
      r0 += basis[i].rows();
    }
    if (m.nullspace().empty()) return false;
  }
  return true;
}

std::string LinearPiece::str(const MultiProjectiveSpace& space, const std::vector<std::string>& names) const {
  (void)names;
  std::string out = "dim " + std::to_string(dimension()) + ":";
  for (std::size_t i = 0; i < space.factors(); ++i) {
    if (space.factors() > 1) out += " factor " + std::to_string(i + 1);
    std::size_t b = block_of[i];
    if (block_dims[b] == 1) {
      out += " " + point_str(normalize_point({basis[i].column(0)}));
    } else {
      out += " span(";
      for (std::size_t c = 0; c < block_dims[b]; ++c) {
        if (c) out += ", ";
        out += point_str(normalize_point({basis[i].column(c)}));
      }
      out += ")";
    }
    std::size_t shared = static_cast<std::size_t>(std::count(block_of.begin(), block_of.end(), b));
    if (shared > 1) out += " (block " + std::to_string(b + 1) + ")";
    if (i + 1 < space.factors()) out += ";";
  }
  return out;
}

bool FixedLocus::contains(const Point& p) const {
  return std::any_of(pieces.begin(), pieces.end(), [&](const LinearPiece& q) { return q.contains(p); });
}

std::string FixedLocus::summary() const {
  if (pieces.empty()) return "empty";
  std::vector<int> count;
  for (const LinearPiece& p : pieces) {
    std::size_t d = static_cast<std::size_t>(p.dimension());
    if (count.size() <= d) count.resize(d + 1, 0);
    ++count[d];
  }
  static const char* kNames[] = {"point", "line", "plane"};
  std::string out;
  for (std::size_t d = 0; d < count.size(); ++d) {
    if (count[d] == 0) continue;
    if (!out.empty()) out += ", ";
    std::string noun = d < 3 ? kNames[d] : "linear space of dimension " + std::to_string(d);
    out += std::to_string(count[d]) + " " + noun + (count[d] > 1 && d < 3 ? "s" : "");
  }
  return out;
}

std::string kind_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::kEmpty:
      return "Empty";
    case Verdict::Kind::kNonempty:
      return "Nonempty";
    case Verdict::Kind::kUndecided:
      return "Undecided";
  }
  return "Undecided";
}

FixedLocus fixed_locus(const FiniteAbelianAction& act) {
  const MultiProjectiveSpace& space = act.space;
  LinearPiece start;
  for (std::size_t i = 0; i < space.factors(); ++i) {
    start.block_of.push_back(i);
    start.block_dims.push_back(space.coords(i));
    start.basis.push_back(CMatrix::identity(space.coords(i)));
  }
  std::vector<LinearPiece> work{start};
  FixedLocus out;
  while (!work.empty()) {
    LinearPiece p = std::move(work.back());
    work.pop_back();
    bool alive = true;
    bool changed = true;
    while (alive && changed) {
      changed = false;
      for (const GroupElement& g : act.generators) {
        for (std::size_t j = 0; j < space.factors() && alive; ++j) {
          std::vector<LinearPiece> split;
          StepResult r = impose(p, g, j, split);
          if (r == StepResult::kDropped) {
            alive = false;
          } else if (r == StepResult::kSplit) {
            for (LinearPiece& q : split) work.push_back(std::move(q));
            alive = false;
          } else if (r == StepResult::kChanged) {
            changed = true;
          }
        }
        if (!alive) break;
      }
    }
    if (alive) out.pieces.push_back(std::move(p));
  }
  std::stable_sort(out.pieces.begin(), out.pieces.end(), [](const LinearPiece& a, const LinearPiece& b) {
    return a.dimension() > b.dimension();
  });
  return out;
}

Verdict intersect_with_variety(const FixedLocus& loc, const VarietyModel& v) {
  std::optional<Verdict> nonempty;
  std::vector<std::string> undecided;
  for (const LinearPiece& p : loc.pieces) {
    Verdict r = piece_verdict(p, v);
    if (r.kind == Verdict::Kind::kNonempty) {
      if (r.witness) return r;
      if (!nonempty) nonempty = r;
    } else if (r.kind == Verdict::Kind::kUndecided) {
      undecided.push_back(r.reason);
    }
  }
  if (nonempty) return *nonempty;
  if (!undecided.empty()) return Verdict::undecided(undecided.front());
  return Verdict::empty();
}

Point normalize_point(Point p) {
  for (auto& f : p) {
    auto it = std::find_if(f.begin(), f.end(), [](const Cyclotomic& c) { return !c.is_zero(); });
    if (it == f.end()) throw DomainError("point has a zero factor");
    Cyclotomic inv = it->inverse();
    for (Cyclotomic& c : f) c *= inv;
  }
  return p;
}

bool point_on_variety(const Point& p, const VarietyModel& v) {
  CVec flat;
  for (const auto& f : p) flat.insert(flat.end(), f.begin(), f.end());
  for (const MPoly& f : v.equations)
    if (!f.eval(flat).is_zero()) return false;
  return true;
}

std::string point_str(const Point& p) {
  std::string out = p.size() > 1 ? "(" : "";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t r = 0; r < p[i].size(); ++r) {
      if (r) out += ":";
      out += p[i][r].str();
    }
    out += "]";
  }
  if (p.size() > 1) out += ")";
  return out;
}

}  // namespace fanocalc::groups
