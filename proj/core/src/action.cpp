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

#include "fanocalc/groups/action.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "fanocalc/errors.hpp"

namespace fanocalc::groups {

std::size_t MultiProjectiveSpace::total_coords() const {
  std::size_t t = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) t += coords(i);
  return t;
}

std::size_t MultiProjectiveSpace::offset(std::size_t factor) const {
  std::size_t t = 0;
  for (std::size_t i = 0; i < factor; ++i) t += coords(i);
  return t;
}

int MultiProjectiveSpace::dimension() const { return std::accumulate(dims.begin(), dims.end(), 0); }

void MultiProjectiveSpace::validate() const {
  if (dims.empty()) throw ValidationError("multiprojective space has no factors");
  for (int d : dims)
    if (d < 1) throw ValidationError("projective factor dimension must be positive");
}

MonomialMatrix MonomialMatrix::identity(std::size_t n) {
  MonomialMatrix m;
  for (std::size_t i = 0; i < n; ++i) {
    m.perm.push_back(static_cast<int>(i));
    m.diag.push_back(Cyclotomic(1));
  }
  return m;
}

std::vector<Cyclotomic> MonomialMatrix::apply(const std::vector<Cyclotomic>& x) const {
  std::vector<Cyclotomic> r(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) r[i] = diag[i] * x[perm[i]];
  return r;
}

Matrix<Cyclotomic> MonomialMatrix::dense() const {
  Matrix<Cyclotomic> m(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(i, perm[i]) = diag[i];
  return m;
}

MonomialMatrix MonomialMatrix::compose(const MonomialMatrix& o) const {
  MonomialMatrix r;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    r.perm.push_back(o.perm[perm[i]]);
    r.diag.push_back(diag[i] * o.diag[perm[i]]);
  }
  return r;
}

GroupElement GroupElement::identity(const MultiProjectiveSpace& space) {
  GroupElement g;
  for (std::size_t j = 0; j < space.factors(); ++j) {
    g.source.push_back(static_cast<int>(j));
    g.maps.push_back(MonomialMatrix::identity(space.coords(j)));
  }
  return g;
}

void GroupElement::validate(const MultiProjectiveSpace& space) const {
  const std::size_t k = space.factors();
  if (source.size() != k || maps.size() != k) throw ValidationError("group element has wrong number of factors");
  std::vector<bool> hit(k, false);
  for (std::size_t j = 0; j < k; ++j) {
    int s = source[j];
    if (s < 0 || static_cast<std::size_t>(s) >= k || hit[s]) throw ValidationError("factor permutation is invalid");
    hit[s] = true;
    if (space.dims[s] != space.dims[j]) throw ValidationError("factor permutation mixes factors of different dimension");
    const MonomialMatrix& m = maps[j];
    if (m.perm.size() != space.coords(j) || m.diag.size() != space.coords(j)) {
      throw ValidationError("monomial matrix has wrong size");
    }
    std::vector<bool> seen(m.perm.size(), false);
    for (std::size_t r = 0; r < m.perm.size(); ++r) {
      int p = m.perm[r];
      if (p < 0 || static_cast<std::size_t>(p) >= m.perm.size() || seen[p]) {
        throw ValidationError("coordinate permutation is invalid");
      }
      seen[p] = true;
      if (m.diag[r].is_zero()) throw ValidationError("monomial matrix is singular");
    }
  }
}

Point GroupElement::apply(const Point& p) const {
  Point q(maps.size());
  for (std::size_t j = 0; j < maps.size(); ++j) q[j] = maps[j].apply(p[source[j]]);
  return q;
}

GroupElement GroupElement::compose(const GroupElement& o) const {
  GroupElement c;
  for (std::size_t j = 0; j < maps.size(); ++j) {
    c.source.push_back(o.source[source[j]]);
    c.maps.push_back(maps[j].compose(o.maps[source[j]]));
  }
  return c;
}

GroupElement GroupElement::normalized() const {
  GroupElement g = *this;
  for (MonomialMatrix& m : g.maps) {
    Cyclotomic inv = m.diag[0].inverse();
    for (Cyclotomic& d : m.diag) d *= inv;
  }
  return g;
}

bool GroupElement::projectively_equal(const GroupElement& o) const { return normalized() == o.normalized(); }

bool GroupElement::is_projective_identity() const {
  for (std::size_t j = 0; j < source.size(); ++j) {
    if (source[j] != static_cast<int>(j)) return false;
    for (std::size_t r = 0; r < maps[j].perm.size(); ++r) {
      if (maps[j].perm[r] != static_cast<int>(r) || maps[j].diag[r] != maps[j].diag[0]) return false;
    }
  }
  return true;
}

GroupElement GroupElement::pow(unsigned k) const {
  GroupElement r;
  r.source.resize(source.size());
  std::iota(r.source.begin(), r.source.end(), 0);
  for (const MonomialMatrix& m : maps) r.maps.push_back(MonomialMatrix::identity(m.size()));
  for (unsigned i = 0; i < k; ++i) r = compose(r).normalized();
  return r;
}

MPoly GroupElement::pullback(const MPoly& f, const MultiProjectiveSpace& space) const {
  const std::size_t n = space.total_coords();
  if (f.nvars() != n) throw DimensionMismatch("polynomial does not live on this space");
  // Variable (j, r) becomes diag_j[r] times variable (source[j], perm_j[r]).
  std::vector<std::size_t> target(n);
  std::vector<Cyclotomic> scale(n);
  for (std::size_t j = 0; j < maps.size(); ++j) {
    for (std::size_t r = 0; r < maps[j].size(); ++r) {
      target[space.offset(j) + r] = space.offset(source[j]) + maps[j].perm[r];
      scale[space.offset(j) + r] = maps[j].diag[r];
    }
  }
  MPoly out(n);
  for (const auto& [e, c] : f.terms()) {
    Exponents ne(n, 0);
    Cyclotomic coef = c;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      ne[target[i]] += e[i];
      coef *= scale[i].pow(e[i]);
    }
    out.add_term(ne, coef);
  }
  return out;
}

std::string GroupElement::str(const MultiProjectiveSpace& space, const std::vector<std::string>& names) const {
  std::string out = maps.size() > 1 ? "(" : "";
  const std::size_t n = space.total_coords();
  for (std::size_t j = 0; j < maps.size(); ++j) {
    if (j) out += ",";
    out += "[";
    for (std::size_t r = 0; r < maps[j].size(); ++r) {
      if (r) out += ":";
      MPoly coord = MPoly::variable(n, space.offset(source[j]) + maps[j].perm[r]) * maps[j].diag[r];
      out += coord.str(names);
    }
    out += "]";
  }
  if (maps.size() > 1) out += ")";
  return out;
}

bool GroupElement::operator<(const GroupElement& o) const {
  if (source != o.source) return source < o.source;
  for (std::size_t j = 0; j < maps.size(); ++j) {
    if (maps[j].perm != o.maps[j].perm) return maps[j].perm < o.maps[j].perm;
    for (std::size_t r = 0; r < maps[j].diag.size(); ++r) {
      if (maps[j].diag[r] < o.maps[j].diag[r]) return true;
      if (o.maps[j].diag[r] < maps[j].diag[r]) return false;
    }
  }
  return false;
}

int GroupElement::conductor() const {
  int n = 1;
  for (const MonomialMatrix& m : maps)
    for (const Cyclotomic& d : m.diag) n = std::lcm(n, d.conductor());
  return n;
}

std::vector<GroupElement> enumerate_group(const MultiProjectiveSpace& space, const std::vector<GroupElement>& gens,
                                          std::size_t limit) {
  std::set<GroupElement> seen;
  std::queue<GroupElement> todo;
  GroupElement id = GroupElement::identity(space);
  seen.insert(id);
  todo.push(id);
  while (!todo.empty()) {
    GroupElement e = todo.front();
    todo.pop();
    for (const GroupElement& g : gens) {
      GroupElement h = g.compose(e).normalized();
      if (seen.insert(h).second) {
        if (seen.size() > limit) throw UnsupportedAction("group order exceeds " + std::to_string(limit));
        todo.push(h);
      }
    }
  }
  return std::vector<GroupElement>(seen.begin(), seen.end());
}

unsigned element_order(const GroupElement& g, unsigned limit) {
  GroupElement p = g.normalized();
  for (unsigned k = 1; k <= limit; ++k) {
    if (p.is_projective_identity()) return k;
    p = g.compose(p).normalized();
  }
  throw UnsupportedAction("element order exceeds " + std::to_string(limit));
}

std::string structure_str(const std::vector<int>& f) {
  if (f.empty()) return "trivial";
  std::string out;
  std::size_t i = 0;
  while (i < f.size()) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    if (!out.empty()) out += " x ";
    out += "(Z/" + std::to_string(f[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

GroupSummary validate_action(const FiniteAbelianAction& act) {
  act.space.validate();
  for (const GroupElement& g : act.generators) g.validate(act.space);
  for (std::size_t a = 0; a < act.generators.size(); ++a)
    for (std::size_t b = a + 1; b < act.generators.size(); ++b) {
      const GroupElement &g = act.generators[a], &h = act.generators[b];
      if (!g.compose(h).projectively_equal(h.compose(g))) {
        throw ValidationError("generators " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                              " do not commute projectively");
      }
    }
  std::vector<GroupElement> elems = enumerate_group(act.space, act.generators);
  std::size_t claimed = 1;
  int exponent = 1;
  for (int n : act.claimed_structure) {
    if (n < 2) throw ValidationError("invariant factors must be at least 2");
    claimed *= static_cast<std::size_t>(n);
    exponent = std::lcm(exponent, n);
  }
  if (elems.size() != claimed) {
    throw ValidationError("group has order " + std::to_string(elems.size()) + ", claimed " +
                          structure_str(act.claimed_structure) + " of order " + std::to_string(claimed));
  }
  std::vector<unsigned> orders;
  for (const GroupElement& g : elems) orders.push_back(element_order(g));
  for (int d = 1; d <= exponent; ++d) {
    if (exponent % d != 0) continue;
    std::size_t expect = 1;
    for (int n : act.claimed_structure) expect *= static_cast<std::size_t>(std::gcd(d, n));
    std::size_t got = std::count_if(orders.begin(), orders.end(), [d](unsigned o) { return d % o == 0; });
    if (got != expect) {
      throw ValidationError("group is not isomorphic to " + structure_str(act.claimed_structure) + " (" +
                            std::to_string(got) + " elements of order dividing " + std::to_string(d) + ")");
    }
  }
  return {elems.size(), std::move(elems)};
}

std::vector<std::vector<int>> VarietyModel::grading() const {
  if (!weights.empty()) return weights;
  std::vector<std::vector<int>> w;
  for (std::size_t j = 0; j < space.factors(); ++j)
    for (std::size_t r = 0; r < space.coords(j); ++r) {
      std::vector<int> e(space.factors(), 0);
      e[j] = 1;
      w.push_back(e);
    }
  return w;
}

std::vector<std::vector<int>> VarietyModel::multidegrees() const {
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> w = grading();
  for (const MPoly& f : equations) out.push_back(f.homogeneous_degree(w));
  return out;
}

void VarietyModel::validate() const {
  space.validate();
  const std::size_t n = space.total_coords();
  if (variables.size() != n) throw ValidationError("variable list does not match the space");
  if (!weights.empty() && weights.size() != n) throw ValidationError("grading does not match the variable list");
  for (const MPoly& f : equations) {
    if (f.nvars() != n) throw ValidationError("equation does not live on the space");
    if (f.is_zero()) throw ValidationError("zero equation");
  }
  multidegrees();
}

std::vector<Cyclotomic> InvarianceReport::characters() const {
  std::vector<Cyclotomic> out;
  for (const InvarianceRow& r : rows)
    if (std::find(out.begin(), out.end(), r.scalar) == out.end()) out.push_back(r.scalar);
  return out;
}

InvarianceReport check_invariance(const FiniteAbelianAction& act, const VarietyModel& v) {
  if (!(act.space == v.space)) throw DimensionMismatch("action and variety live on different spaces");
  InvarianceReport rep;
  for (std::size_t gi = 0; gi < act.generators.size(); ++gi) {
    const GroupElement& g = act.generators[gi];
    for (std::size_t ei = 0; ei < v.equations.size(); ++ei) {
      MPoly img = g.pullback(v.equations[ei], v.space);
      const auto& [lead_e, lead_c] = *img.terms().begin();
      bool found = false;
      for (std::size_t fi = 0; fi < v.equations.size() && !found; ++fi) {
        const MPoly& f = v.equations[fi];
        auto it = f.terms().find(lead_e);
        if (it == f.terms().end() || f.terms().size() != img.terms().size()) continue;
        Cyclotomic c = lead_c / it->second;
        if (f * c == img) {
          rep.rows.push_back({gi, ei, fi, c});
          found = true;
        }
      }
      if (!found) {
        throw NotInvariant("generator " + std::to_string(gi + 1) + " maps equation " + std::to_string(ei + 1) + " (" +
                           v.equations[ei].str(v.variables) + ") to " + img.str(v.variables) +
                           ", which is not proportional to any equation of the system");
      }
    }
  }
  return rep;
}

std::vector<std::string> default_variable_names(const MultiProjectiveSpace& space) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < space.factors(); ++j)
    for (std::size_t r = 0; r < space.coords(j); ++r)
      out.push_back("v" + std::to_string(j + 1) + "_" + std::to_string(r + 1));
  return out;
}

GroupElement parse_generator(const std::string& text, const MultiProjectiveSpace& space,
                             const std::vector<std::string>& names) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<std::string> blocks;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '[') throw ParseError("generator '" + text + "': expected '['", static_cast<long>(pos));
    std::size_t close = s.find(']', pos);
    if (close == std::string::npos) throw ParseError("generator '" + text + "': missing ']'", static_cast<long>(pos));
    blocks.push_back(s.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != ',') throw ParseError("generator '" + text + "': expected ','", static_cast<long>(pos));
      ++pos;
    }
  }
  if (blocks.size() != space.factors()) throw ParseError("generator '" + text + "': wrong number of factors");
  const std::size_t n = space.total_coords();
  GroupElement g;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    std::vector<std::string> coords;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= blocks[j].size(); ++k) {
      if (k == blocks[j].size() || blocks[j][k] == ':') {
        coords.push_back(blocks[j].substr(start, k - start));
        start = k + 1;
      }
    }
    if (coords.size() != space.coords(j)) throw ParseError("generator '" + text + "': wrong number of coordinates");
    MonomialMatrix m;
    int src = -1;
    for (const std::string& c : coords) {
      MPoly p = parse_mpoly(c, names);
      if (p.terms().size() != 1) throw ParseError("generator '" + text + "': coordinate '" + c + "' is not monomial");
      const auto& [e, coef] = *p.terms().begin();
      int var = -1;
      for (std::size_t i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        if (e[i] != 1 || var >= 0) throw ParseError("generator '" + text + "': coordinate '" + c + "' is not linear");
        var = static_cast<int>(i);
      }
      if (var < 0) throw ParseError("generator '" + text + "': coordinate '" + c + "' has no variable");
      int factor = 0;
      while (space.offset(factor + 1) <= static_cast<std::size_t>(var)) ++factor;
      if (src >= 0 && src != factor) throw ParseError("generator '" + text + "': factor mixes source factors");
      src = factor;
      m.perm.push_back(var - static_cast<int>(space.offset(factor)));
      m.diag.push_back(coef);
    }
    g.source.push_back(src);
    g.maps.push_back(m);
  }
  try {
    g.validate(space);
  } catch (const ValidationError& e) {
    throw ParseError("generator '" + text + "': " + e.what());
  }
  return g;
}

}  // namespace fanocalc::groups
