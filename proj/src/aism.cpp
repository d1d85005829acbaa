#include "mcdm/aism.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "mcdm/error.hpp"

namespace mcdm {

BooleanMatrix BooleanMatrix::identity(std::size_t order) {
  BooleanMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.set(i, i);
  return m;
}

BooleanMatrix BooleanMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  BooleanMatrix m(rows.size());
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != rows.size()) {
      throw ShapeError(fmt::format("row {} has {} entries; matrix must be {}x{}", x, rows[x].size(),
                                   rows.size(), rows.size()));
    }
    for (std::size_t y = 0; y < rows.size(); ++y) {
      const int v = rows[x][y];
      if (v != 0 && v != 1) throw RangeError(fmt::format("entry ({}, {}) is {}, expected 0 or 1", x, y, v));
      m.set(x, y, v == 1);
    }
  }
  return m;
}

std::size_t BooleanMatrix::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<std::vector<int>> BooleanMatrix::to_rows() const {
  std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y = 0; y < order_; ++y) rows[x][y] = (*this)(x, y) ? 1 : 0;
  }
  return rows;
}

namespace {

void require_same_order(const BooleanMatrix& lhs, const BooleanMatrix& rhs) {
  if (lhs.order() != rhs.order()) {
    throw ShapeError(fmt::format("matrix orders differ: {} vs {}", lhs.order(), rhs.order()));
  }
}

}  // namespace

BooleanMatrix operator|(const BooleanMatrix& lhs, const BooleanMatrix& rhs) {
  require_same_order(lhs, rhs);
  BooleanMatrix out(lhs.order());
  for (std::size_t x = 0; x < lhs.order(); ++x) {
    for (std::size_t y = 0; y < lhs.order(); ++y) out.set(x, y, lhs(x, y) || rhs(x, y));
  }
  return out;
}

BooleanMatrix boolean_product(const BooleanMatrix& lhs, const BooleanMatrix& rhs) {
  require_same_order(lhs, rhs);
  const std::size_t n = lhs.order();
  BooleanMatrix out(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!lhs(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (rhs(y, z)) out.set(x, z);
      }
    }
  }
  return out;
}

BooleanMatrix boolean_difference(const BooleanMatrix& lhs, const BooleanMatrix& rhs) {
  require_same_order(lhs, rhs);
  BooleanMatrix out(lhs.order());
  for (std::size_t x = 0; x < lhs.order(); ++x) {
    for (std::size_t y = 0; y < lhs.order(); ++y) out.set(x, y, lhs(x, y) && !rhs(x, y));
  }
  return out;
}

bool is_reflexive_transitive(const BooleanMatrix& r) {
  for (std::size_t x = 0; x < r.order(); ++x) {
    if (!r(x, x)) return false;
  }
  return boolean_product(r, r) == r;
}

CriteriaProfile::CriteriaProfile(std::vector<std::string> alternatives, std::vector<ProfileColumn> columns,
                                 Grid values)
    : alternatives_(std::move(alternatives)), columns_(std::move(columns)), values_(std::move(values)) {
  if (values_.rows() != alternatives_.size() || values_.cols() != columns_.size()) {
    throw ShapeError(fmt::format("profile values are {}x{}, expected {}x{}", values_.rows(), values_.cols(),
                                 alternatives_.size(), columns_.size()));
  }
  for (std::size_t i = 0; i < values_.rows(); ++i) {
    for (std::size_t j = 0; j < values_.cols(); ++j) {
      if (!std::isfinite(values_(i, j))) {
        throw RangeError(fmt::format("non-finite profile value at ({}, {})", alternatives_[i], columns_[j].name));
      }
    }
  }
}

std::string_view to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::SixMetric: return "sixmetric";
    case ProfileKind::Sdr: return "sdr";
    case ProfileKind::Q: return "q";
  }
  return "?";
}

ProfileKind parse_profile_kind(std::string_view name) {
  if (name == "sixmetric") return ProfileKind::SixMetric;
  if (name == "sdr") return ProfileKind::Sdr;
  if (name == "q") return ProfileKind::Q;
  throw NotFoundError(fmt::format("unknown profile '{}' (expected sixmetric, sdr or q)", name));
}

std::string_view to_string(Extraction mode) { return mode == Extraction::Up ? "up" : "down"; }

CriteriaProfile six_metric_profile(const MetricTable& metrics) {
  const auto& sep = metrics.separation;
  const auto& ur = metrics.utility;
  Grid values(metrics.size(), 6);
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    values(i, 0) = ur.s_plus[i];
    values(i, 1) = sep.d_plus[i];
    values(i, 2) = ur.r_plus[i];
    values(i, 3) = ur.s_minus[i];
    values(i, 4) = sep.d_minus[i];
    values(i, 5) = ur.r_minus[i];
  }
  return CriteriaProfile(metrics.alternatives,
                         {{"s_plus", Preference::SmallerBetter},
                          {"d_plus", Preference::SmallerBetter},
                          {"r_plus", Preference::SmallerBetter},
                          {"s_minus", Preference::LargerBetter},
                          {"d_minus", Preference::LargerBetter},
                          {"r_minus", Preference::LargerBetter}},
                         std::move(values));
}

CriteriaProfile sdr_profile(const SdrTable& sdr) {
  Grid values(sdr.size(), 2);
  for (std::size_t i = 0; i < sdr.size(); ++i) {
    values(i, 0) = sdr.plus[i];
    values(i, 1) = sdr.minus[i];
  }
  return CriteriaProfile(sdr.alternatives,
                         {{"sdr_plus", Preference::SmallerBetter}, {"sdr_minus", Preference::LargerBetter}},
                         std::move(values));
}

CriteriaProfile q_profile(const FusionTable& fusion) {
  Grid values(fusion.size(), 1);
  for (std::size_t i = 0; i < fusion.size(); ++i) values(i, 0) = fusion.q[i];
  return CriteriaProfile(fusion.alternatives, {{"q", Preference::SmallerBetter}}, std::move(values));
}

BooleanMatrix dominance_adjacency(const CriteriaProfile& profile, double epsilon) {
  if (!(epsilon >= 0.0)) throw RangeError(fmt::format("dominance epsilon {} must be nonnegative", epsilon));
  const std::size_t n = profile.size();
  const auto& v = profile.values();
  const auto& cols = profile.columns();
  BooleanMatrix a(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      bool y_dominates = true;
      for (std::size_t c = 0; c < cols.size() && y_dominates; ++c) {
        y_dominates = cols[c].preference == Preference::SmallerBetter ? v(y, c) <= v(x, c) + epsilon
                                                                      : v(y, c) >= v(x, c) - epsilon;
      }
      a.set(x, y, y_dominates);
    }
  }
  return a;
}

BooleanMatrix multiplicative_adjacency(const BooleanMatrix& a) { return a | BooleanMatrix::identity(a.order()); }

BooleanMatrix reachability(const BooleanMatrix& a) {
  BooleanMatrix power = multiplicative_adjacency(a);
  // squaring doubles the covered path length, so order+1 rounds is a hard bound
  for (std::size_t round = 0; round <= a.order() + 1; ++round) {
    BooleanMatrix next = boolean_product(power, power);
    if (next == power) return power;
    power = std::move(next);
  }
  throw InternalError("Boolean closure did not reach a fixed point");
}

Condensation condense(const BooleanMatrix& r) {
  if (!is_reflexive_transitive(r)) throw RangeError("condense expects a reflexive-transitive closure");
  const std::size_t n = r.order();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  Condensation out;
  out.component_of.assign(n, kUnassigned);
  for (std::size_t x = 0; x < n; ++x) {
    if (out.component_of[x] != kUnassigned) continue;
    const std::size_t group = out.members.size();
    out.members.emplace_back();
    for (std::size_t y = x; y < n; ++y) {
      if (r(x, y) && r(y, x)) {
        out.component_of[y] = group;
        out.members.back().push_back(y);
      }
    }
  }
  out.reduced = BooleanMatrix(out.groups());
  for (std::size_t g = 0; g < out.groups(); ++g) {
    for (std::size_t h = 0; h < out.groups(); ++h) {
      out.reduced.set(g, h, r(out.members[g].front(), out.members[h].front()));
    }
  }
  return out;
}

BooleanMatrix skeleton(const BooleanMatrix& reduced_closure) {
  const std::size_t n = reduced_closure.order();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (reduced_closure(x, y) && reduced_closure(y, x)) {
        throw CycleError(fmt::format("nodes {} and {} reach each other; condense before reducing", x, y));
      }
    }
  }
  const BooleanMatrix identity = BooleanMatrix::identity(n);
  const BooleanMatrix strict = boolean_difference(reduced_closure, identity);
  const BooleanMatrix two_step = boolean_product(strict, strict);
  return boolean_difference(boolean_difference(reduced_closure, two_step), identity);
}

BooleanMatrix expand_cycles(const BooleanMatrix& skel, const Condensation& condensation) {
  if (skel.order() != condensation.groups()) {
    throw ShapeError(fmt::format("skeleton order {} does not match {} merged groups", skel.order(),
                                 condensation.groups()));
  }
  BooleanMatrix out(condensation.component_of.size());
  for (std::size_t g = 0; g < skel.order(); ++g) {
    for (std::size_t h = 0; h < skel.order(); ++h) {
      if (g != h && skel(g, h)) out.set(condensation.members[g].front(), condensation.members[h].front());
    }
  }
  for (const auto& ring : condensation.members) {
    if (ring.size() < 2) continue;
    for (std::size_t i = 0; i < ring.size(); ++i) out.set(ring[i], ring[(i + 1) % ring.size()]);
  }
  return out;
}

Levels extract_levels(const BooleanMatrix& r, Extraction mode) {
  const std::size_t n = r.order();
  std::vector<bool> remaining(n, true);
  std::size_t left = n;
  Levels levels;
  while (left > 0) {
    std::vector<std::size_t> level;
    for (std::size_t e = 0; e < n; ++e) {
      if (!remaining[e]) continue;
      // reachable set R(e) and antecedent set Q(e) within the remaining nodes
      bool selected = true;
      for (std::size_t j = 0; j < n && selected; ++j) {
        if (!remaining[j]) continue;
        const bool reach = r(e, j);
        const bool ante = r(j, e);
        selected = mode == Extraction::Up ? (!reach || ante) : (!ante || reach);
      }
      if (selected) level.push_back(e);
    }
    if (level.empty()) throw InternalError("level extraction made no progress");
    for (std::size_t e : level) remaining[e] = false;
    left -= level.size();
    levels.push_back(std::move(level));
  }
  return levels;
}

std::string HierarchyResult::group_label(std::size_t group) const {
  std::string out;
  for (std::size_t node : condensation.members.at(group)) {
    if (!out.empty()) out += ", ";
    out += labels.at(node);
  }
  return out;
}

namespace {

Levels lift_levels(const Levels& group_levels, const Condensation& c) {
  Levels out;
  for (const auto& level : group_levels) {
    std::vector<std::size_t> nodes;
    for (std::size_t g : level) nodes.insert(nodes.end(), c.members[g].begin(), c.members[g].end());
    std::sort(nodes.begin(), nodes.end());
    out.push_back(std::move(nodes));
  }
  return out;
}

}  // namespace

HierarchyResult build_hierarchy(const BooleanMatrix& closure, std::vector<std::string> labels) {
  if (labels.size() != closure.order()) {
    throw ShapeError(fmt::format("{} labels for a matrix of order {}", labels.size(), closure.order()));
  }
  HierarchyResult h;
  h.labels = std::move(labels);
  h.condensation = condense(closure);
  h.skeleton = skeleton(h.condensation.reduced);
  h.general_skeleton = expand_cycles(h.skeleton, h.condensation);
  h.up_levels = lift_levels(extract_levels(h.condensation.reduced, Extraction::Up), h.condensation);
  h.down_levels = lift_levels(extract_levels(h.condensation.reduced, Extraction::Down), h.condensation);
  return h;
}

AismPass run_aism(const CriteriaProfile& profile, double epsilon) {
  AismPass pass;
  pass.adjacency = dominance_adjacency(profile, epsilon);
  pass.multiplicative = multiplicative_adjacency(pass.adjacency);
  pass.reachable = reachability(pass.adjacency);
  pass.hierarchy = build_hierarchy(pass.reachable, profile.alternatives());
  return pass;
}

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string to_dot(const HierarchyResult& h, Extraction mode, std::string_view graph_name) {
  const auto& levels = h.levels(mode);
  std::string out = fmt::format("digraph {} {{\n", dot_quote(graph_name));
  out += "  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < h.labels.size(); ++i) {
    out += fmt::format("  n{} [label={}];\n", i, dot_quote(h.labels[i]));
  }
  for (std::size_t g = 0; g < h.condensation.groups(); ++g) {
    const auto& members = h.condensation.members[g];
    if (members.size() < 2) continue;
    out += fmt::format("  subgraph cluster_g{} {{\n    label={};\n   ", g, dot_quote(h.group_label(g)));
    for (std::size_t node : members) out += fmt::format(" n{};", node);
    out += "\n  }\n";
  }
  for (std::size_t l = 0; l < levels.size(); ++l) {
    out += fmt::format("  {{ rank=same; /* level {} */", l + 1);
    for (std::size_t node : levels[l]) out += fmt::format(" n{};", node);
    out += " }\n";
  }
  const auto& edges = h.general_skeleton;
  for (std::size_t x = 0; x < edges.order(); ++x) {
    for (std::size_t y = 0; y < edges.order(); ++y) {
      if (edges(x, y)) out += fmt::format("  n{} -> n{};\n", x, y);
    }
  }
  out += "}\n";
  return out;
}

std::string matrix_csv(const BooleanMatrix& m) {
  std::string out;
  for (std::size_t x = 0; x < m.order(); ++x) {
    for (std::size_t y = 0; y < m.order(); ++y) {
      if (y > 0) out.push_back(',');
      out.push_back(m(x, y) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

std::string format_levels(const HierarchyResult& h, Extraction mode) {
  Levels levels = h.levels(mode);
  if (mode == Extraction::Down) std::reverse(levels.begin(), levels.end());
  std::string out;
  for (const auto& level : levels) {
    if (!out.empty()) out += " > ";
    out += "{";
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (i > 0) out += ", ";
      out += h.labels[level[i]];
    }
    out += "}";
  }
  return out;
}

}  // namespace mcdm
