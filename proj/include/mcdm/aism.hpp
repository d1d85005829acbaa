#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcdm/fusion.hpp"
#include "mcdm/grid.hpp"

namespace mcdm {

/// Square 0/1 relation matrix; entry (x, y) set means an edge x -> y.
class BooleanMatrix {
 public:
  BooleanMatrix() = default;
  explicit BooleanMatrix(std::size_t order) : order_(order), bits_(order * order, 0) {}

  static BooleanMatrix identity(std::size_t order);
  /// Throws ShapeError for non-square input and RangeError for entries other than 0/1.
  static BooleanMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t order() const noexcept { return order_; }
  bool operator()(std::size_t x, std::size_t y) const { return bits_[x * order_ + y] != 0; }
  void set(std::size_t x, std::size_t y, bool value = true) { bits_[x * order_ + y] = value ? 1 : 0; }

  std::size_t count() const noexcept;
  std::vector<std::vector<int>> to_rows() const;

  bool operator==(const BooleanMatrix&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::uint8_t> bits_;
};

BooleanMatrix operator|(const BooleanMatrix& lhs, const BooleanMatrix& rhs);
/// Boolean matrix product: (AB)[x][z] = OR_y A[x][y] AND B[y][z].
BooleanMatrix boolean_product(const BooleanMatrix& lhs, const BooleanMatrix& rhs);
/// Entrywise lhs AND NOT rhs (Boolean subtraction, clamped at 0).
BooleanMatrix boolean_difference(const BooleanMatrix& lhs, const BooleanMatrix& rhs);

bool is_reflexive_transitive(const BooleanMatrix& r);

enum class Preference { SmallerBetter, LargerBetter };

struct ProfileColumn {
  std::string name;
  Preference preference = Preference::SmallerBetter;
};

/// Alternatives scored on metric columns, each with its own orientation.
class CriteriaProfile {
 public:
  CriteriaProfile(std::vector<std::string> alternatives, std::vector<ProfileColumn> columns, Grid values);

  const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
  const std::vector<ProfileColumn>& columns() const noexcept { return columns_; }
  const Grid& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return alternatives_.size(); }

 private:
  std::vector<std::string> alternatives_;
  std::vector<ProfileColumn> columns_;
  Grid values_;
};

enum class ProfileKind { SixMetric, Sdr, Q };

std::string_view to_string(ProfileKind kind);
ProfileKind parse_profile_kind(std::string_view name);

/// S+, D+, R+ (smaller better) and S-, D-, R- (larger better).
CriteriaProfile six_metric_profile(const MetricTable& metrics);
/// SDR+ (smaller better) and SDR- (larger better).
CriteriaProfile sdr_profile(const SdrTable& sdr);
/// The compromise score q alone (smaller better).
CriteriaProfile q_profile(const FusionTable& fusion);

/// A[x][y] = 1 iff x != y and y is at least as good as x on every column.
/// `epsilon` widens each comparison by an absolute slack.
BooleanMatrix dominance_adjacency(const CriteriaProfile& profile, double epsilon = 0.0);

/// B = A | I.
BooleanMatrix multiplicative_adjacency(const BooleanMatrix& a);

/// Reflexive-transitive closure: powers of A | I iterated to their fixed point.
BooleanMatrix reachability(const BooleanMatrix& a);

/// Mutual-reachability classes of a closure merged to single nodes.
struct Condensation {
  BooleanMatrix reduced;                         // closure over merged nodes (a partial order)
  std::vector<std::size_t> component_of;         // node -> group
  std::vector<std::vector<std::size_t>> members; // group -> nodes, ascending

  std::size_t groups() const noexcept { return members.size(); }
};

/// Groups are numbered by their first member. Throws RangeError if `r` is not
/// a reflexive-transitive closure.
Condensation condense(const BooleanMatrix& r);

/// Transitive reduction S' = R' - (R' - I)^2 - I of an acyclic closure.
/// Throws CycleError when two distinct nodes reach each other.
BooleanMatrix skeleton(const BooleanMatrix& reduced_closure);

/// Lifts a skeleton over merged nodes back to the original nodes. Each group
/// of g >= 2 members becomes a directed ring in member order; edges between
/// groups attach to each group's first member.
BooleanMatrix expand_cycles(const BooleanMatrix& skeleton, const Condensation& condensation);

enum class Extraction { Up, Down };

std::string_view to_string(Extraction mode);

using Levels = std::vector<std::vector<std::size_t>>;

/// Level peeling on a reachability matrix. UP removes every e whose reachable
/// set lies within its antecedent set (results first, level 1 = top); DOWN
/// removes every e whose antecedent set lies within its reachable set (causes
/// first, level 1 = bottom). Sets are restricted to nodes not yet removed.
Levels extract_levels(const BooleanMatrix& r, Extraction mode);

struct HierarchyResult {
  std::vector<std::string> labels;  // original node labels
  Levels up_levels;                 // original node indices, level 1 = top
  Levels down_levels;               // original node indices, level 1 = bottom
  Condensation condensation;
  BooleanMatrix skeleton;           // over merged nodes
  BooleanMatrix general_skeleton;   // skeleton with cycles expanded, over original nodes

  const Levels& levels(Extraction mode) const { return mode == Extraction::Up ? up_levels : down_levels; }
  /// Comma-joined member labels of a merged group.
  std::string group_label(std::size_t group) const;
};

HierarchyResult build_hierarchy(const BooleanMatrix& closure, std::vector<std::string> labels);

/// All matrices of one adversarial pass over a profile.
struct AismPass {
  BooleanMatrix adjacency;
  BooleanMatrix multiplicative;
  BooleanMatrix reachable;
  HierarchyResult hierarchy;
};

AismPass run_aism(const CriteriaProfile& profile, double epsilon = 0.0);

/// Deterministic Graphviz digraph: one rank=same group per level, edges
/// dominated -> dominating drawn upward, merged groups boxed in a cluster.
std::string to_dot(const HierarchyResult& h, Extraction mode, std::string_view graph_name = "aism");

/// Bare 0/1 rows, comma separated.
std::string matrix_csv(const BooleanMatrix& m);

/// "{a, b} > {c}" listing, best level first.
std::string format_levels(const HierarchyResult& h, Extraction mode);

}  // namespace mcdm
