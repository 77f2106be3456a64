#pragma once

#include <cstddef>
#include <vector>

namespace linebcast {

// Path-loss exponent. Transmitting at radius r costs r^alpha energy units
// (up to the constant factor common to all assignments).
class PathLoss {
 public:
  explicit PathLoss(double alpha);

  double alpha() const noexcept { return alpha_; }
  bool is_integral() const noexcept { return integral_; }

  // r^alpha. Integral exponents use repeated multiplication so small cases
  // (alpha = 2, integer coordinates) stay exact.
  double pow(double r) const noexcept;

 private:
  double alpha_;
  bool integral_;
  int int_alpha_;
};

// Nodes on a line: strictly increasing positions plus a source index.
// Indices are 0-based everywhere, including file formats and CLI output.
class LinearNetwork {
 public:
  LinearNetwork(std::vector<double> positions, std::size_t source);

  std::size_t size() const noexcept { return positions_.size(); }
  std::size_t source() const noexcept { return source_; }
  const std::vector<double>& positions() const noexcept { return positions_; }
  double position(std::size_t i) const noexcept { return positions_[i]; }
  double span() const noexcept { return positions_.back() - positions_.front(); }
  bool source_is_edge() const noexcept { return source_ == 0 || source_ + 1 == size(); }

  // |x_i - x_j|; throws std::out_of_range on bad indices.
  double distance(std::size_t i, std::size_t j) const;

  // Gap between adjacent nodes i and i+1 (unchecked).
  double gap(std::size_t i) const noexcept { return positions_[i + 1] - positions_[i]; }

 private:
  std::vector<double> positions_;
  std::size_t source_;
};

// One transmission radius per node; radius 0 means the node stays silent.
struct RangeAssignment {
  std::vector<double> ranges;

  RangeAssignment() = default;
  explicit RangeAssignment(std::vector<double> r);

  std::size_t size() const noexcept { return ranges.size(); }
};

// Minimum positive range per node: the gap to the adjacent neighbor on the
// side away from the source. The source carries one value per side; end
// nodes have no outward duty and get 0. m[source] is a placeholder (0).
struct SideMinima {
  std::vector<double> m;
  double source_left = 0.0;
  double source_right = 0.0;

  double max_duty() const noexcept {
    return source_left > source_right ? source_left : source_right;
  }
};

SideMinima min_positive_ranges(const LinearNetwork& net);

double assignment_cost(const RangeAssignment& r, PathLoss a);

// Fixed point of "node j is informed once some informed i has d(i,j) <= R(i)".
// rounds counts the sweeps that informed at least one new node. Coverage
// comparisons are exact <= on the stored doubles, no epsilon.
struct CoverageResult {
  std::vector<bool> informed;
  int rounds = 0;

  bool all_informed() const noexcept;
};

CoverageResult validate_broadcast(const LinearNetwork& net, const RangeAssignment& r);

// Chain assignment for a source sitting at either end of the line: every node
// relays to its neighbor away from the source, the far end stays silent.
// This is the minimum-cost solution for edge sources.
RangeAssignment edge_source_assignment(const LinearNetwork& net);

}  // namespace linebcast
