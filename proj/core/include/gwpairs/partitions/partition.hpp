#pragma once

#include "gwpairs/algebra/gaussian_rational.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace gwpairs {

/// Integer partition with parts in weakly decreasing order; the empty
/// partition is a valid value of size and length zero.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  /// Sorts the parts; throws on a nonpositive part.
  explicit Partition(std::vector<int> parts);

  /// Parses "3,1,1"; the empty string (or "0") is the empty partition.
  static Partition parse(const std::string& text);
  /// (1^k).
  static Partition ones(int k);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](size_t i) const { return parts_[i]; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Number of parts strictly greater than 1.
  int length_plus() const;
  /// Number of parts equal to k.
  int multiplicity(int k) const;
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Partition with every part 1 removed.
  Partition without_ones() const;
  /// Union of the multisets of parts.
  Partition operator+(const Partition& o) const;
  /// Sub-partition formed by the parts at the given (0-based) positions.
  Partition select(const std::vector<int>& positions) const;
  Partition conjugate() const;
  /// Young diagram containment mu subset of this.
  bool contains(const Partition& mu) const;

  std::string to_string() const;
  /// "(3,1,1)" or "()" for display.
  std::string to_display() const { return "(" + to_string() + ")"; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Product of factorials of the part multiplicities.
mpz_class aut_order(const Partition& p);
/// Centralizer order: aut_order times the product of the parts.
mpz_class z_factor(const Partition& p);

/// All partitions of n, parts in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);
/// All partitions of sizes 1..d, by size and reverse lexicographic within a size.
std::vector<Partition> partitions_up_to(int d);
/// Number of partitions of n.
long partition_count(int n);

enum class Ordering { D, S, Dstar, SIM };
enum class Relation { greater, equal_rank, less, equivalent, not_equivalent };

/// The statistic behind an ordering: |.|-l(.) for D, l_+ for S, |.|+l(.) for Dstar.
int ordering_rank(const Partition& p, Ordering o);
Relation compare(const Partition& a, const Partition& b, Ordering o);
/// Strict relation a > b in the preorder o (D, S or Dstar).
bool strictly_greater(const Partition& a, const Partition& b, Ordering o);
const char* to_string(Relation r);
Ordering parse_ordering(const std::string& name);

/// Members of 1-free gamma's equivalence class inside the partitions of
/// sizes 1..d: gamma + (1^k) for k = 0..d-|gamma| (k >= 1 when gamma is empty).
std::vector<Partition> sim_class(const Partition& gamma, int d);

/// Adds N to the largest part; the empty partition maps to (N).
Partition eta_plus(const Partition& eta, int N);
/// Removes the largest part.
Partition eta_minus(const Partition& eta);

/// Set partition of {0, ..., n-1}; blocks ordered by their least element,
/// elements increasing within a block.
struct SetPartition {
  std::vector<std::vector<int>> blocks;
  std::string to_string() const;  // 1-based, e.g. "{1,3}{2}"
  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// All set partitions of an n-element set in restricted-growth-string order.
std::vector<SetPartition> set_partitions(int n);
/// Bell number B_n.
mpz_class bell_number(int n);

}  // namespace gwpairs
