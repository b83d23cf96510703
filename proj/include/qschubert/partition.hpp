#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qschubert {

/// Raised when a partition does not fit the ambient l x k rectangle.
class BoxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised on malformed partition text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A weakly decreasing sequence of positive integers.  Trailing zeros are
/// stripped on construction, so equality and ordering are plain sequence
/// comparisons.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int size() const;
  [[nodiscard]] bool empty() const { return parts_.empty(); }

  /// Part i (1-based); zero past the end.
  [[nodiscard]] int part(int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  [[nodiscard]] int first() const { return part(1); }

  /// True iff cell (row, col), 1-based, lies in the diagram.
  [[nodiscard]] bool has_cell(int row, int col) const {
    return row >= 1 && col >= 1 && col <= part(row);
  }
  [[nodiscard]] bool contains(const Partition& other) const;
  [[nodiscard]] Partition conjugate() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// The ambient rectangle of Gr(l, C^{l+k}).
struct GrassmannianContext {
  int l = 1;
  int k = 1;

  GrassmannianContext() = default;
  GrassmannianContext(int rows, int cols);

  [[nodiscard]] int n() const { return l + k; }
  bool operator==(const GrassmannianContext&) const = default;
};

/// 1-based (row, column) position in English convention.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

struct FrobeniusCoordinates {
  std::vector<int> alpha;  // arms, strictly decreasing
  std::vector<int> beta;   // legs, strictly decreasing
  bool operator==(const FrobeniusCoordinates&) const = default;
};

// Text form: "3,2,1"; "-" for the empty partition.
[[nodiscard]] std::string to_string(const Partition& p);
[[nodiscard]] Partition parse_partition(std::string_view text);

[[nodiscard]] Partition rectangle(int rows, int cols);

[[nodiscard]] bool fits_in_box(const Partition& p, const GrassmannianContext& ctx);
/// Throws BoxError naming `what` when p does not fit.
void require_in_box(const Partition& p, const GrassmannianContext& ctx,
                    std::string_view what = "partition");

/// (k - p_l, ..., k - p_1).
[[nodiscard]] Partition complement(const Partition& p, const GrassmannianContext& ctx);

/// Cells of lam that are also covered by mu rotated 180 degrees into the
/// lower right corner of the box, in row-major order.
[[nodiscard]] std::vector<Cell> overlap_with_rotation(const Partition& lam, const Partition& mu,
                                                      const GrassmannianContext& ctx);

/// Side of the largest square block inside lam ∩ rotate(mu).
[[nodiscard]] int largest_square_in_overlap(const Partition& lam, const Partition& mu,
                                            const GrassmannianContext& ctx);

/// Durfee square size: largest d with p_d >= d.
[[nodiscard]] int durfee(const Partition& p);

[[nodiscard]] FrobeniusCoordinates to_frobenius(const Partition& p);
[[nodiscard]] Partition from_frobenius(const FrobeniusCoordinates& f);

/// The hook (arm + 1, 1^leg), i.e. Frobenius shape (arm | leg).
[[nodiscard]] Partition hook_class(int arm, int leg);

/// Componentwise minimum / maximum of parts (diagram intersection / union).
[[nodiscard]] Partition intersect(const Partition& a, const Partition& b);
[[nodiscard]] Partition unite(const Partition& a, const Partition& b);

// Enumeration.  Every routine yields each partition once, in lexicographically
// descending order of the part sequence.
void for_each_partition(int max_size, int max_part, int max_length,
                        const std::function<void(const Partition&)>& visit);
[[nodiscard]] std::vector<Partition> partitions_up_to(int max_size, int max_part, int max_length);
[[nodiscard]] std::vector<Partition> partitions_of(int size, int max_part, int max_length);
[[nodiscard]] std::vector<Partition> partitions_in_box(const GrassmannianContext& ctx);

/// C(l+k, l), the number of partitions inside the box.
[[nodiscard]] long long box_partition_count(const GrassmannianContext& ctx);

}  // namespace qschubert

template <>
struct std::hash<qschubert::Partition> {
  std::size_t operator()(const qschubert::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
