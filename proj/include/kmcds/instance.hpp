#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmcds/graph.hpp"

namespace kmcds {

/// Fixed-point length with six fractional decimal digits. All geometry is exact in this unit.
struct Micro {
  static constexpr std::int64_t kScale = 1'000'000;
  std::int64_t units = 0;

  static Micro parse(std::string_view text);
  static Micro from_double(double v);
  double to_double() const { return static_cast<double>(units) / kScale; }
  std::string str() const;

  friend auto operator<=>(const Micro&, const Micro&) = default;
};

using Weight = mpq_class;

/// Accepts decimals ("2", "0.125") and fractions ("1/3").
Weight parse_weight(std::string_view text);
/// Decimal when exactly representable, otherwise "p/q".
std::string format_weight(const Weight& w);
Weight total_weight(const std::vector<Weight>& w, const NodeSet& s);

struct Point {
  Micro x;
  Micro y;
  friend bool operator==(const Point&, const Point&) = default;
};

struct WeightMode {
  enum class Kind { Unit, Uniform };
  Kind kind = Kind::Unit;
  Micro lo{Micro::kScale};
  Micro hi{Micro::kScale};

  static WeightMode unit() { return {}; }
  static WeightMode uniform(Micro lo, Micro hi) { return {Kind::Uniform, lo, hi}; }
  /// "unit" or "uniform:lo:hi".
  static WeightMode parse(std::string_view text);
};

struct UnitDiskInstance {
  std::vector<Point> coords;
  std::vector<Weight> weights;
  Micro radius{Micro::kScale};
  Micro width{0};
  Micro height{0};
  std::optional<std::uint64_t> seed;

  std::size_t size() const { return coords.size(); }
  /// Throws ValidationError on the first broken invariant.
  void validate() const;

  friend bool operator==(const UnitDiskInstance&, const UnitDiskInstance&) = default;
};

/// Edge uv iff squared distance <= radius^2, compared exactly.
Graph build_unit_disk(const UnitDiskInstance& inst);

UnitDiskInstance random_instance(std::size_t n, Micro width, Micro height, Micro radius,
                                 std::uint64_t seed, WeightMode mode = WeightMode::unit());

void write_instance(std::ostream& os, const UnitDiskInstance& inst);
UnitDiskInstance read_instance(std::istream& is);
void write_instance_file(const std::string& path, const UnitDiskInstance& inst);
UnitDiskInstance read_instance_file(const std::string& path);

/// One ascending index per line.
void write_node_set(std::ostream& os, const NodeSet& s);
NodeSet read_node_set(std::istream& is, std::size_t universe);

/// For every node, any six distinct neighbors contain an adjacent pair.
bool verify_kissing(const Graph& g);

}  // namespace kmcds
