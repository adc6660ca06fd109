#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace knotalt {

enum class Sign : int { Negative = -1, Positive = 1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

std::string_view to_string(Sign s) noexcept;

// Malformed or unsupported user input. Reported per diagram.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SplitDiagramError : public InputError {
 public:
  using InputError::InputError;
};

// A structural invariant that must hold for every valid diagram was violated.
// This always indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Label = int;
using Tuple = std::array<Label, 4>;
using SlotFlags = std::array<bool, 4>;

/// An oriented planar diagram code.
///
/// Each crossing lists four edge labels counterclockwise, starting at the
/// incoming under-strand. `incoming[c][s]` records whether the strand at slot
/// `s` of crossing `c` enters the crossing; it is always resolved after
/// construction through make_pd or parse_pd.
struct PDCode {
  std::vector<Tuple> crossings;
  std::vector<SlotFlags> incoming;
  int components = 1;

  int crossing_count() const noexcept { return static_cast<int>(crossings.size()); }
  bool operator==(const PDCode&) const = default;
};

/// Validates the tuples and resolves the orientation of every edge.
///
/// Without explicit flags the under-strand slots fix the direction of each
/// link component. A component that only ever passes over is oriented so
/// that its labels increase along it.
PDCode make_pd(std::vector<Tuple> crossings,
               std::optional<std::vector<SlotFlags>> orientations = std::nullopt);

/// Parses the text form: `X[a,b,c,d]` terms, the literal `UNKNOT`, and `#`
/// line comments.
PDCode parse_pd(std::string_view text);

std::string to_text(const PDCode& pd);

/// Crossing sign under the right-hand rule.
Sign crossing_sign(const PDCode& pd, int crossing);

/// Switches every crossing. The planar map is unchanged; every sign flips.
PDCode mirror(const PDCode& pd);

/// Diagram as read from a file: the code plus optional metadata.
struct DiagramInput {
  std::string name;
  PDCode pd;
  std::optional<int> outer_dart;
};

/// `{"name", "crossings", "orientations"?, "outer_dart"?}`.
DiagramInput parse_diagram_json(const nlohmann::json& j);
nlohmann::json to_json(const DiagramInput& input);

/// Reads a `.pd` or `.json` file. Text files take their name from the file stem.
std::vector<DiagramInput> load_diagram_file(const std::string& path);

}  // namespace knotalt
