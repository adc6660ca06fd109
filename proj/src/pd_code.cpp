#include "knotalt/pd_code.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace knotalt {

std::string_view to_string(Sign s) noexcept { return s == Sign::Positive ? "+" : "-"; }

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                 what),
      line_(line),
      column_(column) {}

namespace {

constexpr int opposite_slot(int slot) { return (slot + 2) % 4; }

std::string join_labels(const std::vector<Label>& labels) {
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  return os.str();
}

// Dart d = 4 * crossing + slot. Returns the dart sharing d's label.
std::vector<int> pair_darts(const std::vector<Tuple>& crossings) {
  std::map<Label, std::vector<int>> where;
  std::vector<Label> order;
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    for (int s = 0; s < 4; ++s) {
      Label l = crossings[c][s];
      if (l <= 0) throw InputError("edge label " + std::to_string(l) + " is not a positive integer");
      auto& v = where[l];
      if (v.empty()) order.push_back(l);
      v.push_back(static_cast<int>(4 * c + s));
    }
  }
  std::vector<Label> once;
  for (Label l : order) {
    const auto& v = where[l];
    if (v.size() > 2)
      throw InputError("label " + std::to_string(l) + " appears " + std::to_string(v.size()) +
                       " times");
    if (v.size() == 1) once.push_back(l);
  }
  if (!once.empty()) {
    throw InputError((once.size() == 1 ? "label " : "labels ") + join_labels(once) +
                     (once.size() == 1 ? " appears once" : " appear once"));
  }
  std::vector<int> twin(4 * crossings.size());
  for (const auto& [l, v] : where) {
    twin[v[0]] = v[1];
    twin[v[1]] = v[0];
  }
  return twin;
}

void check_flags(const std::vector<Tuple>& crossings, const std::vector<SlotFlags>& flags,
                 const std::vector<int>& twin) {
  if (flags.size() != crossings.size())
    throw InputError("orientation flags given for " + std::to_string(flags.size()) +
                     " crossings, expected " + std::to_string(crossings.size()));
  for (std::size_t c = 0; c < flags.size(); ++c) {
    const auto& f = flags[c];
    if (!f[0] || f[2] || f[1] == f[3])
      throw InputError("crossing " + std::to_string(c) +
                       ": orientation flags must mark slot 0 incoming, slot 2 outgoing and "
                       "exactly one of slots 1, 3 incoming");
  }
  for (std::size_t d = 0; d < twin.size(); ++d) {
    if (flags[d / 4][d % 4] == flags[twin[d] / 4][twin[d] % 4])
      throw InputError("edge " + std::to_string(crossings[d / 4][d % 4]) +
                       " is not oriented consistently at its two ends");
  }
}

// Walks every link component, entering each crossing through one dart and
// leaving through the opposite one, and picks the direction the under-strand
// slots demand.
std::vector<SlotFlags> resolve_orientation(const std::vector<Tuple>& crossings,
                                           const std::vector<int>& twin, int& components) {
  const int darts = static_cast<int>(twin.size());
  std::vector<SlotFlags> flags(crossings.size(), SlotFlags{false, false, false, false});
  std::vector<bool> seen(darts, false);
  components = 0;
  for (int start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    ++components;
    std::vector<int> entries;
    int d = start;
    do {
      entries.push_back(d);
      int exit = 4 * (d / 4) + opposite_slot(d % 4);
      seen[d] = seen[exit] = true;
      d = twin[exit];
    } while (d != start);

    int forward = 0, backward = 0;
    for (int e : entries) {
      if (e % 4 == 0) ++forward;
      if (e % 4 == 2) ++backward;
    }
    bool keep;
    if (forward > 0 && backward > 0) {
      throw InputError("cannot orient the component through edge " +
                       std::to_string(crossings[start / 4][start % 4]) +
                       ": its under-strands point both ways");
    } else if (forward > 0 || backward > 0) {
      keep = forward > 0;
    } else {
      // Only over-strands: orient so labels increase along the component.
      int up = 0, down = 0;
      const std::size_t k = entries.size();
      for (std::size_t i = 0; i < k; ++i) {
        Label a = crossings[entries[i] / 4][entries[i] % 4];
        Label b = crossings[entries[(i + 1) % k] / 4][entries[(i + 1) % k] % 4];
        if (b > a) ++up;
        if (b < a) ++down;
      }
      keep = up >= down;
    }
    for (int e : entries) {
      int in = keep ? e : 4 * (e / 4) + opposite_slot(e % 4);
      flags[in / 4][in % 4] = true;
    }
  }
  return flags;
}

int count_components(const std::vector<int>& twin) {
  std::vector<bool> seen(twin.size(), false);
  int n = 0;
  for (std::size_t start = 0; start < twin.size(); ++start) {
    if (seen[start]) continue;
    ++n;
    int d = static_cast<int>(start);
    do {
      int exit = 4 * (d / 4) + opposite_slot(d % 4);
      seen[d] = seen[exit] = true;
      d = twin[exit];
    } while (d != static_cast<int>(start));
  }
  return n;
}

}  // namespace

PDCode make_pd(std::vector<Tuple> crossings, std::optional<std::vector<SlotFlags>> orientations) {
  PDCode pd;
  const auto twin = pair_darts(crossings);
  if (orientations) {
    check_flags(crossings, *orientations, twin);
    pd.incoming = std::move(*orientations);
    pd.components = crossings.empty() ? 1 : count_components(twin);
  } else {
    pd.incoming = resolve_orientation(crossings, twin, pd.components);
    if (crossings.empty()) pd.components = 1;
  }
  pd.crossings = std::move(crossings);
  return pd;
}

namespace {

class PdLexer {
 public:
  explicit PdLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void expect(char ch) {
    skip_space();
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    advance();
  }

  bool consume_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    for (std::size_t i = 0; i < word.size(); ++i) advance();
    return true;
  }

  Label integer() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a positive integer label");
    const std::size_t line = line_, column = column_;
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000'000) throw ParseError(line, column, "label out of range");
      advance();
    }
    if (value == 0) throw ParseError(line, column, "edge labels must be positive");
    return static_cast<Label>(value);
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string found = at_end() ? "end of input" : std::string("'") + peek() + "'";
    throw ParseError(line_, column_, what + ", found " + found);
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

PDCode parse_pd(std::string_view text) {
  PdLexer lex(text);
  std::vector<Tuple> crossings;
  bool unknot = false;
  for (lex.skip_space(); !lex.at_end(); lex.skip_space()) {
    const std::size_t line = lex.line(), column = lex.column();
    if (lex.consume_word("UNKNOT")) {
      if (unknot || !crossings.empty())
        throw ParseError(line, column, "UNKNOT must be the only term");
      unknot = true;
      continue;
    }
    if (lex.peek() != 'X') lex.fail("expected 'X[' or 'UNKNOT'");
    if (unknot) throw ParseError(line, column, "UNKNOT must be the only term");
    lex.expect('X');
    lex.expect('[');
    Tuple t{};
    for (int i = 0; i < 4; ++i) {
      if (i) lex.expect(',');
      t[i] = lex.integer();
    }
    lex.expect(']');
    crossings.push_back(t);
  }
  if (!unknot && crossings.empty()) throw ParseError(lex.line(), lex.column(), "empty diagram");
  return make_pd(std::move(crossings));
}

std::string to_text(const PDCode& pd) {
  if (pd.crossings.empty()) return "UNKNOT";
  std::ostringstream os;
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    const auto& t = pd.crossings[c];
    os << (c ? " " : "") << "X[" << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3] << ']';
  }
  return os.str();
}

Sign crossing_sign(const PDCode& pd, int crossing) {
  // Under-strand runs slot 0 -> 2. The crossing is right-handed exactly
  // when the over-strand runs slot 3 -> 1.
  return pd.incoming.at(crossing)[3] ? Sign::Positive : Sign::Negative;
}

PDCode mirror(const PDCode& pd) {
  PDCode out = pd;
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    const int over_in = pd.incoming[c][1] ? 1 : 3;
    for (int k = 0; k < 4; ++k) {
      out.crossings[c][k] = pd.crossings[c][(over_in + k) % 4];
      out.incoming[c][k] = pd.incoming[c][(over_in + k) % 4];
    }
  }
  return out;
}

DiagramInput parse_diagram_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("diagram JSON must be an object");
  DiagramInput in;
  try {
    if (j.contains("name")) in.name = j.at("name").get<std::string>();
    std::vector<Tuple> crossings;
    for (const auto& t : j.at("crossings")) {
      if (!t.is_array() || t.size() != 4) throw InputError("each crossing must list 4 labels");
      Tuple tuple{};
      for (int k = 0; k < 4; ++k) tuple[k] = t.at(k).get<Label>();
      crossings.push_back(tuple);
    }
    std::optional<std::vector<SlotFlags>> flags;
    if (j.contains("orientations") && !j.at("orientations").is_null()) {
      flags.emplace();
      for (const auto& f : j.at("orientations")) {
        if (!f.is_array() || f.size() != 4)
          throw InputError("each orientation entry must list 4 flags");
        SlotFlags sf{};
        for (int k = 0; k < 4; ++k)
          sf[k] = f.at(k).is_boolean() ? f.at(k).get<bool>() : f.at(k).get<int>() != 0;
        flags->push_back(sf);
      }
    }
    if (j.contains("outer_dart") && !j.at("outer_dart").is_null())
      in.outer_dart = j.at("outer_dart").get<int>();
    in.pd = make_pd(std::move(crossings), std::move(flags));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed diagram JSON: ") + e.what());
  }
  return in;
}

nlohmann::json to_json(const DiagramInput& input) {
  nlohmann::json j;
  j["name"] = input.name;
  j["crossings"] = nlohmann::json::array();
  j["orientations"] = nlohmann::json::array();
  for (std::size_t c = 0; c < input.pd.crossings.size(); ++c) {
    const auto& t = input.pd.crossings[c];
    const auto& f = input.pd.incoming[c];
    j["crossings"].push_back({t[0], t[1], t[2], t[3]});
    j["orientations"].push_back({int(f[0]), int(f[1]), int(f[2]), int(f[3])});
  }
  if (input.outer_dart) j["outer_dart"] = *input.outer_dart;
  return j;
}

std::vector<DiagramInput> load_diagram_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << file.rdbuf();
  const std::filesystem::path p(path);
  const std::string stem = p.stem().string();

  std::vector<DiagramInput> out;
  if (p.extension() == ".json") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(path + ": " + e.what());
    }
    if (j.is_array()) {
      for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(parse_diagram_json(j[i]));
        if (out.back().name.empty()) out.back().name = stem + "#" + std::to_string(i);
      }
    } else {
      out.push_back(parse_diagram_json(j));
      if (out.back().name.empty()) out.back().name = stem;
    }
  } else {
    out.push_back(DiagramInput{stem, parse_pd(buf.str()), std::nullopt});
  }
  return out;
}

}  // namespace knotalt
