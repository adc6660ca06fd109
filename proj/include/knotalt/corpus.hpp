#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "knotalt/pd_code.hpp"

namespace knotalt {

struct CorpusEntry {
  std::string_view name;
  std::string_view text;  // PD text format
};

/// The diagrams under data/corpus, compiled in. Sorted by name.
std::span<const CorpusEntry> builtin_corpus();

std::vector<DiagramInput> load_builtin_corpus();

}  // namespace knotalt
