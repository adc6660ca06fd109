#include "knotalt/corpus.hpp"

#include <string>

namespace knotalt {

std::vector<DiagramInput> load_builtin_corpus() {
  std::vector<DiagramInput> out;
  for (const auto& e : builtin_corpus())
    out.push_back(DiagramInput{std::string(e.name), parse_pd(e.text), std::nullopt});
  return out;
}

}  // namespace knotalt
