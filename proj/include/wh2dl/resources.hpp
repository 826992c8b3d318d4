#pragma once

#include <string_view>

// Data files compiled into the library (see data/).
namespace wh2dl::resources {

std::string_view tagger_lexicon();
std::string_view hypernyms();
std::string_view measurable_modifiers();

}  // namespace wh2dl::resources
