#pragma once

#include <string>

#include "json.hpp"
#include "wh2dl/translate/translator.hpp"

namespace wh2dl::translate {

// {"mode", "desire", "variable", "axioms", "support", "rules", "sub", "combinator"}
nlohmann::json to_json(const TranslationResult& r);
std::string render_json(const TranslationResult& r, int indent = -1);

// Desire concept on the first line, then one axiom per line.
std::string render_text(const TranslationResult& r);

}  // namespace wh2dl::translate
