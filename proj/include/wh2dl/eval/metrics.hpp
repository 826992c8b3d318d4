#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace wh2dl::eval {

struct Counts {
  std::size_t n = 0;     // queries in the category
  std::size_t n_i = 0;   // identified (characterized without error)
  std::size_t n_ci = 0;  // identified and matching gold

  Counts& operator+=(const Counts& o) {
    n += o.n;
    n_i += o.n_i;
    n_ci += o.n_ci;
    return *this;
  }
  bool operator==(const Counts&) const = default;
};

// Percentages in hundredths, truncated. nullopt when the ratio is undefined.
struct Metrics {
  std::optional<long> recall;
  std::optional<long> precision;
  std::optional<long> f1;
};

// Throws std::invalid_argument unless n_ci <= n_i <= n.
Metrics compute_metrics(const Counts& c);

// 9450 -> "94.50"; nullopt -> "—".
std::string format_hundredths(std::optional<long> v);

}  // namespace wh2dl::eval
