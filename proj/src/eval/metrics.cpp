#include "wh2dl/eval/metrics.hpp"

#include <cstdio>
#include <stdexcept>

namespace wh2dl::eval {

Metrics compute_metrics(const Counts& c) {
  if (c.n_ci > c.n_i || c.n_i > c.n) throw std::invalid_argument("counts must satisfy N_CI <= N_I <= N");
  Metrics m;
  // F1 is taken over the already truncated figures.
  if (c.n > 0) m.recall = static_cast<long>(10000 * c.n_ci / c.n);
  if (c.n_i > 0) m.precision = static_cast<long>(10000 * c.n_ci / c.n_i);
  if (m.recall && m.precision) m.f1 = *m.recall + *m.precision == 0
                                          ? 0
                                          : 2 * *m.precision * *m.recall / (*m.precision + *m.recall);
  return m;
}

std::string format_hundredths(std::optional<long> v) {
  if (!v) return "—";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%ld.%02ld", *v / 100, *v % 100);
  return buf;
}

}  // namespace wh2dl::eval
