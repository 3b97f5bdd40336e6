#pragma once

#include <exception>
#include <optional>

namespace splinelab {

template <class T, class F>
std::vector<T> map_indexed(std::size_t count, F&& f, Exec exec) {
  std::vector<std::optional<T>> slots(count);
  if (exec == Exec::Serial) {
    for (std::size_t k = 0; k < count; ++k) slots[k].emplace(f(k));
  } else {
    std::exception_ptr err;
    long long total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long k = 0; k < total; ++k) {
      try {
        slots[k].emplace(f(static_cast<std::size_t>(k)));
      } catch (...) {
#pragma omp critical(splinelab_map_indexed)
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  }
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace splinelab
