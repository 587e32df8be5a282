#pragma once

#include <mutex>

namespace zygmund::detail {

// FFTW plan creation/destruction is not thread safe; execution is.
inline std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace zygmund::detail
