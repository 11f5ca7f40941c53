#pragma once

#include <string>
#include <vector>

namespace gur::warnings {

// Warning-level conditions: the computation proceeds and the condition is
// recorded in a thread-local buffer that callers may drain.
enum class Code {
  out_of_convergence_region,
  outside_perturbative_range,
};

struct Warning {
  Code code;
  std::string message;
};

void emit(Code code, std::string message);

/// Returns all warnings recorded on this thread since the last call and
/// clears the buffer.
std::vector<Warning> take();

} // namespace gur::warnings
