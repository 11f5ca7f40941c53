#include "gurlab/warnings.hpp"

namespace gur::warnings {

namespace {
thread_local std::vector<Warning> buffer;
}

void emit(Code code, std::string message) {
  buffer.push_back({code, std::move(message)});
}

std::vector<Warning> take() {
  std::vector<Warning> out;
  out.swap(buffer);
  return out;
}

} // namespace gur::warnings
