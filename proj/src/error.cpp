#include "citenet/error.hpp"

namespace citenet {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::usage:
      return "usage";
    case ErrorKind::data:
      return "data";
    case ErrorKind::numerical:
      return "numerical";
  }
  return "unknown";
}

}  // namespace citenet
