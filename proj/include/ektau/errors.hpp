#pragma once

#include <stdexcept>
#include <string>

namespace ektau {

struct ChartDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateParametrization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Point lies in (a gated neighborhood of) W^c, where the adapted frame does
// not exist.
struct AdaptedFrameUndefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CmcRequired : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonCompact : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerticalPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroTau : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WrongCurvatureRegime : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ImmersionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ektau
