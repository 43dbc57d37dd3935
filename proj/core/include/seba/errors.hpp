#pragma once

#include <stdexcept>
#include <string>

namespace seba {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ActionOutOfBounds : Error {
  using Error::Error;
};
struct EpisodeFinished : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct TrainingDiverged : Error {
  using Error::Error;
};
struct BatchMismatch : Error {
  using Error::Error;
};
struct NonFiniteLoss : Error {
  using Error::Error;
};
struct EmptyBuffer : Error {
  using Error::Error;
};
struct TokenOutOfRange : Error {
  using Error::Error;
};
struct InsufficientData : Error {
  using Error::Error;
};
struct InsufficientSamples : Error {
  using Error::Error;
};
struct DimensionOutOfRange : Error {
  using Error::Error;
};
struct NoDifferentiableHandle : Error {
  using Error::Error;
};
struct EnvSpecMismatch : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace seba
