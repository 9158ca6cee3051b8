// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIHILBERT_ERROR_HPP
#define SEMIHILBERT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace semihilbert
{

enum class ErrorKind
{
  NotHermitian,
  NegativeSpectrum,
  DimensionMismatch,
  NotAMember,
  UnknownTheorem,
  BadParams,
  BadConfig,
  BadFamily,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, const std::string &what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
  {
  }

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace semihilbert

#endif  // SEMIHILBERT_ERROR_HPP
