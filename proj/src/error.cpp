// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#include "semihilbert/error.hpp"

namespace semihilbert
{

std::string_view to_string(ErrorKind kind)
{
  switch (kind)
  {
    case ErrorKind::NotHermitian:
      return "NotHermitian";
    case ErrorKind::NegativeSpectrum:
      return "NegativeSpectrum";
    case ErrorKind::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorKind::NotAMember:
      return "NotAMember";
    case ErrorKind::UnknownTheorem:
      return "UnknownTheorem";
    case ErrorKind::BadParams:
      return "BadParams";
    case ErrorKind::BadConfig:
      return "BadConfig";
    case ErrorKind::BadFamily:
      return "BadFamily";
    case ErrorKind::Parse:
      return "ParseError";
  }
  return "Error";
}

}  // namespace semihilbert
