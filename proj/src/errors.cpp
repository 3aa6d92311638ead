// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#include "holodyn/errors.hpp"

namespace holodyn {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::TailUnavailable: return "TailUnavailable";
    case ErrorCode::BlockTooLarge: return "BlockTooLarge";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::TrivialOperator: return "TrivialOperator";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::AssociatedMismatch: return "AssociatedMismatch";
    case ErrorCode::EqualScalars: return "EqualScalars";
    case ErrorCode::ScaleOutOfRange: return "ScaleOutOfRange";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace holodyn
