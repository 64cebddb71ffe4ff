#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxmorse {

enum class Errc {
  UnknownType,
  InfiniteGroup,
  InvalidOrder,
  BudgetExceeded,
  EmptyArrangement,
  NotCubical,
  NotAForest,
  NotTreeCompatible,
  BlockTooLarge,
  InvalidGenerator,
  DimensionMismatch,
  BoundaryConditionViolated,
  OutOfRange,
  Underdetermined,
  InvalidInput,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::UnknownType: return "UnknownType";
    case Errc::InfiniteGroup: return "InfiniteGroup";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::EmptyArrangement: return "EmptyArrangement";
    case Errc::NotCubical: return "NotCubical";
    case Errc::NotAForest: return "NotAForest";
    case Errc::NotTreeCompatible: return "NotTreeCompatible";
    case Errc::BlockTooLarge: return "BlockTooLarge";
    case Errc::InvalidGenerator: return "InvalidGenerator";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BoundaryConditionViolated: return "BoundaryConditionViolated";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::Underdetermined: return "Underdetermined";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace coxmorse
