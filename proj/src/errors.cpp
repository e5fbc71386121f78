#include "qsemi/errors.hpp"

namespace qsemi {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

DegreeOverflow::DegreeOverflow(int requested, int valid)
    : Error("degree " + std::to_string(requested) + " exceeds valid degree " +
            std::to_string(valid) + " (short by " + std::to_string(requested - valid) + ")"),
      requested_(requested),
      valid_(valid) {}

NotRegular::NotRegular(const std::string& message, int n)
    : Error(message + " (n = " + std::to_string(n) + ")"), n_(n) {}

}  // namespace qsemi
