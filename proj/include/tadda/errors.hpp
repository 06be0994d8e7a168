#pragma once

#include <stdexcept>
#include <string>

namespace tadda {

// Input data that is well-formed syntax but unusable: gaps in a panel,
// missing history, duplicate rows. Usage mistakes throw std::invalid_argument.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tadda
