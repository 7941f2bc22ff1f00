#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gds {

// Precondition violated by an argument (invalid node id, empty graph, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Malformed edge-list input. `row()` is the 1-based data row (header excluded).
class IngestError : public std::runtime_error {
public:
  IngestError(std::size_t row, const std::string& what)
      : std::runtime_error("row " + std::to_string(row) + ": " + what),
        row_(row) {}

  std::size_t row() const noexcept { return row_; }

private:
  std::size_t row_;
};

}  // namespace gds
