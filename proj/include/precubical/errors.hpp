#pragma once

#include <stdexcept>
#include <string>

#include "precubical/complex.hpp"

namespace precubical {

/// Base of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownCell : public Error {
 public:
  explicit UnknownCell(const CellRef& c);
  const CellRef& cell() const { return cell_; }

 private:
  CellRef cell_;
};

class WrongDegree : public Error {
 public:
  WrongDegree(const std::string& id, int expected, int actual);
};

class DimensionUnsupported : public Error {
 public:
  using Error::Error;
};

class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace precubical
