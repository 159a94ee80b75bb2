// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gammagof {

// Base of every error raised by the library. The C API maps each subclass
// onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Sample that cannot support the requested estimate (zero variance, too few
// events, ...).
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

// An uncensored observation whose censoring-survival weight is zero.
class WeightSingularityError : public Error {
 public:
  WeightSingularityError(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Iterative or quadrature routine that failed to reach its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. Row numbers are 1-based and count the header line.
class ParseError : public Error {
 public:
  ParseError(std::size_t row, const std::string& what)
      : Error("row " + std::to_string(row) + ": " + what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace gammagof
