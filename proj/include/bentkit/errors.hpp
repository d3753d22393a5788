// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace bentkit
{

/// Base class for every error raised by the library.
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed truth-table text or parameter input.
class parse_error : public error
{
public:
  using error::error;
};

/// Operands disagree on the number of variables, or an index is out of range.
class dimension_error : public error
{
public:
  using error::error;
};

/// A construction or analysis precondition does not hold (e.g. a non-bent input).
class premise_error : public error
{
public:
  using error::error;
};

/// Input exceeds a size cap (oracle limits, table size limits).
class cap_error : public error
{
public:
  using error::error;
};

} // namespace bentkit
