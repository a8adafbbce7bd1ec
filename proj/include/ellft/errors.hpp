// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFT_ERRORS_HPP_
#define ELLFT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ellft {

// A requested computation would enumerate past the configured budget.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed mid-computation (truncated Euler
// product with a nonzero tail, root finder not converging, ...).  These are
// never swallowed: they indicate a bug or corrupted input, not a bad flag.
struct ComputationError : std::runtime_error {
  explicit ComputationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace ellft

#endif  // ELLFT_ERRORS_HPP_
