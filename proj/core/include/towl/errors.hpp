// SPDX-License-Identifier: Apache-2.0
//
// towl - transcutaneous optical wireless link analysis
// Copyright (C) 2026 the towl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace towl {

/// A configuration or data set violates one of its invariants.
class validation_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A file could not be parsed. Carries the 1-based line number.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// A query lies outside the supported domain (e.g. wavelength range).
class domain_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A numerical routine ran out of budget before reaching its tolerance.
/// Carries the relative error estimate that was actually achieved.
class numerical_error : public std::runtime_error {
  public:
    numerical_error(const std::string& what, double achieved_rel_error)
        : std::runtime_error(what), achieved_(achieved_rel_error) {}

    double achieved_rel_error() const noexcept { return achieved_; }

  private:
    double achieved_;
};

/// A requested quality-of-service target cannot be met even with perfect
/// alignment. Carries the outage probability of the zero-jitter link.
class infeasible_error : public std::runtime_error {
  public:
    infeasible_error(const std::string& what, double best_case_outage)
        : std::runtime_error(what), best_case_outage_(best_case_outage) {}

    double best_case_outage() const noexcept { return best_case_outage_; }

  private:
    double best_case_outage_;
};

}  // namespace towl
