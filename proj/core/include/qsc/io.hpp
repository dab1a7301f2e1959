// Copyright 2026 The qscocycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON interchange for generators, step functions and model specs.
//
// Every document carries "format": 1. Complex numbers are [re, im] pairs;
// matrices are arrays of rows. A generator is
//   {"format":1, "dim_h":n, "dim_k":m, "K":..., "L":..., "M":..., "C":...}
// a step function
//   {"format":1, "breakpoints":[0, t1, ...], "values":[[[re,im],...], ...], "support_end":T}
// with one k-vector per breakpoint, and a model spec
//   {"format":1, "model":"zero"|"hp"|"oscillator"|"birth_death"|"random", ...}.
//
// Syntax errors and missing or mistyped fields raise ParseError naming the
// field; shape and domain problems raise DimensionError / DomainError.

#include <string>
#include <string_view>

#include "qsc/cocycle.hpp"
#include "qsc/models.hpp"
#include "qsc/semigroups.hpp"

namespace qsc::io {

inline constexpr int kFormatVersion = 1;

std::string generator_to_json(const BlockGenerator& f);
BlockGenerator generator_from_json(std::string_view text);

std::string step_function_to_json(const StepFunction& f);
StepFunction step_function_from_json(std::string_view text);

/// Builds the model described by a spec document.
Model model_from_json(std::string_view text);

/// [[re, im], ...] -> vector.
CVector vector_from_json(std::string_view text);

/// {"format":1, "dim_k":m, "dim_h":n, "entries":[[alpha, beta, matrix], ...]}
std::string coordinates_to_json(const CoordinateMatrix& coords);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace qsc::io
