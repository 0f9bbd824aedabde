// Copyright 2026 The troeq authors
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

#include <stdexcept>
#include <string>

namespace troeq {

/// Base class for all troeq exceptions.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Incompatible matrix/subspace dimensions or malformed structured input.
struct shape_error : error {
  explicit shape_error(const std::string& msg) : error(msg) {}
};

/// Input is well-formed but violates a mathematical precondition.
struct domain_error : error {
  explicit domain_error(const std::string& msg) : error(msg) {}
};

/// A size cap was exceeded (ambient dimension, vertex count, search budget).
struct limit_error : error {
  explicit limit_error(const std::string& msg) : error(msg) {}
};

struct not_a_graph_system : domain_error {
  explicit not_a_graph_system(const std::string& msg) : domain_error(msg) {}
};

struct not_rigid : domain_error {
  explicit not_rigid(const std::string& msg) : domain_error(msg) {}
};

struct precondition_error : domain_error {
  explicit precondition_error(const std::string& msg) : domain_error(msg) {}
};

}  // namespace troeq
