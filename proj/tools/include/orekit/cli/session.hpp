// Copyright 2026 The orekit Authors.
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

// JSON session configs: ring, twist data, guards and output format. The schema is documented in
// docs/cli.md.

#ifndef OREKIT_CLI_SESSION_HPP
#define OREKIT_CLI_SESSION_HPP

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "orekit/error.hpp"
#include "orekit/modstruct.hpp"
#include "orekit/twist.hpp"

namespace orekit::cli {

/// A config that does not match the schema. `path()` is a JSON path such as "$.sigma.endos[1]".
class SchemaError : public ValidationError {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : ValidationError(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

enum class OutputFormat { Json, Text };

struct Session {
  /// Built but possibly failing validation; check `report`.
  std::shared_ptr<TwistContext> ctx;
  ValidationReport report;
  OutputFormat output = OutputFormat::Json;
};

/// Builds the ring and twist data and runs validate_twist. Throws SchemaError on malformed
/// configs and ValidationError on invalid construction data (e.g. a reducible GF modulus).
Session load_session(const nlohmann::json& config);
/// Reads and parses the file first; JSON syntax errors surface as ParseError.
Session load_session_file(const std::string& path);

/// {"rank": l, "X": [X_1, ..., X_n]} with each X_i a list of rows, or {"point": [a_1, ...]} for
/// the rank 1 module of a point.
ModulePresentation load_presentation(const ContextPtr& ctx, const nlohmann::json& data,
                                     const std::string& path = "$");

}  // namespace orekit::cli

#endif  // OREKIT_CLI_SESSION_HPP
