/*
   Copyright 2026 The qloop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QLOOP_SERIALIZE_HPP
#define QLOOP_SERIALIZE_HPP

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "qloop/algebra.hpp"
#include "qloop/module.hpp"
#include "qloop/rmatrix.hpp"
#include "qloop/structure.hpp"

namespace qloop {

using Json = nlohmann::json;

/// Malformed input; `path` locates the offending field ("$.factors[0].node").
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : std::invalid_argument(path + ": " + message), path_(path) {}
  [[nodiscard]] const std::string& path() const { return path_; }

 private:
  std::string path_;
};

Json to_json(const Rational& r);
/// {"exponent": "num/den"}.
Json to_json(const LaurentPoly& p);
Json to_json(const Weight& w);
/// Sparse triplets [[row, col, "num/den"], ...] in row-major order.
Json to_json(const SparseMatrix& m);
Json to_json(const RelationCheck& c);
/// Per-family counts plus every check that did not pass.
Json to_json(const RelationReport& r);
Json to_json(const IntertwinerResult& r);
Json to_json(const UnipotenceReport& r);
Json to_json(const YbeReport& r);
Json to_json(const CyclicityResult& r);
/// Dimension, labels, weights, spectral parameters and the Kac-Moody operators.
Json to_json(const ModuleRealization& m);

Rational rational_from_json(const Json& j, const std::string& path);
/// "A_2", "A2", {"type":"A","rank":2} or {"rank":4,"edges":[[1,2],...]}.
DynkinDiagram diagram_from_json(const Json& j, const std::string& path);
Coproduct coproduct_from_json(const Json& j, const std::string& path);

/// Rejects keys outside `allowed`.
void require_keys(const Json& obj, const std::string& path,
                  std::initializer_list<const char*> allowed);
int int_from_json(const Json& j, const std::string& path);

}  // namespace qloop

#endif  // QLOOP_SERIALIZE_HPP
