#pragma once

#include "ljlab/algebra.hpp"
#include "ljlab/states.hpp"
#include "ljlab/witness.hpp"

#include "json.hpp"

namespace ljlab::io
{

using nlohmann::json;

/// {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
[[nodiscard]] json to_json(const ComplexMatrix& m);
/// Verifies shape and finiteness; throws Parse.
[[nodiscard]] ComplexMatrix matrix_from_json(const json& j);

/// {"ambient_dim": n, "matrices": [<matrix>, ...]}; loading re-orthonormalizes.
[[nodiscard]] json to_json(const RealSubspace& s);
[[nodiscard]] RealSubspace subspace_from_json(const json& j);

[[nodiscard]] json to_json(const ClassicalityVerdict& v);
[[nodiscard]] json to_json(const Classification& c);
[[nodiscard]] json to_json(const WitnessReport& r);
[[nodiscard]] json to_json(const GenerationReport& r);
[[nodiscard]] json to_json(const FunctionRepresentation& r);

/// Reads and parses a JSON file; throws Parse.
[[nodiscard]] json read_file(const std::string& path);

} // namespace ljlab::io
