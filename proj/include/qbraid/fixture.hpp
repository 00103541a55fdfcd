#pragma once

/// @file fixture.hpp
/// JSON fixtures: rmatrix, representation and relations documents.
///
///   {"kind": "rmatrix", "dim": 2, "form": "braiding" | "rtt", "entries": [["q", "0", ...], ...]}
///   {"kind": "representation", "cartan": {"matrix": [[2]], "d": [1]}, "dim": 2,
///    "generators": {"E1": [[...]], "F1": ..., "K1": ..., "Kinv1": ... (optional)},
///    "braiding": "sl:2" | {"form": ..., "entries": ...} (optional)}
///   {"kind": "relations", "alphabet": 4, "precedence": ["x_2", "x_3", "x_4", "x_1"] (optional),
///    "relations": ["x_1 x_2 = q x_2 x_1", ...]}
///
/// Every document may carry "name"; representation and relations documents
/// may carry "reference_relations", a list of relation strings shown next to
/// derived ones.

#include "qbraid/linalg.hpp"
#include "qbraid/ncalg.hpp"
#include "qbraid/uqg.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qbraid {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RMatrixFixture {
  std::string name;
  /// "braiding" or "rtt".
  std::string form = "braiding";
  SymMatrix matrix;

  /// Braided space without validation; callers run check_braid themselves.
  BraidedSpace space() const;
};

struct RepresentationFixture {
  std::string name;
  Representation rep;
  std::optional<BraidedSpace> space;
  std::vector<std::string> reference_relations;
};

struct RelationsFixture {
  std::string name;
  RelationSet relations;
  std::vector<std::string> reference_relations;
};

using Fixture = std::variant<RMatrixFixture, RepresentationFixture, RelationsFixture>;

/// Throws FixtureError with a path-qualified diagnostic on any schema violation.
Fixture parse_fixture(std::string_view text, const std::string& origin = "fixture");
Fixture load_fixture(const std::string& path);

/// Serializes a matrix as an array of rows of Scalar strings.
std::string matrix_to_json(const SymMatrix& m);

}  // namespace qbraid
