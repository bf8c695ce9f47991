#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "affgr/apartment.hpp"
#include "affgr/detval.hpp"
#include "affgr/harness.hpp"
#include "affgr/lattice.hpp"
#include "affgr/metric.hpp"

namespace affgr::io {

using nlohmann::json;

// Encodings (all decoders throw FormatError on malformed input):
//   poly:     [[exp, "coef"], ...] sorted by exponent; coefficients are
//             rationals "p/q" or residues "r" as decimal strings
//   scalar:   {"num": poly, "den": poly}, "den" omitted when it is 1
//   matrix:   list of columns, each a list of scalars
//   lattice:  {"n": n, "columns": matrix}; encoders write the canonical basis,
//             decoders accept any generating set of at least n columns
//   instance: {"n", "field", "lattices", "indices"}, plus "frames" (a list
//             of matrices, hints for the apartment strategy) when present
//   report:   {"lhs", "status", "witness", "candidates", "strategy", "seed",
//              "candidates_examined", "note"}

json encode(const LaurentPoly& p);
json encode(const ValuedScalar& s);
json encode(const ScalarMatrix& m);
json encode(const Lattice& l);
json encode(const DominantCoweight& a);
json encode(const ConjectureReport& r);

LaurentPoly decode_poly(const json& j, const Field& f);
ValuedScalar decode_scalar(const json& j, const Field& f);
ScalarMatrix decode_matrix(const json& j, const Field& f);
Lattice decode_lattice(const json& j, const Field& f);
ConjectureReport decode_report(const json& j, const Field& f);
Field decode_field(const json& j);

struct Instance {
  Field field = Field::rational();
  std::size_t n = 0;
  std::vector<Lattice> lattices;
  IndexVector indices;
  std::vector<ScalarMatrix> frames;
};

json encode(const Instance& inst);
Instance decode_instance(const json& j);

/// Parses text as JSON, converting parse errors to FormatError.
json parse(const std::string& text);
json read_file(const std::string& path);

}  // namespace affgr::io
