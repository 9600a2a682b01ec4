#ifndef PNIL_IO_HPP
#define PNIL_IO_HPP

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "pnil/homological.hpp"
#include "pnil/jordan.hpp"

namespace pnil {

using json = nlohmann::json;

/// Module JSON: {"p": int, "dim": int, "x": [[int]], "y": [[int]],
/// "grading": [int] (optional), "name": string (optional)}; row-major
/// integers reduced mod p.  Extension coefficients serialize as coordinate
/// arrays and add "ext_degree".
json module_to_json(const Module& M);
Module module_from_json(const json& j);

/// Sl2Module JSON with "e", "f", "h" in place of "x", "y".
json sl2_to_json(const Sl2Module& N);
Sl2Module sl2_from_json(const json& j);

/// BinaryForm: array of integer coefficients (degree implied by length);
/// FormMatrix: {"p": ..., "deg": ..., "entries": [[[int]]]}.
json form_to_json(const BinaryForm& f);
BinaryForm form_from_json(const json& j, const Gf& F);
json form_matrix_to_json(const FormMatrix& m);
FormMatrix form_matrix_from_json(const json& j);

/// Certificates serialize with enough data for independent re-checking:
/// kind, generic ranks, pivot-minor coefficients, factor lists, per-root
/// evaluations, verdict.
json certificate_to_json(const Certificate& c);

json jordan_type_to_json(const JordanType& t);

json resolution_to_json(const Resolution& r);

json slice_to_json(const ComponentSlice& s);
std::string slice_to_dot(const ComponentSlice& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pnil

#endif
