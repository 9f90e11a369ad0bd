#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "artin/coinvariants.hpp"
#include "artin/deformation.hpp"

namespace artin {

using ordered_json = nlohmann::ordered_json;

// Plain-text polynomial grammar: terms joined by + and -, factors joined
// by * (optional), ring powers x^3, divided powers X^[3], integer or
// num/den coefficients. Ring and dual variables are resolved against the
// declared table; dual names are the upper-cased ring names.
Polynomial parse_polynomial(const std::string& text, const VariableTable& table,
                            const FieldDescriptor& field);
DividedPolynomial parse_divided_polynomial(const std::string& text, const VariableTable& table,
                                           const FieldDescriptor& field);

// "4,2,2,1" (or "0" for the empty partition).
Partition parse_partition(const std::string& text);

// Algebra description file: `field Q` / `field GF p`, `vars x:1 y:1`,
// one of `dual <divided poly>` / `ideal <poly>; <poly>; ...`, optional
// `label <text>`, `cap <n>`, `format 1`. `#` starts a comment.
AlgebraSpec parse_algebra_file(const std::string& text, const std::string& filename);
AlgebraSpec load_algebra_file(const std::string& path);

// Triple file: sections [A], [B], [C] holding algebra lines or
// `include <path>`, followed by `iota var=<poly in C> ...` and
// `pi var=<poly in B> ...` assignment lines.
ExtensionTriple load_triple_file(const std::string& path);
ExtensionTriple parse_triple_file(const std::string& text, const std::string& filename,
                                  const std::string& include_dir);

std::string render_algebra_file(const AlgebraSpec& spec);
std::string render_triple_file(const ExtensionTriple& t);

// JSON building blocks (descending integer arrays for partitions).
ordered_json partition_json(const Partition& p);
ordered_json int_vector_json(const std::vector<int>& v);
ordered_json extension_report_json(const ExtensionReport& rep);
ordered_json jordan_report_json(const GradedAlgebra& a, const JordanReport& rep);
ordered_json lefschetz_report_json(const GradedAlgebra& a, const LefschetzReport& rep);
std::string element_string(const GradedAlgebra& a, const Element& e);

}  // namespace artin
