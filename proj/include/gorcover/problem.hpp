#pragma once

#include "gorcover/apolarity.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gorcover {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Input file:
//   vars x1,x2,x3;
//   ideal x1*x2, x3^2 - x1^3;
//   dualpoly y3^4 + y1^2*y2;      (optional)
//   layer y3^2, y2*y3;            (optional, repeatable: adapted layers)
// Comments run from '#' to the end of the line.
struct ProblemFile {
  RingPair rings;
  std::vector<Poly> ideal;
  std::optional<Poly> dualpoly;
  std::vector<std::vector<Poly>> layers;
};

ProblemFile parse_problem(std::string_view text);

// Polynomial over the variables of ring, with integer or rational
// coefficients, + - * ^ and parentheses. Division only by nonzero constants.
Poly parse_poly(const RingPtr& ring, std::string_view text);
std::vector<Poly> parse_poly_list(const RingPtr& ring, std::string_view text);

// Writes the problem back in input syntax.
std::string to_problem_text(const ProblemFile& p);

// Result documents are ordered JSON objects. The text form is a Singular-style
// listing: a scalar prints as "key;" followed by its value, an array as "key;"
// followed by "_[i]=..." lines, a nested object as an indented section.
using Document = nlohmann::ordered_json;

nlohmann::json generator_array(std::span<const Poly> polys);
std::string render_text(const Document& doc);

}  // namespace gorcover
