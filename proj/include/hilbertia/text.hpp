#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hilbertia/bipoly.hpp"
#include "hilbertia/factorize.hpp"
#include "hilbertia/multipoly.hpp"
#include "hilbertia/unipoly.hpp"

namespace hilbertia {

/// Syntax error or undeclared variable, with the 0-based byte offset.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar (whitespace insignificant, explicit '*' only):
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := rational | var ('^' nat)? | '(' expr ')'
///   rational := int ('/' posint)?
/// vars[i] names X_(i+1) of the result.
MultiPoly parse_poly(std::string_view text, std::span<const std::string> vars);

/// Parsed form chosen by the number of declared variables: one gives a
/// UniPoly, two a BiPoly (first = X, second = Y), more a MultiPoly.
struct PolyExpr {
  std::string source;
  std::variant<UniPoly, BiPoly, MultiPoly> value;
};
PolyExpr parse_poly_expr(std::string_view text, std::span<const std::string> vars);

UniPoly parse_unipoly(std::string_view text, const std::string& var = "X");
BiPoly parse_bipoly(std::string_view text, const std::string& x = "X", const std::string& y = "Y");

/// Identifiers in order of first appearance.
std::vector<std::string> identifiers_in(std::string_view text);

/// Canonical text: terms by descending degree of the main variable, then
/// lexicographically; reduced fractions; unit coefficients elided.
std::string format(const UniPoly& p, const std::string& var = "X");
std::string format(const BiPoly& p, const std::string& x = "X", const std::string& y = "Y");
std::string format(const MultiPoly& p, std::span<const std::string> vars);
/// X1, X2, ... naming.
std::string format(const MultiPoly& p);
std::string format(const Factorization& f, const std::string& var = "X");
std::string format(const BiFactorization& f, const std::string& x = "X", const std::string& y = "Y");

std::vector<std::string> default_variable_names(std::size_t count);

/// Non-empty, non-comment lines of a polynomial file ('#' starts a comment).
std::vector<std::string> read_poly_file(const std::string& path);

}  // namespace hilbertia
