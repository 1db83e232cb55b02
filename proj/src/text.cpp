#include "hilbertia/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hilbertia {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : DomainError(message + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

constexpr unsigned long kMaxExponent = 4096;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

MultiPoly multi_pow(MultiPoly base, unsigned long e) {
  MultiPoly acc = MultiPoly::constant(base.variable_count(), 1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars) : s_(text), vars_(vars) {}

  MultiPoly run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    MultiPoly r = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    MultiPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && digit(s_[pos_])) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    return std::string(s_.substr(start, pos_ - start));
  }

  MultiPoly factor() {
    skip();
    if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (digit(c)) {
      Integer num(digits());
      Integer den = 1;
      if (eat('/')) {
        skip();
        std::size_t at = pos_;
        den = Integer(digits());
        if (den == 0) throw ParseError("zero denominator", at);
      }
      return MultiPoly::constant(vars_.size(), make_rational(num, den));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError("undeclared variable '" + name + "'", start);
      MultiPoly v = MultiPoly::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()) + 1);
      if (eat('^')) {
        skip();
        std::size_t at = pos_;
        std::string e = digits();
        if (e.size() > 6 || std::stoul(e) > kMaxExponent) throw ParseError("exponent too large", at);
        return multi_pow(v, std::stoul(e));
      }
      return v;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view s_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

UniPoly multi_to_uni(const MultiPoly& m) {
  std::vector<Rational> c;
  for (const auto& [e, q] : m.terms()) {
    unsigned d = e.empty() ? 0 : e[0];
    if (c.size() <= d) c.resize(d + 1);
    c[d] += q;
  }
  return UniPoly(std::move(c));
}

BiPoly multi_to_bi(const MultiPoly& m) {
  BiPoly r;
  for (const auto& [e, q] : m.terms()) r += BiPoly::monomial(q, e[0], e[1]);
  return r;
}

struct Term {
  Rational c;
  std::string monomial;
};

std::string power(const std::string& var, unsigned e) {
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

std::string join(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    bool neg = sgn(t.c) < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    Rational mag = abs(t.c);
    if (t.monomial.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += t.monomial;
    else
      out += to_string(mag) + "*" + t.monomial;
  }
  return out;
}

std::string monomial_of(const Exponent& e, std::span<const std::string> vars) {
  std::string m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!m.empty()) m += "*";
    m += power(vars[i], e[i]);
  }
  return m;
}

std::string wrapped(const std::string& unit_text, const std::vector<std::string>& parts) {
  std::string out = unit_text;
  for (const auto& p : parts) out += p;
  return out;
}

std::string unit_prefix(const Rational& unit, bool has_factors) {
  if (!has_factors) return to_string(unit);
  if (unit == 1) return "";
  if (unit == -1) return "-";
  return to_string(unit);
}

}  // namespace

MultiPoly parse_poly(std::string_view text, std::span<const std::string> vars) {
  return Parser(text, vars).run();
}

PolyExpr parse_poly_expr(std::string_view text, std::span<const std::string> vars) {
  MultiPoly m = parse_poly(text, vars);
  PolyExpr out{std::string(text), m};
  if (vars.size() == 1)
    out.value = multi_to_uni(m);
  else if (vars.size() == 2)
    out.value = multi_to_bi(m);
  return out;
}

UniPoly parse_unipoly(std::string_view text, const std::string& var) {
  std::vector<std::string> vars{var};
  return multi_to_uni(parse_poly(text, vars));
}

BiPoly parse_bipoly(std::string_view text, const std::string& x, const std::string& y) {
  std::vector<std::string> vars{x, y};
  return multi_to_bi(parse_poly(text, vars));
}

std::vector<std::string> identifiers_in(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (ident_start(text[i])) {
      std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) ++i;
      std::string name(text.substr(start, i - start));
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    } else if (digit(text[i])) {
      while (i < text.size() && ident_char(text[i])) ++i;
    } else {
      ++i;
    }
  }
  return out;
}

std::string format(const UniPoly& p, const std::string& var) {
  std::vector<Term> terms;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coefficients()[i];
    if (is_zero(c)) continue;
    terms.push_back({c, i == 0 ? "" : power(var, static_cast<unsigned>(i))});
  }
  return join(terms);
}

std::string format(const BiPoly& p, const std::string& x, const std::string& y) {
  std::vector<Term> terms;
  for (int j = p.degree_y(); j >= 0; --j) {
    const UniPoly& a = p.y_coefficients()[j];
    for (int i = a.degree(); i >= 0; --i) {
      const Rational& c = a.coefficients()[i];
      if (is_zero(c)) continue;
      std::string m;
      if (i > 0) m = power(x, static_cast<unsigned>(i));
      if (j > 0) m += (m.empty() ? "" : "*") + power(y, static_cast<unsigned>(j));
      terms.push_back({c, m});
    }
  }
  return join(terms);
}

std::string format(const MultiPoly& p, std::span<const std::string> vars) {
  if (vars.size() != p.variable_count()) throw DomainError("format: variable name count mismatch");
  std::vector<std::pair<Exponent, Rational>> items(p.terms().begin(), p.terms().end());
  std::size_t k = p.variable_count();
  std::stable_sort(items.begin(), items.end(), [k](const auto& a, const auto& b) {
    if (k > 0 && a.first[k - 1] != b.first[k - 1]) return a.first[k - 1] > b.first[k - 1];
    return a.first > b.first;
  });
  std::vector<Term> terms;
  for (const auto& [e, c] : items) terms.push_back({c, monomial_of(e, vars)});
  return join(terms);
}

std::vector<std::string> default_variable_names(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= count; ++i) names.push_back("X" + std::to_string(i));
  return names;
}

std::string format(const MultiPoly& p) {
  auto names = default_variable_names(p.variable_count());
  return format(p, names);
}

std::string format(const Factorization& f, const std::string& var) {
  std::vector<std::string> parts;
  for (const auto& fac : f.factors) {
    std::string s = "(" + format(fac.poly, var) + ")";
    if (fac.multiplicity > 1) s += "^" + std::to_string(fac.multiplicity);
    parts.push_back(s);
  }
  return wrapped(unit_prefix(f.unit, !parts.empty()), parts);
}

std::string format(const BiFactorization& f, const std::string& x, const std::string& y) {
  std::vector<std::string> parts;
  Rational unit = 1;
  if (f.x_part.is_constant()) {
    unit = f.x_part.leading();
  } else {
    Factorization xf = factor_unipoly(f.x_part);
    unit = xf.unit;
    for (const auto& fac : xf.factors) {
      std::string s = "(" + format(fac.poly, x) + ")";
      if (fac.multiplicity > 1) s += "^" + std::to_string(fac.multiplicity);
      parts.push_back(s);
    }
  }
  for (const auto& g : f.factors) parts.push_back("(" + format(g, x, y) + ")");
  return wrapped(unit_prefix(unit, !parts.empty()), parts);
}

std::vector<std::string> read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

}  // namespace hilbertia
