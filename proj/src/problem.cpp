#include "gorcover/problem.hpp"

#include <cctype>
#include <sstream>

namespace gorcover {

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

// Recursive descent over one expression; line is only used for messages.
class ExprParser {
 public:
  ExprParser(const RingPtr& ring, std::string_view text, std::size_t line) : ring_(ring), s_(text), line_(line) {}

  Poly parse_all() {
    Poly p = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    skip_space();
    Poly out(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Poly t = term();
    out = negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  Poly term() {
    Poly out = power();
    for (;;) {
      if (accept('*')) {
        out = out * power();
      } else if (accept('/')) {
        Poly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        out *= Rational(1) / d.coefficient(Exponent{});
      } else {
        return out;
      }
    }
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      const unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 255) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly atom() {
    skip_space();
    if (pos_ == s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("')' expected");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(ring_, Rational(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      const auto idx = ring_->index_of(name);
      if (!idx) fail("unknown variable '" + std::string(name) + "'");
      return Poly::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

// Splits at top-level commas.
std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Poly> poly_list(const RingPtr& ring, std::string_view text, std::size_t line) {
  std::vector<Poly> out;
  for (auto item : split_list(text)) {
    item = trim(item);
    if (item.empty()) throw ParseError("empty list entry", line);
    out.push_back(ExprParser(ring, item, line).parse_all());
  }
  return out;
}

bool valid_name(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name.front())) || name.front() == '_')) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

Poly parse_poly(const RingPtr& ring, std::string_view text) { return ExprParser(ring, text, 1).parse_all(); }

std::vector<Poly> parse_poly_list(const RingPtr& ring, std::string_view text) {
  return poly_list(ring, text, 1);
}

ProblemFile parse_problem(std::string_view text) {
  // strip comments, remember the line of each statement start
  std::string clean;
  std::vector<std::size_t> line_of;
  std::size_t line = 1;
  bool comment = false;
  for (char c : text) {
    if (c == '\n') {
      ++line;
      comment = false;
    }
    if (c == '#') comment = true;
    if (comment) continue;
    clean += c;
    line_of.push_back(line);
  }

  std::optional<RingPair> rings;
  std::vector<Poly> ideal;
  bool have_ideal = false;
  std::optional<Poly> dual;
  std::vector<std::vector<Poly>> layers;

  std::size_t start = 0;
  while (start < clean.size()) {
    std::size_t end = clean.find(';', start);
    const bool terminated = end != std::string::npos;
    if (!terminated) end = clean.size();
    std::string_view stmt = clean;
    stmt = stmt.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < stmt.size() && std::isspace(static_cast<unsigned char>(stmt[lead]))) ++lead;
    const std::size_t at = start + lead < line_of.size() ? line_of[start + lead] : line;
    stmt = trim(stmt);
    start = end + 1;
    if (stmt.empty()) continue;
    if (!terminated) throw ParseError("missing ';'", at);

    std::size_t k = 0;
    while (k < stmt.size() && (std::isalnum(static_cast<unsigned char>(stmt[k])) || stmt[k] == '_')) ++k;
    const std::string_view keyword = stmt.substr(0, k);
    const std::string_view body = trim(stmt.substr(k));

    if (keyword == "vars") {
      if (rings) throw ParseError("vars declared twice", at);
      std::vector<std::string> names;
      for (auto n : split_list(body)) {
        n = trim(n);
        if (!valid_name(n)) throw ParseError("bad variable name '" + std::string(n) + "'", at);
        for (const auto& prev : names) {
          if (prev == n) throw ParseError("duplicate variable '" + std::string(n) + "'", at);
        }
        names.emplace_back(n);
      }
      if (names.size() > kMaxVars) throw ParseError("too many variables", at);
      rings = RingPair::from_series(Ring::make(std::move(names)));
      for (const auto& y : rings->y->names()) {
        if (rings->x->index_of(y)) throw ParseError("dual variable name '" + y + "' clashes with a variable", at);
      }
      continue;
    }
    if (!rings) throw ParseError("'" + std::string(keyword) + "' before vars", at);
    if (keyword == "ideal") {
      if (have_ideal) throw ParseError("ideal declared twice", at);
      ideal = poly_list(rings->x, body, at);
      have_ideal = true;
    } else if (keyword == "dualpoly") {
      if (dual) throw ParseError("dualpoly declared twice", at);
      dual = ExprParser(rings->y, body, at).parse_all();
      if (dual->is_zero()) throw ParseError("dualpoly is zero", at);
    } else if (keyword == "layer") {
      layers.push_back(poly_list(rings->y, body, at));
    } else {
      throw ParseError("unknown statement '" + std::string(keyword) + "'", at);
    }
  }
  if (!rings) throw ParseError("no vars declaration", line);
  if (!have_ideal) throw ParseError("no ideal declaration", line);
  bool nonzero = false;
  for (const auto& f : ideal) nonzero = nonzero || !f.is_zero();
  if (!nonzero) throw ParseError("ideal has no nonzero generator", line);
  return ProblemFile{*rings, std::move(ideal), std::move(dual), std::move(layers)};
}

std::string to_problem_text(const ProblemFile& p) {
  std::ostringstream out;
  out << "vars ";
  for (std::size_t i = 0; i < p.rings.size(); ++i) out << (i ? "," : "") << p.rings.x->name(i);
  out << ";\nideal ";
  for (std::size_t i = 0; i < p.ideal.size(); ++i) out << (i ? ", " : "") << p.ideal[i].to_string();
  out << ";\n";
  if (p.dualpoly) out << "dualpoly " << p.dualpoly->to_string() << ";\n";
  for (const auto& l : p.layers) {
    out << "layer ";
    for (std::size_t i = 0; i < l.size(); ++i) out << (i ? ", " : "") << l[i].to_string();
    out << ";\n";
  }
  return out.str();
}

nlohmann::json generator_array(std::span<const Poly> polys) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

namespace {

void render(std::ostringstream& out, const Document& doc, const std::string& indent) {
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      out << indent << "// " << key << "\n";
      render(out, value, indent + "  ");
    } else if (value.is_array()) {
      out << indent << key << ";\n";
      std::size_t i = 1;
      for (const auto& v : value) {
        out << indent << "_[" << i++ << "]=";
        if (v.is_string()) {
          out << v.get<std::string>() << "\n";
        } else {
          out << v.dump() << "\n";
        }
      }
      if (value.empty()) out << indent << "_[1]=0\n";
    } else {
      out << indent << key << ";\n" << indent << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Document& doc) {
  std::ostringstream out;
  render(out, doc, "");
  return out.str();
}

}  // namespace gorcover
