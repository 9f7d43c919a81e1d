#include "hodge/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace hodge {

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }
  long integer() {
    std::string d = digits();
    if (d.size() > 9)
      fail("integer too large");
    return std::stol(d);
  }
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError("parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Rational parse_number(Cursor &c) {
  Rational v(c.digits());
  if (c.accept('/')) {
    Rational den(c.digits());
    if (sgn(den) == 0)
      c.fail("zero denominator");
    v /= den;
  }
  v.canonicalize();
  return v;
}

// factor := number | 'x' index ['^' integer]
void parse_factor(Cursor &c, int n, Rational &coef, Exponent &e) {
  char ch = c.peek();
  if (std::isdigit(static_cast<unsigned char>(ch))) {
    coef *= parse_number(c);
    return;
  }
  if (!c.accept('x'))
    c.fail("expected number or variable");
  long var = c.integer();
  if (var < 1 || var > n)
    c.fail("variable x" + std::to_string(var) + " out of range for n=" + std::to_string(n));
  long power = 1;
  if (c.accept('^'))
    power = c.integer();
  e[var - 1] += static_cast<int>(power);
}

std::string format_monomial(const Exponent &e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0)
      continue;
    if (!first)
      os << "*";
    first = false;
    os << "x" << i + 1;
    if (e[i] > 1)
      os << "^" << e[i];
  }
  return os.str();
}

int total(const Exponent &e) {
  int s = 0;
  for (int a : e)
    s += a;
  return s;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return "";
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Parses `key=value` where value runs to the next ';' or end.
std::string field(const std::string &line, const std::string &key, std::size_t &pos) {
  auto eq = line.find('=', pos);
  if (eq == std::string::npos || trim(line.substr(pos, eq - pos)) != key)
    throw ParseError("expected '" + key + "=' in line: " + line);
  auto end = line.find(';', eq);
  std::string value = trim(line.substr(eq + 1, end == std::string::npos ? std::string::npos : end - eq - 1));
  pos = end == std::string::npos ? line.size() : end + 1;
  return value;
}

int parse_small_int(const std::string &s, const std::string &what) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), ::isdigit))
    throw ParseError("invalid " + what + ": '" + s + "'");
  return std::stoi(s);
}

} // namespace

Polynomial parse_polynomial(std::string_view text, int n) {
  if (n < 1)
    throw ParseError("dimension must be positive");
  Cursor c(text);
  Polynomial p(n);
  if (c.done())
    c.fail("empty polynomial");
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    if (c.accept('-'))
      sign = -1;
    else if (!c.accept('+') && !first)
      c.fail("expected '+' or '-'");
    first = false;
    Rational coef = sign;
    Exponent e(n, 0);
    parse_factor(c, n, coef, e);
    while (c.accept('*'))
      parse_factor(c, n, coef, e);
    p.add_term(e, coef);
  }
  return p;
}

std::string format_polynomial(const Polynomial &p) {
  if (p.is_zero())
    return "0";
  std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) {
    int da = total(a.first), db = total(b.first);
    if (da != db)
      return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : terms) {
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    std::string mono = format_monomial(e);
    if (mono.empty())
      os << mag.get_str();
    else if (mag == 1)
      os << mono;
    else
      os << mag.get_str() << "*" << mono;
  }
  return os.str();
}

PolyForm parse_polyform(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int n = -1, k = -1;
  std::optional<PolyForm> form;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty())
      continue;
    try {
      std::size_t pos = 0;
      if (!form) {
        if (line.rfind("n", 0) != 0)
          throw ParseError("expected 'n=..; k=..' header");
        n = parse_small_int(field(line, "n", pos), "n");
        k = parse_small_int(field(line, "k", pos), "k");
        if (n < 1 || k > n)
          throw ParseError("need n >= 1 and 0 <= k <= n");
        form.emplace(n, k);
        continue;
      }
      std::string idx = field(line, "idx", pos);
      if (idx.size() < 2 || idx.front() != '[' || idx.back() != ']')
        throw ParseError("idx must be a bracketed list");
      std::vector<int> axes;
      std::string inner = idx.substr(1, idx.size() - 2);
      std::stringstream items(inner);
      std::string item;
      while (std::getline(items, item, ',')) {
        item = trim(item);
        if (item.empty() && inner.find_first_not_of(' ') == std::string::npos)
          break;
        int a = parse_small_int(item, "axis");
        if (a < 1 || a > n)
          throw ParseError("axis " + item + " out of range");
        axes.push_back(a - 1);
      }
      if (static_cast<int>(axes.size()) != k)
        throw ParseError("index degree does not match k");
      for (std::size_t i = 1; i < axes.size(); ++i)
        if (axes[i - 1] >= axes[i])
          throw ParseError("idx must be strictly increasing");
      Polynomial poly = parse_polynomial(field(line, "poly", pos), n);
      if (pos < line.size() && !trim(line.substr(pos)).empty())
        throw ParseError("trailing text");
      form->add(FormIndex(n, axes), poly);
    } catch (const ParseError &e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!form)
    throw ParseError("missing 'n=..; k=..' header");
  return *form;
}

std::string format_polyform(const PolyForm &f) {
  std::ostringstream os;
  os << "n=" << f.dim() << "; k=" << f.degree() << "\n";
  for (const auto &[idx, p] : f.components()) {
    os << "idx=[";
    for (std::size_t i = 0; i < idx.axes().size(); ++i)
      os << (i ? "," : "") << idx.axes()[i] + 1;
    os << "]; poly=" << format_polynomial(p) << "\n";
  }
  return os.str();
}

} // namespace hodge
