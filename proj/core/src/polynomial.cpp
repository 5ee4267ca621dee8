#include "kohn/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace kohn {

const char* var_name(Var v) {
  switch (v) {
    case Var::z1: return "z1";
    case Var::z2: return "z2";
    case Var::zb1: return "zb1";
    case Var::zb2: return "zb2";
  }
  throw std::logic_error("unreachable");
}

Var conj_var(Var v) {
  switch (v) {
    case Var::z1: return Var::zb1;
    case Var::z2: return Var::zb2;
    case Var::zb1: return Var::z1;
    case Var::zb2: return Var::z2;
  }
  throw std::logic_error("unreachable");
}

int Monomial::exponent(Var v) const {
  switch (v) {
    case Var::z1: return a1;
    case Var::z2: return a2;
    case Var::zb1: return b1;
    case Var::zb2: return b2;
  }
  throw std::logic_error("unreachable");
}

Monomial Monomial::with_exponent(Var v, int e) const {
  Monomial m = *this;
  switch (v) {
    case Var::z1: m.a1 = e; break;
    case Var::z2: m.a2 = e; break;
    case Var::zb1: m.b1 = e; break;
    case Var::zb2: m.b2 = e; break;
  }
  return m;
}

Polynomial Polynomial::constant(ComplexRational c) {
  Polynomial p;
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, ComplexRational c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(Var v) {
  return term(Monomial{}.with_exponent(v, 1), ComplexRational(1));
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    if (d < 0) d = m.degree();
    else if (m.degree() != d) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> Polynomial::bidegree() const {
  std::optional<std::pair<int, int>> bd;
  for (const auto& [m, c] : terms_) {
    const std::pair<int, int> here{m.holo_degree(), m.anti_degree()};
    if (!bd) bd = here;
    else if (*bd != here) return std::nullopt;
  }
  return bd;  // nullopt for the zero polynomial
}

ComplexRational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? ComplexRational() : it->second;
}

void Polynomial::add_term(const Monomial& m, const ComplexRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p;
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  Polynomial result;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      const Monomial m{ma.a1 + mb.a1, ma.a2 + mb.a2, ma.b1 + mb.b1, ma.b2 + mb.b2};
      result.add_term(m, ca * cb);
    }
  }
  *this = std::move(result);
  return *this;
}

Polynomial& Polynomial::operator*=(const ComplexRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

namespace {

void append_factor(std::string& out, Var v, int e) {
  if (e == 0) return;
  if (!out.empty()) out += ' ';
  out += var_name(v);
  if (e > 1) {
    out += '^';
    out += std::to_string(e);
  }
}

// --- parsing helpers ---

// Splits on '+' at paren depth zero.
std::vector<std::string> split_terms(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

Var parse_var(const std::string& name) {
  if (name == "z1") return Var::z1;
  if (name == "z2") return Var::z2;
  if (name == "zb1") return Var::zb1;
  if (name == "zb2") return Var::zb2;
  throw std::invalid_argument("unknown variable '" + name + "'");
}

// One term: [coeff] ['*'] [var[^exp] ...]
std::pair<Monomial, ComplexRational> parse_term(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw std::invalid_argument("empty term in polynomial literal");

  ComplexRational coeff(1);
  bool have_coeff = false;

  if (s[0] == '(') {
    const auto close = s.find(')');
    if (close == std::string::npos) throw std::invalid_argument("unbalanced '(' in: " + raw);
    const std::string inside = s.substr(1, close - 1);
    const auto comma = inside.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("complex coefficient needs \"(re, im)\": " + raw);
    coeff = ComplexRational(rational_from_string(inside.substr(0, comma)),
                            rational_from_string(inside.substr(comma + 1)));
    have_coeff = true;
    s = trim(s.substr(close + 1));
  } else if (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-' || s[0] == '+' ||
             s[0] == '.') {
    size_t end = 0;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t' && s[end] != '*') ++end;
    coeff = ComplexRational(rational_from_string(s.substr(0, end)));
    have_coeff = true;
    s = trim(s.substr(end));
  }

  if (!s.empty() && s[0] == '*') {
    if (!have_coeff) throw std::invalid_argument("stray '*' in term: " + raw);
    s = trim(s.substr(1));
    if (s.empty()) throw std::invalid_argument("'*' without factors in term: " + raw);
  }

  Monomial m;
  std::istringstream factors(s);
  std::string tok;
  while (factors >> tok) {
    const auto caret = tok.find('^');
    const std::string name = caret == std::string::npos ? tok : tok.substr(0, caret);
    int exp = 1;
    if (caret != std::string::npos) {
      const std::string e = tok.substr(caret + 1);
      if (e.empty()) throw std::invalid_argument("missing exponent in '" + tok + "'");
      exp = std::stoi(e);
      if (exp < 0) throw std::invalid_argument("negative exponent in '" + tok + "'");
    }
    const Var v = parse_var(name);
    m = m.with_exponent(v, m.exponent(v) + exp);
  }
  return {m, coeff};
}

}  // namespace

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    std::string factors;
    append_factor(factors, Var::z1, m.a1);
    append_factor(factors, Var::z2, m.a2);
    append_factor(factors, Var::zb1, m.b1);
    append_factor(factors, Var::zb2, m.b2);
    out += to_string(c);
    if (!factors.empty()) {
      out += " * ";
      out += factors;
    }
  }
  return out;
}

Polynomial polynomial_from_string(const std::string& text) {
  const std::string body = trim(text);
  if (body.empty()) throw std::invalid_argument("empty polynomial literal");
  Polynomial p;
  for (const auto& chunk : split_terms(body)) {
    const auto [m, c] = parse_term(chunk);
    p.add_term(m, c);
  }
  return p;
}

}  // namespace kohn
