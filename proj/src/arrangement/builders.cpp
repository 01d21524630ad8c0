#include "primeul/arrangement/builders.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "primeul/errors.hpp"

namespace primeul::arr {

namespace {

RatVector unit(std::size_t n, std::size_t i) {
  RatVector v(n, Rational(0));
  v[i] = 1;
  return v;
}

RatVector pair_normal(std::size_t n, std::size_t i, std::size_t j, int s) {
  RatVector v(n, Rational(0));
  v[i] = 1;
  v[j] = s;
  return v;
}

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

// Hyperplanes of E8 in the even coordinate system, optionally only those
// orthogonal to every vector in `perp`.
Arrangement e8_sub(const std::vector<RatVector>& perp) {
  const std::size_t n = 8;
  std::vector<RatVector> roots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      roots.push_back(pair_normal(n, i, j, -1));
      roots.push_back(pair_normal(n, i, j, 1));
    }
  }
  // (1, s_2, ..., s_8) with an even number of minus signs
  for (unsigned mask = 0; mask < 128; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    RatVector v(n, Rational(1));
    for (std::size_t k = 0; k < 7; ++k) {
      if (mask >> (6 - k) & 1u) v[k + 1] = -1;
    }
    roots.push_back(v);
  }
  Arrangement a(n);
  for (const auto& r : roots) {
    bool keep = true;
    for (const auto& p : perp) keep = keep && sgn(exact::dot(r, p)) == 0;
    if (keep) a.add(r);
  }
  return a;
}

std::size_t parse_count(const std::string& tok) {
  if (tok.empty() || tok.size() > 9) throw ParseError("bad number '" + tok + "'");
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad number '" + tok + "'");
  }
  return std::stoul(tok);
}

std::string strip_comment(std::string line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  return line;
}

}  // namespace

Arrangement braid(std::size_t n) {
  require(n >= 1, "braid arrangement needs n >= 1");
  Arrangement a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a.add(pair_normal(n, i, j, -1));
  return a;
}

Arrangement type_d(std::size_t n) {
  require(n >= 2, "type D arrangement needs n >= 2");
  Arrangement a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      a.add(pair_normal(n, i, j, -1));
      a.add(pair_normal(n, i, j, 1));
    }
  }
  return a;
}

Arrangement type_b(std::size_t n) {
  require(n >= 1, "type B arrangement needs n >= 1");
  Arrangement a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      a.add(pair_normal(n, i, j, -1));
      a.add(pair_normal(n, i, j, 1));
    }
  }
  for (std::size_t i = 0; i < n; ++i) a.add(unit(n, i));
  return a;
}

Arrangement type_dnk(std::size_t n, std::size_t k) {
  require(n >= 2 && k <= n, "D_{n,k} needs n >= 2 and 0 <= k <= n");
  Arrangement a = type_d(n);
  for (std::size_t i = 0; i < k; ++i) a.add(unit(n, i));
  return a;
}

Arrangement rank2(std::size_t k) {
  require(k >= 2, "rank-2 arrangement needs k >= 2");
  Arrangement a(2);
  a.add({0, 1});
  a.add({1, 0});
  for (std::size_t s = 1; s + 2 <= k; ++s) a.add({Rational(static_cast<long>(s)), -1});
  return a;
}

Arrangement graphic(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  require(n >= 1, "graphic arrangement needs n >= 1");
  Arrangement a(n);
  for (auto [i, j] : edges) {
    require(i >= 1 && j >= 1 && i <= n && j <= n && i != j, "edge endpoints must be distinct vertices in 1..n");
    a.add(pair_normal(n, std::min(i, j) - 1, std::max(i, j) - 1, -1));
  }
  return a;
}

Arrangement generic_gn(std::size_t n) {
  require(n >= 2, "generic arrangement G_n needs n >= 2");
  Arrangement a = coordinate(n);
  a.add(RatVector(n, Rational(1)));
  return a;
}

Arrangement coordinate(std::size_t n) {
  Arrangement a(n);
  for (std::size_t i = 0; i < n; ++i) a.add(unit(n, i));
  return a;
}

Arrangement root_system(std::string_view name) {
  if (name == "F4") {
    Arrangement a(4);
    for (std::size_t i = 0; i < 4; ++i) a.add(unit(4, i));
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        a.add(pair_normal(4, i, j, -1));
        a.add(pair_normal(4, i, j, 1));
      }
    }
    for (unsigned mask = 0; mask < 8; ++mask) {
      RatVector v(4, Rational(1));
      for (std::size_t k = 0; k < 3; ++k) {
        if (mask >> (2 - k) & 1u) v[k + 1] = -1;
      }
      a.add(v);
    }
    return a;
  }
  const RatVector theta(8, Rational(1));  // twice the root (1/2, ..., 1/2)
  if (name == "E8") return e8_sub({});
  if (name == "E7") return e8_sub({theta});
  if (name == "E6") {
    RatVector w(8, Rational(0));
    w[6] = w[7] = 1;
    return e8_sub({theta, w});
  }
  throw PreconditionError("unknown root system '" + std::string(name) + "'");
}

Arrangement parse_family(std::string_view spec) {
  std::istringstream in{std::string(spec)};
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  if (tok.empty()) throw ParseError("empty family string");
  const std::string& f = tok[0];
  auto arity = [&](std::size_t k) {
    if (tok.size() != k + 1) throw ParseError("family '" + f + "' takes " + std::to_string(k) + " parameter(s)");
  };
  try {
    if (f == "A") return arity(1), braid(parse_count(tok[1]));
    if (f == "B") return arity(1), type_b(parse_count(tok[1]));
    if (f == "D") return arity(1), type_d(parse_count(tok[1]));
    if (f == "Dnk") return arity(2), type_dnk(parse_count(tok[1]), parse_count(tok[2]));
    if (f == "I2") return arity(1), rank2(parse_count(tok[1]));
    if (f == "Gn") return arity(1), generic_gn(parse_count(tok[1]));
    if (f == "F4" || f == "E6" || f == "E7" || f == "E8") return arity(0), root_system(f);
    if (f == "graphic") {
      if (tok.size() < 2) throw ParseError("graphic needs a vertex count");
      const std::size_t n = parse_count(tok[1]);
      std::string list;
      for (std::size_t i = 2; i < tok.size(); ++i) list += tok[i];
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      std::istringstream es(list);
      for (std::string e; std::getline(es, e, ',');) {
        if (e.empty()) continue;
        const auto dash = e.find('-');
        if (dash == std::string::npos) throw ParseError("edge '" + e + "' is not of the form i-j");
        edges.emplace_back(parse_count(e.substr(0, dash)), parse_count(e.substr(dash + 1)));
      }
      return graphic(n, edges);
    }
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(spec) + ": " + e.what());
  }
  throw ParseError("unknown family '" + f + "'");
}

Arrangement parse_arrangement(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<Arrangement> a;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    line = strip_comment(line);
    for (auto& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (!a) {
      if (tok.size() != 1) throw ParseError(where + "expected the ambient dimension");
      a.emplace(parse_count(tok[0]));
      continue;
    }
    if (tok.size() != a->dim()) {
      throw ParseError(where + "expected " + std::to_string(a->dim()) + " coordinates");
    }
    RatVector n;
    for (const auto& t : tok) n.push_back(exact::parse_rational(t));
    try {
      a->add(std::move(n));
    } catch (const PreconditionError& e) {
      throw ParseError(where + e.what());
    }
  }
  if (!a) throw ParseError("missing ambient dimension");
  return *a;
}

Arrangement read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str());
}

std::string format_arrangement(const Arrangement& a) {
  std::string out = std::to_string(a.dim()) + "\n";
  for (const auto& h : a.hyperplanes()) {
    for (std::size_t i = 0; i < h.normal.size(); ++i) out += (i ? " " : "") + h.normal[i].get_str();
    out += "\n";
  }
  return out;
}

}  // namespace primeul::arr
