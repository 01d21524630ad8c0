#include "primeul/cli/cli.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "primeul/arrangement/builders.hpp"
#include "primeul/coxstats/coxstats.hpp"
#include "primeul/errors.hpp"
#include "primeul/exactmath/roots.hpp"
#include "primeul/fanface/fan.hpp"
#include "primeul/peul/peul.hpp"

namespace primeul::cli {

using arr::Arrangement;
using exact::BigInt;
using exact::IntPoly;
using exact::RatVector;
using json = nlohmann::ordered_json;

namespace {

struct Source {
  Arrangement a;
  std::string label;
  std::optional<std::string> family;
};

Source load(const std::string& family, const std::string& file) {
  if (family.empty() == file.empty()) throw ParseError("give exactly one of --family or --file");
  if (!family.empty()) return {arr::parse_family(family), family, family};
  return {arr::read_arrangement_file(file), file, std::nullopt};
}

RatVector parse_vector(const std::string& text, std::size_t dim) {
  RatVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(exact::parse_rational(item));
  if (v.size() != dim) throw ParseError("--v has " + std::to_string(v.size()) + " entries, expected " + std::to_string(dim));
  return v;
}

std::string vector_text(const RatVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + exact::to_string(v[i]);
  return s;
}

json coeffs_json(const IntPoly& p) {
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(x.get_str());
  return c;
}

// Psi(w) = w^r P(1 + 1/w), the inverse of the reparametrization.
IntPoly cochar_from_peul(const IntPoly& p, std::size_t r) {
  IntPoly psi;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    psi += p.coeffs()[i] * (IntPoly{1, 1}.pow(static_cast<unsigned>(i)) * IntPoly::monomial(1, r - i));
  return psi;
}

RatVector choose_vector(const Source& s, const arr::FlatLattice& lat, const std::string& v_text, unsigned long long seed,
                        bool need_very_generic) {
  if (!v_text.empty()) {
    RatVector v = parse_vector(v_text, s.a.dim());
    if (!need_very_generic) return v;
    return v;  // the path itself reports a non-generic v
  }
  std::vector<RatVector> candidates;
  if (s.family)
    if (auto c = peul::canonical_vector(*s.family)) candidates.push_back(*c);
  return peul::find_very_generic(s.a, lat, candidates, seed).v;
}

std::string rank1_text(const arr::Flat& x) {
  std::string s = "span{";
  const auto& b = x.subspace.basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    s += (i ? ", (" : "(");
    for (std::size_t j = 0; j < b.cols(); ++j) s += (j ? "," : "") + exact::to_string(b(i, j));
    s += ")";
  }
  return s + "}";
}

std::string verdict(const Arrangement& a, const arr::FlatLattice& lat, const RatVector& v) {
  const auto rep = arr::genericity(a, lat, v);
  if (rep.very_generic()) return "very generic";
  if (!rep.orthogonal_to_bottom) return "not halfspace generic; v not orthogonal to the bottom";
  if (rep.kills_rank1_flat)
    return "not halfspace generic; v^perp contains the rank-1 flat " + rank1_text(lat[*rep.kills_rank1_flat]);
  return "halfspace generic; v on wall " + arr::hyperplane_equation(a[*rep.on_hyperplane]);
}

// ---- poly ----

struct PolyArgs {
  std::string family, file, which = "peul", method = "auto", v;
  bool json = false;
  unsigned long long seed = 0x5eed;
};

int cmd_poly(const PolyArgs& p, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const Source s = load(p.family, p.file);
  std::string method = p.method;
  if (method == "auto") method = p.which == "eulerian" ? "descents" : "mobius";
  IntPoly result;
  std::optional<RatVector> used_v;
  const std::size_t r = s.a.rank();

  if (p.which == "char") {
    if (method != "mobius") throw PreconditionError("char is only computed by the mobius method");
    result = arr::characteristic_polynomial(s.a);
  } else if (p.which == "eulerian") {
    if (method != "descents") throw PreconditionError("eulerian is only computed by the descents method");
    result = peul::eulerian_poly(s.a);
  } else if (method == "mobius") {
    result = p.which == "peul" ? peul::peul_mobius(s.a) : peul::cocharacteristic(s.a);
  } else if (method == "recursive") {
    result = peul::peul_recursive(s.a);
    if (p.which == "cochar") result = cochar_from_peul(result, r);
  } else if (method == "halfspace" || method == "descents") {
    const auto fan = fan::enumerate_faces(s.a);
    used_v = choose_vector(s, fan.lattice(), p.v, p.seed, method == "descents");
    if (method == "halfspace") {
      result = peul::cochar_via_halfspace(fan, *used_v);
      if (p.which == "peul") result = peul::peul_from_cochar(result, r);
    } else {
      if (!fan::is_simplicial(fan)) throw PreconditionError("not simplicial");
      result = peul::peul_via_descents(fan, *used_v);
      if (p.which == "cochar") result = cochar_from_peul(result, r);
    }
  } else {
    throw ParseError("unknown method " + method);
  }

  const std::string var = p.which == "char" ? "t" : "z";
  if (p.json) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    json j;
    j["family"] = s.label;
    j["which"] = p.which;
    j["method"] = method;
    j["coeffs_low_to_high"] = coeffs_json(result);
    j["polynomial"] = result.to_string(var);
    if (used_v) j["v"] = vector_text(*used_v);
    j["runtime_ms"] = ms;
    out << j.dump(2) << "\n";
  } else {
    out << result.to_string(var) << "\n";
  }
  return kExitOk;
}

// ---- verify ----

void add(std::vector<Check>& out, std::string name, bool pass, std::string detail = {}) {
  out.push_back({std::move(name), pass, std::move(detail)});
}

const std::vector<std::string>& builtin_families() {
  static const std::vector<std::string> f = {
      "A 2",     "A 3",     "A 4",     "A 5",   "B 2",   "B 3",   "B 4",   "D 3",  "D 4",  "Dnk 3 1",
      "Dnk 3 2", "Dnk 4 1", "Dnk 4 3", "I2 3",  "I2 4",  "I2 5",  "I2 6",  "Gn 2", "Gn 3", "Gn 4",
      "graphic 4 1-2,2-3,3-4,4-1",     "graphic 4 1-2,2-3,3-4,4-1,1-3"};
  return f;
}

void suite_paths(const VerifyOptions& opt, std::vector<Check>& out) {
  auto families = builtin_families();
  if (opt.long_tier) families.push_back("F4");
  for (const auto& name : families) {
    const Arrangement a = arr::parse_family(name);
    if (a.rank() > opt.max_rank) continue;
    try {
      const auto fan = fan::enumerate_faces(a);
      std::vector<RatVector> cand;
      if (auto c = peul::canonical_vector(name)) cand.push_back(*c);
      const auto v = peul::find_very_generic(a, fan.lattice(), cand, opt.seed).v;
      const IntPoly m = peul::peul_mobius(fan.lattice());
      const IntPoly rec = peul::peul_recursive(a);
      const IntPoly half = peul::peul_from_cochar(peul::cochar_via_halfspace(fan, v), a.rank());
      bool ok = m == rec && m == half;
      std::string detail = "P = " + m.to_string();
      if (fan::is_simplicial(fan)) {
        ok = ok && peul::peul_via_descents(fan, v) == m;
        detail += ", four paths";
      } else {
        detail += ", three paths (not simplicial)";
      }
      add(out, "paths " + name, ok, detail);
    } catch (const std::exception& e) {
      add(out, "paths " + name, false, e.what());
    }
  }
}

void suite_recursions(const VerifyOptions&, std::vector<Check>& out) {
  bool b = true, d = true;
  for (int n = 0; n <= 8; ++n) {
    const IntPoly pb = cox::peul_B_rec(n);
    b = b && pb == cox::peul_B_diffrec(n) && pb == cox::half_eulerian(n).reversed(static_cast<std::size_t>(n));
    d = d && cox::peul_dnk(n, n) == pb;
    if (n >= 2) d = d && cox::peul_dnk(n, 0) == cox::peul_D_rec(n);
  }
  add(out, "type B recursion = differential recurrence = reversed half-Eulerian, n <= 8", b);
  add(out, "D_{n,0} = D_n and D_{n,n} = B_n, n <= 8", d);
  bool a = cox::peul_A(1) == IntPoly::constant(1);
  for (int n = 2; n <= 8; ++n) a = a && cox::peul_A(n) == IntPoly::z() * cox::eulerian_A(n - 1);
  add(out, "P_{A_n} = z E_{A_{n-1}}, n <= 8", a);
}

void suite_statistics(const VerifyOptions& opt, std::vector<Check>& out) {
  for (int n = 1; n <= opt.n_max; ++n) {
    const auto ns = std::to_string(n);
    const IntPoly a = cox::peul_A(n);
    add(out, "type A exc and des, n = " + ns, cox::peul_A_exc(n) == a && cox::peul_A_des(n) == a);
    const IntPoly b = cox::peul_B_rec(n);
    add(out, "type B exc_B and des_B, n = " + ns, cox::peul_B_excB(n) == b && cox::peul_B_des(n) == b);
    if (n >= 2) add(out, "type D des_D, n = " + ns, cox::peul_D_des(n) == cox::peul_D_rec(n));
  }
}

void suite_egf(const VerifyOptions& opt, std::vector<Check>& out) {
  add(out, "generating functions to order " + std::to_string(opt.order), cox::generating_function_check(opt.order));
  add(out, "binomial identities, n <= " + std::to_string(opt.order),
      cox::binomial_identity_checks(static_cast<int>(opt.order)));
}

void suite_roots(const VerifyOptions& opt, std::vector<Check>& out) {
  bool b = true, d = true, dnk = true;
  for (int n = 1; n <= opt.dn_max; ++n) {
    b = b && exact::is_real_rooted(cox::peul_B_rec(n));
    if (n >= 2) d = d && exact::is_real_rooted(cox::peul_D_rec(n));
    for (int k = n == 1 ? 1 : 0; k <= n; ++k) dnk = dnk && exact::is_real_rooted(cox::peul_dnk(n, k));
  }
  const auto bound = std::to_string(opt.dn_max);
  add(out, "P_{B_n} real-rooted, n <= " + bound, b);
  add(out, "P_{D_n} real-rooted, n <= " + bound, d);
  add(out, "P_{D_{n,k}} real-rooted, n <= " + bound, dnk);
  for (const auto& e : cox::exceptional_table()) add(out, e.name + " real-rooted", exact::is_real_rooted(e.peul));
  const IntPoly g4 = peul::peul_recursive(arr::generic_gn(4));
  add(out, "G_4 is not real-rooted", !exact::is_real_rooted(g4), "P = " + g4.to_string());
}

// ---- table ----

std::pair<int, int> parse_range(const std::string& text, std::pair<int, int> fallback) {
  if (text.empty()) return fallback;
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParseError("bad range '" + text + "', expected a..b");
  }
}

int cmd_table(const std::string& family, const std::string& range, bool as_json, bool long_tier, std::ostream& out) {
  json rows = json::array();
  std::ostringstream text;
  if (family == "B" || family == "D") {
    const bool b = family == "B";
    const auto [lo, hi] = parse_range(range, b ? std::pair{0, 5} : std::pair{2, 7});
    if (lo < 0 || hi > 30 || lo > hi) throw PreconditionError("range must lie within 0..30");
    text << "n  P_" << family << "n(z)\n";
    for (int n = lo; n <= hi; ++n) {
      const IntPoly p = b ? cox::peul_B_rec(n) : cox::peul_D_rec(n);
      text << std::setw(2) << n << "  " << p.to_string() << "\n";
      rows.push_back({{"n", n}, {"coeffs_low_to_high", coeffs_json(p)}, {"polynomial", p.to_string()}});
    }
  } else if (family == "exceptional") {
    if (!range.empty()) throw PreconditionError("the exceptional table takes no range");
    text << "type  P(z)  source\n";
    for (const auto& e : cox::exceptional_table()) {
      std::string source;
      if (!e.realizable) {
        source = "golden (irrational realization out of scope)";
      } else if (e.name == "E8" || ((e.name == "E7") && !long_tier)) {
        source = e.name == "E8" ? "golden (not desk-scale)" : "golden (computed only with --long)";
      } else {
        const IntPoly p = peul::peul_mobius(arr::root_system(e.name));
        source = p == e.peul ? "computed, matches" : "computed, MISMATCH: " + p.to_string();
      }
      text << e.name << "  " << e.peul.to_string() << "  " << source << "\n";
      rows.push_back({{"type", e.name},
                      {"coeffs_low_to_high", coeffs_json(e.peul)},
                      {"polynomial", e.peul.to_string()},
                      {"realizable", e.realizable},
                      {"source", source}});
    }
  } else {
    throw ParseError("table family must be B, D or exceptional");
  }
  if (as_json)
    out << json{{"table", family}, {"rows", rows}}.dump(2) << "\n";
  else
    out << text.str();
  return kExitOk;
}

// ---- inspect ----

int cmd_inspect(const std::string& family, const std::string& file, const std::string& v_text, bool as_json,
                std::ostream& out) {
  const Source s = load(family, file);
  const auto fan = fan::enumerate_faces(s.a);
  const auto& lat = fan.lattice();
  std::vector<std::size_t> flats_by_grade(lat.rank() + 1, 0);
  for (const auto& x : lat.flats()) ++flats_by_grade[x.grade];
  std::map<std::size_t, std::size_t> faces_by_dim;
  for (const auto& f : fan.faces()) ++faces_by_dim[f.dim];
  const bool simplicial = fan::is_simplicial(fan);
  const bool sharp = simplicial && fan::is_sharp(fan);
  std::optional<std::string> v_verdict;
  if (!v_text.empty()) v_verdict = verdict(s.a, lat, parse_vector(v_text, s.a.dim()));

  if (as_json) {
    json j;
    j["source"] = s.label;
    j["ambient_dim"] = s.a.dim();
    j["rank"] = s.a.rank();
    j["hyperplanes"] = s.a.size();
    j["flats_by_grade"] = flats_by_grade;
    j["regions"] = fan.regions().size();
    json fd = json::object();
    for (auto [d, c] : faces_by_dim) fd[std::to_string(d)] = c;
    j["faces_by_dim"] = fd;
    j["simplicial"] = simplicial;
    j["sharp"] = sharp;
    if (v_verdict) j["v"] = *v_verdict;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "source: " << s.label << "\n";
  out << "ambient dimension: " << s.a.dim() << "\n";
  out << "rank: " << s.a.rank() << "\n";
  out << "hyperplanes: " << s.a.size() << "\n";
  out << "flats by grade:";
  for (auto c : flats_by_grade) out << " " << c;
  out << "\nregions: " << fan.regions().size() << "\n";
  out << "faces by dimension:";
  for (auto [d, c] : faces_by_dim) out << " " << d << ":" << c;
  out << "\nsimplicial: " << (simplicial ? "true" : "false") << "\n";
  out << "sharp: " << (sharp ? "true" : "false") << "\n";
  if (v_verdict) out << "v: " << *v_verdict << "\n";
  return kExitOk;
}

}  // namespace

std::vector<Check> verify_suite(const std::string& suite, const VerifyOptions& opt) {
  std::vector<Check> out;
  const bool all = suite == "all";
  if (!all && suite != "paths" && suite != "recursions" && suite != "statistics" && suite != "egf" && suite != "roots")
    throw ParseError("unknown suite " + suite);
  if (all || suite == "paths") suite_paths(opt, out);
  if (all || suite == "recursions") suite_recursions(opt, out);
  if (all || suite == "statistics") suite_statistics(opt, out);
  if (all || suite == "egf") suite_egf(opt, out);
  if (all || suite == "roots") suite_roots(opt, out);
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primitive Eulerian polynomials of central hyperplane arrangements", "primeul"};
  app.require_subcommand(1);

  PolyArgs pa;
  auto* poly = app.add_subcommand("poly", "compute a polynomial of an arrangement");
  poly->add_option("--family", pa.family, "family string, e.g. \"B 3\"");
  poly->add_option("--file", pa.file, "arrangement file");
  poly->add_option("--which", pa.which)->check(CLI::IsMember({"peul", "cochar", "char", "eulerian"}));
  poly->add_option("--method", pa.method)->check(CLI::IsMember({"mobius", "recursive", "halfspace", "descents", "auto"}));
  poly->add_option("--v", pa.v, "comma separated rationals");
  poly->add_option("--seed", pa.seed);
  poly->add_flag("--json", pa.json);

  std::string suite;
  VerifyOptions vo;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", suite)->required()->check(
      CLI::IsMember({"paths", "recursions", "statistics", "egf", "roots", "all"}));
  verify->add_option("--max-rank", vo.max_rank);
  verify->add_option("--order", vo.order);
  verify->add_option("--dn-max", vo.dn_max);
  verify->add_option("--n-max", vo.n_max);
  verify->add_option("--seed", vo.seed);
  verify->add_flag("--long", vo.long_tier);
  verify->add_flag("--json", verify_json);

  std::string table_family, table_range;
  bool table_json = false, table_long = false;
  auto* table = app.add_subcommand("table", "print a table of polynomials");
  table->add_option("family", table_family)->required();
  table->add_option("range", table_range, "a..b");
  table->add_flag("--json", table_json);
  table->add_flag("--long", table_long);

  std::string ifamily, ifile, iv;
  bool inspect_json = false;
  auto* inspect = app.add_subcommand("inspect", "structural report");
  inspect->add_option("--family", ifamily);
  inspect->add_option("--file", ifile);
  inspect->add_option("--v", iv);
  inspect->add_flag("--json", inspect_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*poly) return cmd_poly(pa, out);
    if (*table) return cmd_table(table_family, table_range, table_json, table_long, out);
    if (*inspect) return cmd_inspect(ifamily, ifile, iv, inspect_json, out);
    const auto checks = verify_suite(suite, vo);
    std::size_t passed = 0;
    json arr = json::array();
    for (const auto& c : checks) {
      passed += c.pass;
      if (verify_json) {
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      } else {
        out << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << "  [" << c.detail << "]";
        out << "\n";
      }
    }
    if (verify_json)
      out << json{{"suite", suite}, {"checks", arr}, {"passed", passed}, {"total", checks.size()}}.dump(2) << "\n";
    else
      out << passed << "/" << checks.size() << " checks passed\n";
    return passed == checks.size() ? kExitOk : kExitFailed;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  }
}

}  // namespace primeul::cli
