#include "primeul/coxstats/coxstats.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "primeul/errors.hpp"
#include "primeul/exactmath/egf.hpp"

namespace primeul::cox {

using exact::BigInt;
using exact::RatPoly;
using exact::TruncatedEgf;

namespace {

void require_perm(const Word& w) {
  if (!is_permutation(w)) throw PreconditionError("not a permutation");
}

void require_signed(const Word& w) {
  if (!is_signed_permutation(w)) throw PreconditionError("not a signed permutation");
}

// value of w at i in 1..n (1-based)
int at(const Word& w, int i) { return i > 0 ? w[static_cast<std::size_t>(i - 1)] : -w[static_cast<std::size_t>(-i - 1)]; }

BigInt binom(unsigned long n, unsigned long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

BigInt pow2(unsigned long k) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
  return p;
}

IntPoly from_counts(const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> c;
  for (auto x : counts) c.emplace_back(static_cast<unsigned long>(x));
  return IntPoly(std::move(c));
}

void bump(std::vector<std::uint64_t>& counts, std::size_t d) {
  if (d >= counts.size()) counts.resize(d + 1, 0);
  ++counts[d];
}

IntPoly merge(const std::vector<std::vector<std::uint64_t>>& parts) {
  std::vector<std::uint64_t> total;
  for (const auto& p : parts) {
    if (p.size() > total.size()) total.resize(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) total[i] += p[i];
  }
  return from_counts(total);
}

std::vector<Word> collect_S(int n, const Filter& keep) {
  std::vector<Word> out;
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    if (keep(w)) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Word> collect_B(int n, const Filter& keep) {
  std::vector<Word> out;
  Word abs(static_cast<std::size_t>(n));
  std::iota(abs.begin(), abs.end(), 1);
  do {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Word w = abs;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
      if (keep(w)) out.push_back(std::move(w));
    }
  } while (std::next_permutation(abs.begin(), abs.end()));
  std::sort(out.begin(), out.end());
  return out;
}

void require_range(int n, int lo, const char* what) {
  if (n < lo) throw PreconditionError(std::string(what) + ": n out of range");
}

// Tables P_{B_0..n} and P_{D_0..n} by the quadratic recursions.
std::vector<IntPoly> b_table(int n) {
  std::vector<IntPoly> b{IntPoly::constant(1)};
  for (int m = 1; m <= n; ++m) {
    IntPoly p = IntPoly::z() * b[static_cast<std::size_t>(m - 1)];
    for (int k = 1; k <= m - 1; ++k) {
      p += binom(static_cast<unsigned long>(m - 1), static_cast<unsigned long>(k)) * pow2(static_cast<unsigned long>(k)) *
           (b[static_cast<std::size_t>(m - 1 - k)] * peul_A(k + 1));
    }
    b.push_back(std::move(p));
  }
  return b;
}

std::vector<IntPoly> d_table(int n) {
  const auto b = b_table(std::max(n - 2, 0));
  std::vector<IntPoly> d{IntPoly::constant(1), IntPoly()};
  const IntPoly zm1{-1, 1};
  for (int m = 2; m <= n; ++m) {
    IntPoly p = zm1 * zm1 * b[static_cast<std::size_t>(m - 2)];
    for (int k = 0; k <= m - 2; ++k) {
      const auto& d2 = d[static_cast<std::size_t>(m - 2 - k)];
      const auto& d1 = d[static_cast<std::size_t>(m - 1 - k)];
      const IntPoly a1 = peul_A(k + 1);
      const IntPoly term = zm1 * d2 * a1 + BigInt(2) * (d1 * a1) + d2 * peul_A(k + 2);
      p += binom(static_cast<unsigned long>(m - 2), static_cast<unsigned long>(k)) * pow2(static_cast<unsigned long>(k)) * term;
    }
    d.push_back(std::move(p));
  }
  d.resize(static_cast<std::size_t>(n) + 1);
  return d;
}

}  // namespace

bool is_permutation(const Word& w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (int x : w) {
    if (x < 1 || x > static_cast<int>(w.size()) || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

bool is_signed_permutation(const Word& w) {
  Word a;
  for (int x : w) a.push_back(std::abs(x));
  return is_permutation(a);
}

std::size_t des_A(const Word& w) {
  require_signed(w);
  std::size_t d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

std::size_t des_B(const Word& w) {
  require_signed(w);
  return des_A(w) + (!w.empty() && w[0] < 0);
}

std::size_t des_D(const Word& w) {
  require_signed(w);
  if (w.size() < 2) throw PreconditionError("des_D needs n >= 2");
  if (fneg(w) % 2) throw PreconditionError("not an even signed permutation");
  return des_A(w) + (-w[1] > w[0]);
}

std::size_t exc(const Word& w) {
  require_perm(w);
  return exc_A(w);
}

std::size_t exc_A(const Word& w) {
  require_signed(w);
  std::size_t e = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) e += w[i] > static_cast<int>(i + 1);
  return e;
}

std::size_t fneg(const Word& w) {
  require_signed(w);
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](int x) { return x < 0; }));
}

std::size_t fdes(const Word& w) { return des_A(w) + des_B(w); }
std::size_t fexc(const Word& w) { return 2 * exc_A(w) + fneg(w); }
std::size_t exc_B(const Word& w) { return (fexc(w) + 1) / 2; }

std::vector<Cycle> signed_cycles(const Word& w) {
  require_signed(w);
  const int n = static_cast<int>(w.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<Cycle> out;
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    Cycle c;
    int x = s;
    while (true) {
      c.support.push_back(x);
      seen[static_cast<std::size_t>(std::abs(x))] = true;
      x = at(w, x);
      if (x == s) break;
      if (x == -s) {
        c.balanced = true;
        break;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string cycle_notation(const Word& w) {
  std::ostringstream os;
  for (const auto& c : signed_cycles(w)) {
    os << (c.balanced ? "[" : "((");
    for (std::size_t i = 0; i < c.support.size(); ++i) os << (i ? " " : "") << c.support[i];
    os << (c.balanced ? "]" : "))");
  }
  return os.str();
}

bool is_long_cycle(const Word& w) {
  require_perm(w);
  if (w.empty()) return false;
  std::size_t len = 0;
  int x = 1;
  do {
    x = w[static_cast<std::size_t>(x - 1)];
    ++len;
  } while (x != 1);
  return len == w.size();
}

bool is_cuspidal_B(const Word& w) {
  for (const auto& c : signed_cycles(w))
    if (!c.balanced) return false;
  return true;
}

bool rl_maxima_negative(const Word& w) {
  require_signed(w);
  int best = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    if (std::abs(w[i]) > best) {
      best = std::abs(w[i]);
      if (w[i] > 0) return false;
    }
  }
  return true;
}

bool in_bw_a(const Word& w) {
  require_perm(w);
  return !w.empty() && w[0] == static_cast<int>(w.size());
}

bool in_bw_b(const Word& w) { return rl_maxima_negative(w); }

bool in_bw_d(const Word& w) {
  return w.size() >= 2 && fneg(w) % 2 == 0 && rl_maxima_negative(w) && std::abs(w[0]) != static_cast<int>(w.size());
}

std::vector<Word> cuspidal_Sn(int n) {
  require_range(n, 1, "cuspidal_Sn");
  return collect_S(n, is_long_cycle);
}

std::vector<Word> cuspidal_Bn(int n) {
  require_range(n, 1, "cuspidal_Bn");
  return collect_B(n, is_cuspidal_B);
}

std::vector<Word> bw_a(int n) {
  require_range(n, 1, "bw_a");
  return collect_S(n, in_bw_a);
}

std::vector<Word> bw_b(int n) {
  require_range(n, 1, "bw_b");
  return collect_B(n, in_bw_b);
}

std::vector<Word> bw_d(int n) {
  require_range(n, 2, "bw_d");
  return collect_B(n, in_bw_d);
}

IntPoly distribution_S(int n, const Filter& keep, const Statistic& stat, Exec exec) {
  require_range(n, 0, "distribution_S");
  if (n == 0) return keep(Word{}) ? IntPoly::monomial(1, stat(Word{})) : IntPoly();
  std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), exec, [&](std::size_t f) {
    Word w{static_cast<int>(f) + 1};
    for (int v = 1; v <= n; ++v)
      if (v != w[0]) w.push_back(v);
    do {
      if (keep(w)) bump(parts[f], stat(w));
    } while (std::next_permutation(w.begin() + 1, w.end()));
  });
  return merge(parts);
}

IntPoly distribution_B(int n, const Filter& keep, const Statistic& stat, Exec exec) {
  require_range(n, 0, "distribution_B");
  if (n == 0) return keep(Word{}) ? IntPoly::monomial(1, stat(Word{})) : IntPoly();
  // task f: first letter is (f < n ? f+1 : -(f-n+1))
  std::vector<std::vector<std::uint64_t>> parts(2 * static_cast<std::size_t>(n));
  parallel_for(parts.size(), exec, [&](std::size_t f) {
    const int first = f < static_cast<std::size_t>(n) ? static_cast<int>(f) + 1 : -(static_cast<int>(f) - n + 1);
    Word rest;
    for (int v = 1; v <= n; ++v)
      if (v != std::abs(first)) rest.push_back(v);
    Word w(static_cast<std::size_t>(n));
    w[0] = first;
    do {
      for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        for (int i = 0; i + 1 < n; ++i) {
          const int v = rest[static_cast<std::size_t>(i)];
          w[static_cast<std::size_t>(i) + 1] = (mask >> i & 1u) ? -v : v;
        }
        if (keep(w)) bump(parts[f], stat(w));
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
  return merge(parts);
}

IntPoly peul_A_exc(int n, Exec exec) {
  require_range(n, 1, "peul_A_exc");
  return distribution_S(n, is_long_cycle, exc, exec);
}

IntPoly peul_B_excB(int n, Exec exec) {
  require_range(n, 1, "peul_B_excB");
  return distribution_B(n, is_cuspidal_B, exc_B, exec);
}

IntPoly peul_A_des(int n, Exec exec) {
  require_range(n, 1, "peul_A_des");
  return distribution_S(n, in_bw_a, des_A, exec);
}

IntPoly peul_B_des(int n, Exec exec) {
  require_range(n, 1, "peul_B_des");
  return distribution_B(n, in_bw_b, des_B, exec);
}

IntPoly peul_D_des(int n, Exec exec) {
  require_range(n, 2, "peul_D_des");
  return distribution_B(n, in_bw_d, des_D, exec);
}

IntPoly eulerian_A(int m) {
  require_range(m, 0, "eulerian_A");
  IntPoly e = IntPoly::constant(1);
  const IntPoly z_one_minus_z{0, 1, -1};
  for (int k = 2; k <= m; ++k) e = IntPoly{1, k - 1} * e + z_one_minus_z * e.derivative();
  return e;
}

IntPoly eulerian_B(int n) {
  require_range(n, 0, "eulerian_B");
  IntPoly e = IntPoly::constant(1);
  const IntPoly two_z_one_minus_z{0, 2, -2};
  for (int k = 1; k <= n; ++k) e = IntPoly{1, 2 * k - 1} * e + two_z_one_minus_z * e.derivative();
  return e;
}

IntPoly peul_A(int n) {
  require_range(n, 0, "peul_A");
  if (n <= 1) return IntPoly::constant(1);
  return IntPoly::z() * eulerian_A(n - 1);
}

IntPoly peul_B_rec(int n) {
  require_range(n, 0, "peul_B_rec");
  return b_table(n).back();
}

IntPoly peul_B_diffrec(int n) {
  require_range(n, 0, "peul_B_diffrec");
  IntPoly p = IntPoly::constant(1);
  const IntPoly two_z_one_minus_z{0, 2, -2};
  for (int k = 1; k <= n; ++k) p = IntPoly{0, 2 * k - 1} * p + two_z_one_minus_z * p.derivative();
  return p;
}

IntPoly peul_D_rec(int n) {
  require_range(n, 0, "peul_D_rec");
  return d_table(n).back();
}

IntPoly peul_dnk(int n, int k) {
  require_range(n, 0, "peul_dnk");
  if (k < 0 || k > n) throw PreconditionError("peul_dnk: need 0 <= k <= n");
  IntPoly p = peul_D_rec(n);
  if (k > 0) p += BigInt(k) * peul_B_rec(n - 1).reversed(static_cast<std::size_t>(n));
  return p;
}

IntPoly half_eulerian(int n) {
  require_range(n, 0, "half_eulerian");
  std::vector<std::uint64_t> counts;
  std::vector<long> e(static_cast<std::size_t>(n), 0);
  // depth-first over e_1..e_n carrying the ascent count so far
  auto rec = [&](auto&& self, int i, std::size_t asc) -> void {
    if (i == n) {
      bump(counts, asc);
      return;
    }
    for (long v = 0; v <= 2 * i; ++v) {
      e[static_cast<std::size_t>(i)] = v;
      std::size_t a = asc;
      // positions i and i+1 (1-based) have denominators 2i-1 and 2i+1
      if (i > 0) a += e[static_cast<std::size_t>(i - 1)] * (2 * i + 1) < v * (2 * i - 1);
      self(self, i + 1, a);
    }
  };
  rec(rec, 0, 0);
  return from_counts(counts);
}

bool binomial_identity_checks(int nmax) {
  require_range(nmax, 0, "binomial_identity_checks");
  const auto pb = b_table(nmax);
  for (int n = 0; n <= nmax; ++n) {
    IntPoly e_sum, p_sum;
    for (int k = 0; k <= n; ++k) {
      const BigInt c = binom(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
      e_sum += c * (eulerian_B(k) * eulerian_B(n - k));
      p_sum += c * (pb[static_cast<std::size_t>(k)] * pb[static_cast<std::size_t>(n - k)]);
    }
    const BigInt two_n = pow2(static_cast<unsigned long>(n));
    if (e_sum != two_n * eulerian_A(n + 1)) return false;
    if (p_sum != two_n * peul_A(n + 1)) return false;
  }
  return true;
}

bool generating_function_check(std::size_t order) {
  const int N = static_cast<int>(order);
  std::vector<RatPoly> a;
  for (int m = 0; m <= N; ++m) a.emplace_back(eulerian_A(m));
  const TruncatedEgf A(order, a);
  const TruncatedEgf root = exact::egf_sqrt(exact::egf_scale_x(A, 2));
  const TruncatedEgf ex = exact::egf_exp(TruncatedEgf::linear(order, RatPoly(IntPoly{-1, 1})));
  const TruncatedEgf type_a = TruncatedEgf::constant(order, RatPoly::constant(1)) + exact::egf_log(A);
  const TruncatedEgf type_b = exact::egf_mul(ex, root);
  const TruncatedEgf type_d = exact::egf_mul(ex - TruncatedEgf::linear(order, RatPoly(IntPoly::z())), root);
  const auto pb = b_table(N);
  const auto pd = d_table(N);
  for (int n = 0; n <= N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (exact::egf_coeff(type_a, i) != RatPoly(peul_A(n))) return false;
    if (exact::egf_coeff(type_b, i) != RatPoly(pb[i])) return false;
    if (exact::egf_coeff(type_d, i) != RatPoly(pd[i])) return false;
  }
  return true;
}

const std::vector<ExceptionalEntry>& exceptional_table() {
  static const std::vector<ExceptionalEntry> table = {
      {"H3", exact::parse_intpoly("z^3 + 28z^2 + 16z"), false},
      {"H4", exact::parse_intpoly("z^4 + 1316z^3 + 3844z^2 + 900z"), false},
      {"F4", exact::parse_intpoly("z^4 + 116z^3 + 220z^2 + 48z"), true},
      {"E6", exact::parse_intpoly("z^6 + 633z^5 + 4098z^4 + 5698z^3 + 1773z^2 + 117z"), true},
      {"E7", exact::parse_intpoly("z^7 + 8814z^6 + 118560z^5 + 332200z^4 + 252960z^3 + 51234z^2 + 1996z"), true},
      {"E8", exact::parse_intpoly("z^8 + 440872z^7 + 11946408z^6 + 60853504z^5 + 92427088z^4 + 43792992z^3 + "
                                  "6056496z^2 + 139080z"),
       true},
  };
  return table;
}

}  // namespace primeul::cox
