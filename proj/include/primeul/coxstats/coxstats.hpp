#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "primeul/exactmath/intpoly.hpp"
#include "primeul/parallel.hpp"

namespace primeul::cox {

using exact::IntPoly;

/// One-line notation w_1..w_n with values in [n] (permutations) or [+-n]
/// (window notation of signed permutations).
using Word = std::vector<int>;

bool is_permutation(const Word& w);
bool is_signed_permutation(const Word& w);

// Statistics. Each throws PreconditionError outside its group.
std::size_t des_A(const Word& w);
/// w(0) := 0
std::size_t des_B(const Word& w);
/// w(0) := -w(2); needs n >= 2 and an even number of negative entries.
std::size_t des_D(const Word& w);
std::size_t exc(const Word& w);
std::size_t exc_A(const Word& w);
std::size_t fneg(const Word& w);
std::size_t fdes(const Word& w);
std::size_t fexc(const Word& w);
/// floor((fexc + 1) / 2)
std::size_t exc_B(const Word& w);

struct Cycle {
  /// i_1..i_k; a balanced cycle [i_1..i_k] continues with -i_1..-i_k.
  std::vector<int> support;
  bool balanced = false;
};
/// Cycle decomposition of a signed permutation, one cycle per pair
/// {c, -c}, each starting at its smallest positive entry.
std::vector<Cycle> signed_cycles(const Word& w);
/// "[1 2 3]", "[1][2 -3]((4))"
std::string cycle_notation(const Word& w);

bool is_long_cycle(const Word& w);
/// No paired cycles.
bool is_cuspidal_B(const Word& w);
/// Every right-to-left maximum of |w| is negative in w.
bool rl_maxima_negative(const Word& w);
bool in_bw_a(const Word& w);
bool in_bw_b(const Word& w);
bool in_bw_d(const Word& w);

/// Elements in lexicographic order of one-line notation (signed words compare
/// by the listed values).
std::vector<Word> cuspidal_Sn(int n);
std::vector<Word> cuspidal_Bn(int n);
std::vector<Word> bw_a(int n);
std::vector<Word> bw_b(int n);
std::vector<Word> bw_d(int n);

using Filter = std::function<bool(const Word&)>;
using Statistic = std::function<std::size_t(const Word&)>;
/// sum of z^stat(w) over w in S_n (or B_n) passing the filter. The parallel
/// path splits on the first letter and merges in letter order.
IntPoly distribution_S(int n, const Filter& keep, const Statistic& stat, Exec exec = Exec::parallel);
IntPoly distribution_B(int n, const Filter& keep, const Statistic& stat, Exec exec = Exec::parallel);

IntPoly peul_A_exc(int n, Exec exec = Exec::parallel);
IntPoly peul_B_excB(int n, Exec exec = Exec::parallel);
IntPoly peul_A_des(int n, Exec exec = Exec::parallel);
IntPoly peul_B_des(int n, Exec exec = Exec::parallel);
IntPoly peul_D_des(int n, Exec exec = Exec::parallel);

/// Descent polynomial of S_m (m >= 0, S_0 and S_1 give 1).
IntPoly eulerian_A(int m);
/// Descent polynomial of B_n by its derivative recurrence.
IntPoly eulerian_B(int n);

/// P of the braid arrangement in R^n: 1 for n <= 1, z E_{S_{n-1}} after.
IntPoly peul_A(int n);
/// Type B by the quadratic recursion over rank-1 flats.
IntPoly peul_B_rec(int n);
/// Type B by the differential recurrence.
IntPoly peul_B_diffrec(int n);
/// Type D by its quadratic recursion, with P_{D_0} = 1 and P_{D_1} = 0.
IntPoly peul_D_rec(int n);
/// P_{D_n} + k z^n P_{B_{n-1}}(1/z), 0 <= k <= n.
IntPoly peul_dnk(int n, int k);

/// sum over 2-inversion sequences of z^asc.
IntPoly half_eulerian(int n);

/// sum_k C(n,k) E_{B_k} E_{B_{n-k}} = 2^n E_{S_{n+1}} and the same with P,
/// for all n <= nmax.
bool binomial_identity_checks(int nmax);

/// Coefficients of 1 + log A(z,x), e^{x(z-1)} A(z,2x)^{1/2} and
/// (e^{x(z-1)} - zx) A(z,2x)^{1/2} against the recursions, up to x^order.
bool generating_function_check(std::size_t order);

struct ExceptionalEntry {
  std::string name;
  IntPoly peul;
  /// Has a rational realization among the builders.
  bool realizable;
};
/// Primitive Eulerian polynomials of the exceptional reflection arrangements.
const std::vector<ExceptionalEntry>& exceptional_table();

}  // namespace primeul::cox
