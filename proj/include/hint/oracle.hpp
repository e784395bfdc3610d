#pragma once

// Random generators and brute-force checkers for the algebraic and integral
// laws. Everything is exact; reports are deterministic in (trials, seed).

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hint/function.hpp"
#include "hint/hvalue.hpp"
#include "hint/space.hpp"

namespace hint {

enum class Profile {
  FiniteNonNeg,    // m in [0, 100]
  NonNeg,          // m in [0, 100] or +inf
  Signed,          // m in [-100, 100]
  WithInfinities,  // signed, or +-inf
};

/// Raw 64-bit draws only, so sequences match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  /// p/q with 0 <= p <= 100, 1 <= q <= 100.
  Rational small_rational();

 private:
  std::mt19937_64 gen_;
};

HValue random_hvalue(Rng& rng, Profile profile);
HValue random_hvalue(std::uint64_t seed, Profile profile);

/// Atoms a0..a{n-1} with nonnegative weights (infinite m allowed).
/// Throws std::invalid_argument unless 1 <= n <= 6.
AtomSpace random_atom_space(Rng& rng, std::size_t n);
AtomSpace random_atom_space(std::uint64_t seed, std::size_t n);

SimpleFn random_simple(Rng& rng, const AtomSpace& space, bool allow_infinite);
/// A random g with (0,0) <= g <= f atomwise.
SimpleFn random_minorant(Rng& rng, const AtomSpace& space, const SimpleFn& f, bool allow_infinite);

/// All set partitions of {0..n-1}; Bell(n) of them.
std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n);

/// The sup-over-witness-sets formula by enumeration: every subset L for the
/// dimension, every disjoint family of subsets for the measure.
HValue sup_formula_brute_force(const AtomSpace& space, const SimpleFn& f,
                      const std::function<HValue(const MeasurableSet&)>& mu);

/// Replaceable pieces, so deliberately broken variants can be fed to the suites.
struct Hooks {
  std::function<HValue(const HValue&, const HValue&)> add;
  std::function<HValue(const AtomSpace&, const MeasurableSet&)> measure;
  /// Empty: the simple-function sum under `measure`.
  std::function<HValue(const AtomSpace&, const SimpleFn&)> integrate;
};

Hooks default_hooks();
/// (d1, m1 + m2): ignores the dimensions.
Hooks mutant_add_hooks();
/// Drops the last listed atom of any set with two or more atoms.
Hooks mutant_measure_hooks();
/// Forgets the last atom of the space when integrating.
Hooks mutant_integrate_hooks();

struct Violation {
  std::string law;
  std::uint64_t seed = 0;
  std::string detail;
};

struct LawReport {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t first_seed = 0;  // seeds first_seed .. first_seed + trials - 1
  std::vector<std::string> laws;
  std::map<std::string, std::size_t> checks;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  // the first few, with reproducers

  bool ok() const { return violation_count == 0; }
};

std::string render_text(const LawReport& r);

LawReport check_algebra_laws(std::size_t trials, std::uint64_t seed, const Hooks& hooks = default_hooks());
LawReport check_integral_laws(std::size_t trials, std::uint64_t seed, const Hooks& hooks = default_hooks());
LawReport minorant_sample_check(const AtomSpace& space, const SimpleFn& f, std::size_t samples, std::uint64_t seed,
                                const Hooks& hooks = default_hooks());

}  // namespace hint
