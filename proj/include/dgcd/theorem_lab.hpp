#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dgcd/factor.hpp"
#include "dgcd/jacobian.hpp"

namespace dgcd {

inline constexpr int kDefaultWitnessDegree = 3;

/// g divides s_1*d(f_1) + ... + s_m*d(f_m) for every derivation d while g
/// does not divide s_i. Index i is 0-based.
struct StarConditionInstance {
  Polynomial g;
  PolynomialSystem sys;
  std::vector<Polynomial> s;
  std::size_t i = 0;
};

/// Checked on the partial derivatives, which span all derivations.
/// Throws when g is constant or provably reducible.
bool check_star_condition(const StarConditionInstance& inst, const IrreducibilityLimits& limits = {});

/// Looks for s_1..s_m of total degree <= max_degree making the star condition
/// hold at index i. Linear algebra over the coefficients of the s_j.
std::optional<std::vector<Polynomial>> find_star_tuple(const Polynomial& g, const PolynomialSystem& sys,
                                                       std::size_t i, int max_degree,
                                                       const IrreducibilityLimits& limits = {});

/// find_square_witness only returns the first two; Unrestricted marks w read
/// back from reports that make no claim.
enum class WitnessKind { Irreducible, Squarefree, Unrestricted };

std::string to_string(WitnessKind k);
WitnessKind parse_witness_kind(const std::string& s);

struct WitnessReport {
  Polynomial g;
  std::vector<Polynomial> members;
  /// Over y1..ym.
  Polynomial w;
  WitnessKind w_kind = WitnessKind::Unrestricted;
  bool divisibility_checked = false;
  int search_degree_bound = kDefaultWitnessDegree;

  bool operator==(const WitnessReport&) const = default;
};

/// Ring y1..ym used for w.
RingPtr witness_ring(std::size_t m);

/// g^2 divides w(f_1, ..., f_m), by exact division. A zero composition counts
/// as divisible.
bool verify_witness(const Polynomial& g, const Polynomial& w, const PolynomialSystem& sys);

/// Square-free (preferably irreducible) w of total degree <= max_degree with
/// g^2 | w(f). Normal forms of the products f^a modulo g^2 are linear in the
/// dividend, so all w with g^2 | w(f) form the kernel of a rational matrix.
/// Kernel elements that are not square-free prove nothing about g (for f = x + 1
/// and g = x, w = (y1 - 1)^2 works) and are never returned. Throws when g is
/// constant or reducible, or when the members are algebraically dependent.
std::optional<WitnessReport> find_square_witness(const Polynomial& g, const PolynomialSystem& sys,
                                                 int max_degree = kDefaultWitnessDegree,
                                                 const IrreducibilityLimits& limits = {});

struct Theorem1Report {
  Polynomial g;
  std::vector<Polynomial> members;
  Polynomial dgcd;
  /// g divides dgcd.
  bool g_divides_dgcd = false;
  std::optional<WitnessReport> witness;
  int search_degree_bound = kDefaultWitnessDegree;
  /// A witness always forces g | dgcd; false signals a bug.
  bool consistent = true;
  std::string note;

  bool operator==(const Theorem1Report&) const = default;
};

Theorem1Report theorem1_consistency_check(const Polynomial& g, const PolynomialSystem& sys,
                                          int max_degree = kDefaultWitnessDegree,
                                          const IrreducibilityLimits& limits = {});

struct SamplingConfig {
  std::uint64_t seed = 1;
  unsigned trials = 200;
  unsigned max_w_degree = 3;
  unsigned coeff_bound = 5;
  /// Only count w classified irreducible; needs w within the irreducibility caps.
  bool irreducible_only = false;

  bool operator==(const SamplingConfig&) const = default;
};

/// Uniform integer coefficients in [-coeff_bound, coeff_bound] on every
/// monomial of total degree <= degree; redrawn if zero. Sampling uses only the
/// raw engine output so streams agree across standard libraries.
Polynomial random_polynomial(const RingPtr& ring, unsigned degree, unsigned coeff_bound, std::mt19937_64& rng);

/// Engine for one campaign trial, derived from (seed, trial) alone.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial);

struct Counterexample {
  Polynomial w;
  Polynomial composed;

  bool operator==(const Counterexample&) const = default;
};

struct CampaignReport {
  std::vector<Polynomial> members;
  SamplingConfig config;
  Polynomial dgcd;
  bool jacobian_condition = false;
  std::size_t sampled = 0;
  std::size_t squarefree_w = 0;
  std::size_t irreducible_w = 0;
  /// Square-free w whose composition has a repeated factor.
  std::vector<Counterexample> counterexamples;
  /// Jacobian condition holds yet a counterexample exists.
  bool assertion_violated = false;
  /// When the condition fails: a square witness for an irreducible factor of dgcd.
  std::optional<WitnessReport> exhibited;
  std::string note;

  bool operator==(const CampaignReport&) const = default;
};

/// Throws when the members are algebraically dependent.
CampaignReport theorem2_campaign(const PolynomialSystem& sys, const SamplingConfig& cfg,
                                 const IrreducibilityLimits& limits = {});

}  // namespace dgcd
