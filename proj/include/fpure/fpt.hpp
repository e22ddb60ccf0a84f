#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpure/ideal.hpp"
#include "fpure/purity.hpp"
#include "fpure/rational.hpp"

namespace fpure {

// ν(q) = max{s : a^s ⊄ m^{[q]}} with the bracket [ν/q, (ν+ℓ)/q] around the
// threshold, ℓ the number of generators of a (ℓ = 1 for principal a).
struct NuRecord {
  unsigned e = 0;
  std::uint64_t q = 0;
  std::uint64_t nu = 0;
  ExactRational lo;
  ExactRational hi;
};

// a must lie in m, otherwise ν is infinite.
std::uint64_t nu_value(const Ideal& a, std::uint64_t q);

NuRecord fpt_bounds(const Ideal& a, unsigned e);

enum class FptStatus { exact, proven_lower_bound, interval };
enum class CertificateKind { sharp_fedder, mustata_converse };

std::string status_name(FptStatus s);
std::string certificate_name(CertificateKind k);

struct FptCertificate {
  ExactRational t;
  unsigned e = 0;  // sharp-fedder: first proving e; mustata-converse: e*
  CertificateKind kind;
};

inline constexpr std::size_t kMaxFptCandidates = 10'000;

struct FptEstimate {
  ExactRational lo;
  ExactRational hi;
  std::vector<NuRecord> nu_table;
  FptStatus status = FptStatus::interval;
  std::optional<FptCertificate> certificate;
  std::size_t candidates = 0;  // candidates in the final interval
  bool candidates_capped = false;
  std::string explanation;
};

// Intersects the brackets for e = 1..e_max, then tries the admissible
// rationals k/(p^e - 1) in the final interval from the top down. Principal a
// with t* < 1 first tries the finite Mustata-converse pattern
// ν(p^{j e*}) = t*(p^{j e*} - 1) for every multiple j e* <= e_max; otherwise
// sharp_fedder must prove purity at t*. Exact only when hi = t* or the
// pattern check passes; a sharp certificate below hi is a proven lower bound.
FptEstimate fpt_estimate(const Ideal& a, unsigned e_max);

// For (S, a^{t}) proven sharply F-pure, strong_fedder must prove purity at
// t - ε for each ε in (0, t]. The search runs e up to the first e with
// ε p^e > t, plus `extra` more.
ConsistencyReport threshold_consistency(const Ideal& a, const ExactRational& t_proven,
                                        const std::vector<ExactRational>& epsilons, unsigned e_max = 6,
                                        unsigned extra = 2);

}  // namespace fpure
