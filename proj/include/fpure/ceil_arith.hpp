#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpure/rational.hpp"

namespace fpure {

// ⌈t·n⌉ and ⌊t·n⌋, exact.
BigInt ceil_mul(const ExactRational& t, const BigInt& n);
BigInt floor_mul(const ExactRational& t, const BigInt& n);

// p^e as a big integer.
BigInt big_power(std::uint32_t p, unsigned e);

enum class ThresholdFlavor {
  sharp,   // ⌈t(q-1)⌉
  strong,  // ⌈tq⌉
  weak,    // ⌊t(q-1)⌋
};

const char* flavor_name(ThresholdFlavor f) noexcept;

struct ThresholdExponent {
  ExactRational t;
  BigInt q;
  ThresholdFlavor flavor;

  BigInt value() const;
};

// Which of the four ceiling inequalities a check belongs to.
//   a: ⌈t(p^d-1)⌉ + p^d⌈t(p^e-1)⌉ >= ⌈t(p^{d+e}-1)⌉
//   b: (1 + p^e + ... + p^{(n-1)e})⌈t(p^e-1)⌉ >= ⌈t(p^{ne}-1)⌉
//   c: p^{e-d}⌊t(p^d-1)⌋ <= ⌈t(p^e-1)⌉ for e > d
//   d: ⌈t(p^{d+e}-1)⌉ >= p^d⌈t(p^e-1)⌉ whenever t(p^e-1) is an integer
enum class Inequality { a, b, c, d };
inline constexpr int kInequalityCount = 4;
char inequality_label(Inequality i) noexcept;

struct AuditViolation {
  Inequality inequality;
  ExactRational t;
  std::uint32_t p;
  unsigned e;
  unsigned d;
  unsigned n;
  BigInt lhs;
  BigInt rhs;
};

struct AuditReport {
  std::uint32_t p = 0;
  unsigned e_max = 0;
  unsigned d_max = 0;
  unsigned n_max = 0;
  std::uint64_t checked[kInequalityCount] = {0, 0, 0, 0};
  std::vector<AuditViolation> violations;

  std::uint64_t total_checked() const noexcept;
  // Sums counts and merges violations into a canonical order, so any
  // partition of the t set merges to the same report.
  void merge(const AuditReport& other);
};

// Most individual checks one audit may perform.
inline constexpr std::uint64_t kAuditWorkCap = 10'000'000;

// Exhaustive check over t in t_set with
//   a: d, e in [0, d_max] x [0, e_max]
//   b: e in [1, e_max], n in [1, n_max]
//   c: d in [0, d_max], e in (d, e_max]
//   d: e in [1, e_max] with t(p^e-1) integral, d in [0, d_max]
// Throws ResourceCapError("audit.range") past kAuditWorkCap and DomainError
// for non-prime p or non-positive t. `workers` > 1 splits t_set across threads.
AuditReport audit_inequalities(std::uint32_t p, unsigned e_max, unsigned d_max,
                               const std::vector<ExactRational>& t_set, unsigned n_max = 4,
                               unsigned workers = 1);

// {a/b : 1 <= a, b <= bound}, reduced, deduplicated, increasing.
std::vector<ExactRational> rational_grid(unsigned bound);

struct DenominatorOrder {
  enum class Status { found, no_order, cap_exceeded };
  Status status;
  unsigned e = 0;  // meaningful when found
};

// Least e >= 1 with t(p^e - 1) integral, i.e. the order of p modulo den(t).
// no_order when p divides den(t); cap_exceeded when the order is > e_cap.
DenominatorOrder denominator_order(const ExactRational& t, std::uint32_t p, unsigned e_cap);

}  // namespace fpure
