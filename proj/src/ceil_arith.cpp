#include "fpure/ceil_arith.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <tuple>

#include "fpure/errors.hpp"
#include "fpure/prime_field.hpp"

namespace fpure {

BigInt ceil_mul(const ExactRational& t, const BigInt& n) {
  return ceil_div(t.numerator() * n, t.denominator());
}

BigInt floor_mul(const ExactRational& t, const BigInt& n) {
  return floor_div(t.numerator() * n, t.denominator());
}

BigInt big_power(std::uint32_t p, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

const char* flavor_name(ThresholdFlavor f) noexcept {
  switch (f) {
    case ThresholdFlavor::sharp: return "sharp";
    case ThresholdFlavor::strong: return "strong";
    case ThresholdFlavor::weak: return "weak";
  }
  return "?";
}

BigInt ThresholdExponent::value() const {
  switch (flavor) {
    case ThresholdFlavor::sharp: return ceil_mul(t, q - 1);
    case ThresholdFlavor::strong: return ceil_mul(t, q);
    case ThresholdFlavor::weak: return floor_mul(t, q - 1);
  }
  return 0;
}

char inequality_label(Inequality i) noexcept { return static_cast<char>('a' + static_cast<int>(i)); }

std::uint64_t AuditReport::total_checked() const noexcept {
  std::uint64_t s = 0;
  for (auto c : checked) s += c;
  return s;
}

namespace {

auto violation_key(const AuditViolation& v) {
  return std::tie(v.inequality, v.t, v.e, v.d, v.n);
}

void audit_one(std::uint32_t p, unsigned e_max, unsigned d_max, unsigned n_max, const ExactRational& t,
               const std::vector<BigInt>& pw, AuditReport& out) {
  auto sharp = [&](unsigned k) { return ceil_mul(t, pw[k] - 1); };
  auto record = [&](Inequality which, unsigned e, unsigned d, unsigned n, const BigInt& lhs, const BigInt& rhs) {
    out.violations.push_back({which, t, p, e, d, n, lhs, rhs});
  };

  for (unsigned d = 0; d <= d_max; ++d) {
    for (unsigned e = 0; e <= e_max; ++e) {
      BigInt lhs = sharp(d) + pw[d] * sharp(e);
      BigInt rhs = sharp(d + e);
      ++out.checked[0];
      if (lhs < rhs) record(Inequality::a, e, d, 0, lhs, rhs);
    }
  }
  for (unsigned e = 1; e <= e_max; ++e) {
    for (unsigned n = 1; n <= n_max; ++n) {
      BigInt geometric = 0;
      for (unsigned k = 0; k < n; ++k) geometric += pw[k * e];
      BigInt lhs = geometric * sharp(e);
      BigInt rhs = sharp(n * e);
      ++out.checked[1];
      if (lhs < rhs) record(Inequality::b, e, 0, n, lhs, rhs);
    }
  }
  for (unsigned d = 0; d <= d_max; ++d) {
    for (unsigned e = d + 1; e <= e_max; ++e) {
      BigInt lhs = pw[e - d] * floor_mul(t, pw[d] - 1);
      BigInt rhs = sharp(e);
      ++out.checked[2];
      if (lhs > rhs) record(Inequality::c, e, d, 0, lhs, rhs);
    }
  }
  for (unsigned e = 1; e <= e_max; ++e) {
    if (!(t * ExactRational(pw[e] - 1)).is_integer()) continue;
    for (unsigned d = 0; d <= d_max; ++d) {
      BigInt lhs = sharp(d + e);
      BigInt rhs = pw[d] * sharp(e);
      ++out.checked[3];
      if (lhs < rhs) record(Inequality::d, e, d, 0, lhs, rhs);
    }
  }
}

}  // namespace

void AuditReport::merge(const AuditReport& other) {
  for (int i = 0; i < kInequalityCount; ++i) checked[i] += other.checked[i];
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  std::stable_sort(violations.begin(), violations.end(), [](const AuditViolation& x, const AuditViolation& y) {
    return violation_key(x) < violation_key(y);
  });
}

AuditReport audit_inequalities(std::uint32_t p, unsigned e_max, unsigned d_max,
                               const std::vector<ExactRational>& t_set, unsigned n_max, unsigned workers) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  for (const auto& t : t_set) {
    if (!t.is_positive()) throw DomainError("audit exponents must be positive, got " + t.to_string());
  }
  const std::uint64_t per_t = std::uint64_t{d_max + 1} * (e_max + 1) + std::uint64_t{e_max} * n_max +
                              std::uint64_t{d_max + 1} * e_max + std::uint64_t{e_max} * (d_max + 1);
  if (per_t * t_set.size() > kAuditWorkCap || e_max > 4096 || d_max > 4096 || n_max > 4096) {
    throw ResourceCapError("audit.range", std::to_string(per_t * t_set.size()) + " checks requested");
  }

  const unsigned top = std::max({e_max + d_max, n_max * e_max, 1u});
  std::vector<BigInt> pw(top + 1);
  pw[0] = 1;
  for (unsigned k = 1; k <= top; ++k) pw[k] = pw[k - 1] * p;

  AuditReport report;
  report.p = p;
  report.e_max = e_max;
  report.d_max = d_max;
  report.n_max = n_max;

  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(t_set.size(), 1)));
  std::vector<AuditReport> parts(workers);
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < t_set.size(); i += workers) audit_one(p, e_max, d_max, n_max, t_set[i], pw, parts[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (const auto& part : parts) report.merge(part);
  return report;
}

std::vector<ExactRational> rational_grid(unsigned bound) {
  std::set<ExactRational> seen;
  for (unsigned a = 1; a <= bound; ++a) {
    for (unsigned b = 1; b <= bound; ++b) seen.insert(ExactRational(a, b));
  }
  return {seen.begin(), seen.end()};
}

DenominatorOrder denominator_order(const ExactRational& t, std::uint32_t p, unsigned e_cap) {
  const BigInt& den = t.denominator();
  if (den % p == 0) return {DenominatorOrder::Status::no_order, 0};
  BigInt r = p % den;
  for (unsigned e = 1; e <= e_cap; ++e) {
    if (r == 1 % den) return {DenominatorOrder::Status::found, e};
    r = (r * p) % den;
  }
  return {DenominatorOrder::Status::cap_exceeded, 0};
}

}  // namespace fpure
