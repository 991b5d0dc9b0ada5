#include "identities.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace oddfact {

namespace {

constexpr long long kDefaultSingleMax = 60; // single-parameter sweeps
constexpr long long kDefaultPairNMax = 40;  // two-parameter sweeps, all valid k

// (-1)^e for e >= 0.
ExactInt alt_sign(long long e) { return ExactInt(e % 2 == 0 ? 1 : -1); }

const ExactRat kMinusHalf(ExactInt(-1), ExactInt(2));

std::string decimal(const ExactInt &v) { return v.to_decimal(); }

using Cx = std::optional<Counterexample>;

Cx ok() { return std::nullopt; }

Cx fail1(const char *pname, long long p, std::string lhs, std::string rhs) {
  return Counterexample{{{pname, p}}, std::move(lhs), std::move(rhs)};
}

Cx fail2(long long n, long long k, std::string lhs, std::string rhs) {
  return Counterexample{{{"n", n}, {"k", k}}, std::move(lhs), std::move(rhs)};
}

Cx check_eq1(Engine &eng, long long n) {
  const std::vector<ExactInt> &row = eng.first_kind().row(n);
  RatPoly lhs = RatPoly::from_coeffs(std::vector<ExactRat>(row.begin(), row.end()));
  RatPoly rhs = eng.binom(n).scale(ExactRat(factorial(n)));
  if (lhs == rhs) return ok();
  return fail1("n", n, lhs.to_string(), rhs.to_string());
}

Cx check_eq2(Engine &eng, long long n) {
  RatPoly sum;
  for (long long k = 0; k <= n; ++k)
    sum = sum + eng.binom(k).scale(ExactRat(factorial(k) * eng.s2(n, k)));
  RatPoly rhs = RatPoly::monomial(n, ExactRat(1));
  if (sum == rhs) return ok();
  return fail1("n", n, sum.to_string(), rhs.to_string());
}

ExactInt gould_13_32_sum(Engine &eng, long long n, long long k) {
  ExactInt sum(0);
  for (long long j = 0; j <= k; ++j)
    sum += alt_sign(j) * binomial(n + j - 1, k + j) * binomial(n + k, k - j) * eng.s2(j + k, j);
  return sum;
}

Cx check_gould_13_32(Engine &eng, long long n, long long k) {
  ExactInt lhs = eng.s1(n, n - k);
  ExactInt rhs = gould_13_32_sum(eng, n, k);
  if (lhs == rhs) return ok();
  return fail2(n, k, decimal(lhs), decimal(rhs));
}

// sum_j (-1)^(j+k) C(2k,k-j) S(j+k,j): the right side of eq4 and the
// leading-coefficient sum of the eq3 polynomial.
ExactInt eq4_sum(Engine &eng, long long k) {
  ExactInt sum(0);
  for (long long j = 0; j <= k; ++j)
    sum += alt_sign(j + k) * binomial(2 * k, k - j) * eng.s2(j + k, j);
  return sum;
}

Cx check_eq3_chain(Engine &eng, long long n, long long k) {
  if (k < 0 || n < k + 1) throw std::domain_error("eq3-chain: requires n >= k+1 >= 1");
  ExactRat ref = ExactRat(alt_sign(k) * eng.s1(n, n - k));

  // (i) the signed double-binomial sum
  ExactInt expr1(0);
  for (long long j = 0; j <= k; ++j)
    expr1 += alt_sign(j + k) * binomial(n + j - 1, k + j) * binomial(n + k, k - j) * eng.s2(j + k, j);
  if (ExactRat(expr1) != ref) return fail2(n, k, ref.to_string(), decimal(expr1));

  // (ii) the factorial-quotient form
  ExactRat expr2 = eq3_middle_expression(eng, n, k);
  if (expr2 != ref) return fail2(n, k, ref.to_string(), expr2.to_string());

  // (iii) the divided-product form, scaled by 1/(2k)!
  ExactRat cp = ExactRat(c_product(n, k));
  ExactRat expr3(0);
  for (long long j = 0; j <= k; ++j)
    expr3 += ExactRat(alt_sign(j + k) * binomial(2 * k, k - j) * eng.s2(j + k, j)) * cp / ExactRat(n + j);
  expr3 /= ExactRat(factorial(2 * k));
  if (expr3 != ref) return fail2(n, k, ref.to_string(), expr3.to_string());

  return ok();
}

Cx check_eq3_poly(Engine &eng, long long k) {
  const RatPoly &diag = eng.stirling_diagonal_poly(k);
  const RatPoly &rhs = eng.eq3_rhs_poly(k);
  if (diag == rhs && diag.degree() == 2 * k) return ok();
  return fail1("k", k, diag.to_string(), rhs.to_string());
}

Cx check_eq4(Engine &eng, long long k) {
  ExactInt lhs = odd_double_factorial(k);
  ExactInt rhs = eq4_sum(eng, k);
  if (lhs == rhs) return ok();
  return fail1("k", k, decimal(lhs), decimal(rhs));
}

ExactInt gould_14_34_sum(Engine &eng, long long k) {
  ExactInt sum(0);
  for (long long j = 0; j <= k; ++j)
    sum += alt_sign(j + k) * binomial(2 * k + 1, k - j) * eng.s2(j + k, j);
  return sum;
}

Cx check_gould_14_34(Engine &eng, long long k) {
  ExactInt sum = gould_14_34_sum(eng, k);
  ExactInt lhs = factorial(k);
  if (sum != lhs) return fail1("k", k, decimal(lhs), decimal(sum));
  // The same sum is the n = k+1 specialization of the eq3 chain.
  ExactRat middle = eq3_middle_expression(eng, k + 1, k);
  if (ExactRat(sum) != middle) return fail1("k", k, decimal(sum), middle.to_string());
  return ok();
}

Cx check_callan(Engine &eng, long long k) {
  ExactInt sum(0);
  for (long long j = 0; j <= k; ++j) sum += ExactInt(-2).pow(k - j) * eng.s1(k, j);
  ExactInt lhs = odd_double_factorial(k);
  if (sum != lhs) return fail1("k", k, decimal(lhs), decimal(sum));

  // Derivation route: evaluating the falling factorial at x = -1/2 must give
  // the triangle-row sum sum_j s(k,j) (-1/2)^j, which is (-1/2)^k times the
  // (-2)^(k-j) sum above.
  ExactRat at_half = eng.falling_factorial(k).eval(kMinusHalf);
  ExactRat row_sum(0);
  for (long long j = 0; j <= k; ++j) row_sum += ExactRat(eng.s1(k, j)) * kMinusHalf.pow(j);
  if (at_half != row_sum) return fail1("k", k, at_half.to_string(), row_sum.to_string());
  ExactRat scaled = kMinusHalf.pow(k) * ExactRat(sum);
  if (row_sum != scaled) return fail1("k", k, row_sum.to_string(), scaled.to_string());
  return ok();
}

Cx check_unit_sum(Engine &eng, long long n) {
  ExactInt sum(0);
  for (long long k = 0; k <= n; ++k)
    sum += ExactInt(-2).pow(n - k) * eng.s2(n, k) * odd_double_factorial(k);
  if (sum == ExactInt(1)) return ok();
  return fail1("n", n, "1", decimal(sum));
}

Cx check_gessel_leading(Engine &eng, long long k) {
  const RatPoly &diag = eng.stirling_diagonal_poly(k);
  ExactRat expected(odd_double_factorial(k), factorial(2 * k));
  if (diag.is_zero()) return fail1("k", k, expected.to_string(), ExactRat(0).to_string());
  const ExactRat &lead = diag.leading_coeff();
  if (diag.degree() == 2 * k && lead == expected) return ok();
  return fail1("k", k, expected.to_string(), lead.to_string());
}

void validate_limits(const SuiteLimits &limits) {
  if (limits.k_max && *limits.k_max < 0)
    throw std::invalid_argument("verify: k bound must be >= 0");
  if (limits.n_max && *limits.n_max < 0)
    throw std::invalid_argument("verify: n bound must be >= 0");
}

template <typename Check>
IdentityReport sweep_single(Engine &eng, IdentityId id, const char *pname, long long bound,
                            Check &&check) {
  IdentityReport report;
  report.id = id;
  report.range = std::string("0<=") + pname + "<=" + std::to_string(bound);
  for (long long p = 0; p <= bound; ++p) {
    ++report.checked;
    if (Cx cx = check(eng, p)) report.counterexamples.push_back(std::move(*cx));
  }
  report.pass = report.counterexamples.empty();
  return report;
}

// Two-parameter sweep over n with k = 0..min(n - k_slack, k_cap).
template <typename Check>
IdentityReport sweep_pair(Engine &eng, IdentityId id, const SuiteLimits &limits, long long k_slack,
                          Check &&check) {
  const long long n_bound = limits.n_max.value_or(kDefaultPairNMax);
  IdentityReport report;
  report.id = id;
  const std::string k_expr = k_slack == 0 ? "n" : "n-" + std::to_string(k_slack);
  report.range = "1<=n<=" + std::to_string(n_bound) + ", 0<=k<=" +
                 (limits.k_max ? "min(" + k_expr + "," + std::to_string(*limits.k_max) + ")"
                               : k_expr);
  for (long long n = 1; n <= n_bound; ++n) {
    long long k_hi = n - k_slack;
    if (limits.k_max) k_hi = std::min(k_hi, *limits.k_max);
    for (long long k = 0; k <= k_hi; ++k) {
      ++report.checked;
      if (Cx cx = check(eng, n, k)) report.counterexamples.push_back(std::move(*cx));
    }
  }
  report.pass = report.counterexamples.empty();
  return report;
}

} // namespace

std::string_view identity_name(IdentityId id) {
  switch (id) {
  case IdentityId::Eq1:
    return "eq1";
  case IdentityId::Eq2:
    return "eq2";
  case IdentityId::Gould1332:
    return "gould-13-32";
  case IdentityId::Eq3Chain:
    return "eq3-chain";
  case IdentityId::Eq3Poly:
    return "eq3-poly";
  case IdentityId::Eq4:
    return "eq4";
  case IdentityId::Gould1434:
    return "gould-14-34";
  case IdentityId::Callan53:
    return "callan-5-3";
  case IdentityId::UnitSum:
    return "unit-sum";
  case IdentityId::GesselLeading:
    return "gessel-leading";
  }
  throw std::logic_error("identity_name: bad id");
}

std::optional<IdentityId> identity_from_name(std::string_view name) {
  for (IdentityId id : kAllIdentities)
    if (identity_name(id) == name) return id;
  return std::nullopt;
}

Engine::Engine()
    : first_(StirlingTriangle::Kind::FirstSigned), second_(StirlingTriangle::Kind::Second) {}

const RatPoly &Engine::falling_factorial(long long n) {
  auto it = ffp_cache_.find(n);
  if (it == ffp_cache_.end()) it = ffp_cache_.emplace(n, falling_factorial_poly(n)).first;
  return it->second;
}

const RatPoly &Engine::binom(long long n) {
  auto it = binom_cache_.find(n);
  if (it == binom_cache_.end())
    it = binom_cache_.emplace(n, falling_factorial(n).scale(ExactRat(ExactInt(1), factorial(n)))).first;
  return it->second;
}

const RatPoly &Engine::stirling_diagonal_poly(long long k) {
  auto it = diagonal_cache_.find(k);
  if (it == diagonal_cache_.end())
    it = diagonal_cache_.emplace(k, interpolate_stirling_diagonal(*this, k)).first;
  return it->second;
}

const RatPoly &Engine::eq3_rhs_poly(long long k) {
  auto it = eq3_rhs_cache_.find(k);
  if (it == eq3_rhs_cache_.end()) it = eq3_rhs_cache_.emplace(k, build_eq3_rhs_poly(*this, k)).first;
  return it->second;
}

void Engine::corrupt(StirlingTriangle::Kind kind, long long n, long long k,
                     const ExactInt &delta) {
  StirlingTriangle &tri = kind == StirlingTriangle::Kind::FirstSigned ? first_ : second_;
  tri.poke(n, k, delta);
  diagonal_cache_.clear();
  eq3_rhs_cache_.clear();
}

RatPoly interpolate_stirling_diagonal(Engine &eng, long long k) {
  if (k < 0) throw std::domain_error("stirling-diagonal: k must be >= 0");
  eng.first_kind().ensure_rows(3 * k + 1);
  std::vector<std::pair<ExactRat, ExactRat>> points;
  points.reserve(static_cast<size_t>(2 * k) + 1);
  for (long long n = k + 1; n <= 3 * k + 1; ++n)
    points.emplace_back(ExactRat(n), ExactRat(alt_sign(k) * eng.s1(n, n - k)));
  return interpolate(points);
}

RatPoly build_eq3_rhs_poly(Engine &eng, long long k) {
  if (k < 0) throw std::domain_error("eq3-rhs: k must be >= 0");
  const RatPoly cp = c_poly(k);
  RatPoly acc;
  for (long long j = 0; j <= k; ++j) {
    RatPoly quotient = cp.div_linear(ExactRat(-j)); // remove the (x+j) factor
    acc = acc + quotient.scale(ExactRat(alt_sign(j + k) * binomial(2 * k, k - j) * eng.s2(j + k, j)));
  }
  return acc.scale(ExactRat(ExactInt(1), factorial(2 * k)));
}

ExactRat eq3_middle_expression(Engine &eng, long long n, long long k) {
  if (k < 0 || n < k + 1) throw std::domain_error("eq3 middle expression: requires n >= k+1 >= 1");
  ExactRat inner(0);
  for (long long j = 0; j <= k; ++j)
    inner += ExactRat(alt_sign(j + k) * binomial(2 * k, k - j) * eng.s2(j + k, j)) / ExactRat(n + j);
  ExactRat prefactor(factorial(n + k), factorial(2 * k) * factorial(n - k - 1));
  return prefactor * inner;
}

bool verify_eq1(Engine &eng, long long n) { return !check_eq1(eng, n); }
bool verify_eq2(Engine &eng, long long n) { return !check_eq2(eng, n); }
bool verify_gould_13_32(Engine &eng, long long n, long long k) {
  return !check_gould_13_32(eng, n, k);
}
bool verify_eq3_chain(Engine &eng, long long n, long long k) {
  return !check_eq3_chain(eng, n, k);
}
bool verify_eq3_poly(Engine &eng, long long k) { return !check_eq3_poly(eng, k); }
bool verify_eq4(Engine &eng, long long k) { return !check_eq4(eng, k); }
bool verify_gould_14_34(Engine &eng, long long k) { return !check_gould_14_34(eng, k); }
bool verify_callan(Engine &eng, long long k) { return !check_callan(eng, k); }
bool verify_unit_sum(Engine &eng, long long n) { return !check_unit_sum(eng, n); }
bool verify_gessel_leading(Engine &eng, long long k) { return !check_gessel_leading(eng, k); }

IdentityReport run_identity(Engine &eng, IdentityId id, const SuiteLimits &limits) {
  validate_limits(limits);
  const long long k_bound = limits.k_max.value_or(kDefaultSingleMax);
  const long long n_bound = limits.n_max.value_or(kDefaultSingleMax);
  IdentityReport report;
  switch (id) {
  case IdentityId::Eq1:
    report = sweep_single(eng, id, "n", n_bound, check_eq1);
    break;
  case IdentityId::Eq2:
    report = sweep_single(eng, id, "n", n_bound, check_eq2);
    break;
  case IdentityId::Gould1332:
    report = sweep_pair(eng, id, limits, 0, check_gould_13_32);
    break;
  case IdentityId::Eq3Chain:
    report = sweep_pair(eng, id, limits, 1, check_eq3_chain);
    break;
  case IdentityId::Eq3Poly:
    report = sweep_single(eng, id, "k", k_bound, check_eq3_poly);
    break;
  case IdentityId::Eq4:
    report = sweep_single(eng, id, "k", k_bound, check_eq4);
    break;
  case IdentityId::Gould1434:
    report = sweep_single(eng, id, "k", k_bound, check_gould_14_34);
    break;
  case IdentityId::Callan53:
    report = sweep_single(eng, id, "k", k_bound, check_callan);
    break;
  case IdentityId::UnitSum:
    report = sweep_single(eng, id, "n", n_bound, check_unit_sum);
    break;
  case IdentityId::GesselLeading:
    report = sweep_single(eng, id, "k", k_bound, check_gessel_leading);
    break;
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const Counterexample &a, const Counterexample &b) { return a.params < b.params; });
  return report;
}

std::vector<IdentityReport> run_suite(Engine &eng, std::span<const IdentityId> ids,
                                      const SuiteLimits &limits) {
  validate_limits(limits);
  std::vector<IdentityReport> reports;
  reports.reserve(ids.size());
  for (IdentityId id : ids) reports.push_back(run_identity(eng, id, limits));
  return reports;
}

} // namespace oddfact
