#ifndef ODDFACT_IDENTITIES_HPP
#define ODDFACT_IDENTITIES_HPP

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "ratpoly.hpp"

namespace oddfact {

/* The verified identities. Throughout, s(n,k) are signed first-kind and
 * S(n,k) second-kind Stirling numbers, and (2k-1)!! the odd double factorial.
 *
 *   eq1            sum_k s(n,k) x^k = n! * C(x,n)            (coefficient-wise)
 *   eq2            sum_k k! C(x,k) S(n,k) = x^n              (coefficient-wise)
 *   gould-13-32    s(n,n-k) = sum_j (-1)^j C(n+j-1,k+j) C(n+k,k-j) S(j+k,j)
 *   eq3-chain      three equivalent expressions for (-1)^k s(n,n-k), checked
 *                  pointwise for integer n >= k+1
 *   eq3-poly       the divided-product expression rebuilt as a polynomial in
 *                  n equals the interpolated diagonal polynomial
 *   eq4            (2k-1)!! = sum_j (-1)^(j+k) C(2k,k-j) S(j+k,j)
 *   gould-14-34    k! = sum_j (-1)^(j+k) C(2k+1,k-j) S(j+k,j)
 *   callan-5-3     (2k-1)!! = sum_j (-2)^(k-j) s(k,j)
 *   unit-sum       1 = sum_k (-2)^(n-k) S(n,k) (2k-1)!!
 *   gessel-leading (-1)^k s(n,n-k), as a polynomial in n, has degree 2k and
 *                  leading coefficient (2k-1)!!/(2k)!
 */
enum class IdentityId {
  Eq1,
  Eq2,
  Gould1332,
  Eq3Chain,
  Eq3Poly,
  Eq4,
  Gould1434,
  Callan53,
  UnitSum,
  GesselLeading,
};

inline constexpr std::array<IdentityId, 10> kAllIdentities = {
    IdentityId::Eq1,       IdentityId::Eq2,      IdentityId::Gould1332,
    IdentityId::Eq3Chain,  IdentityId::Eq3Poly,  IdentityId::Eq4,
    IdentityId::Gould1434, IdentityId::Callan53, IdentityId::UnitSum,
    IdentityId::GesselLeading,
};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

// One failing parameter point with both side values, so a failure is
// diagnosable without re-running. For polynomial-level identities the sides
// are serialized coefficient lists.
struct Counterexample {
  std::vector<std::pair<std::string, long long>> params; // (name, value), sweep order
  std::string lhs;
  std::string rhs;
};

// Outcome of sweeping one identity over a parameter range.
struct IdentityReport {
  IdentityId id;
  std::string range; // bounds swept, e.g. "0<=k<=60"
  long long checked = 0;
  bool pass = true; // pass <=> counterexamples empty
  std::vector<Counterexample> counterexamples;
};

/* Owns the two memoized Stirling triangles plus caches for the polynomial
 * objects derived from them. Verifiers are pure given read-only triangle
 * access; the cached polynomial references stay valid until corrupt() is
 * called.
 */
class Engine {
public:
  Engine();

  StirlingTriangle &first_kind() { return first_; }
  StirlingTriangle &second_kind() { return second_; }

  ExactInt s1(long long n, long long k) { return stirling1(first_, n, k); }
  ExactInt s2(long long n, long long k) { return stirling2(second_, n, k); }

  const RatPoly &falling_factorial(long long n);
  const RatPoly &binom(long long n);

  // Interpolation of the points (n, (-1)^k s(n,n-k)) for n = k+1..3k+1:
  // 2k+1 integer nodes past the poles of the divided-product expression and
  // inside the validity region of the factorial-quotient expression. The
  // result is the exact degree-2k diagonal polynomial.
  const RatPoly &stirling_diagonal_poly(long long k);

  // (1/(2k)!) sum_j (-1)^(j+k) C(2k,k-j) [c_poly(k)/(x+j)] S(j+k,j), built
  // with exact linear division; degree exactly 2k.
  const RatPoly &eq3_rhs_poly(long long k);

  // Fault injection for the verification tests: adds delta to one triangle
  // entry and drops every triangle-derived cache.
  void corrupt(StirlingTriangle::Kind kind, long long n, long long k, const ExactInt &delta);

private:
  StirlingTriangle first_;
  StirlingTriangle second_;
  std::map<long long, RatPoly> ffp_cache_;
  std::map<long long, RatPoly> binom_cache_;
  std::map<long long, RatPoly> diagonal_cache_;
  std::map<long long, RatPoly> eq3_rhs_cache_;
};

// Uncached builders behind the Engine accessors above.
RatPoly interpolate_stirling_diagonal(Engine &eng, long long k);
RatPoly build_eq3_rhs_poly(Engine &eng, long long k);

// The middle expression of the eq3 chain,
// (n+k)!/((2k)!(n-k-1)!) * sum_j (-1)^(j+k) C(2k,k-j) S(j+k,j)/(n+j),
// in exact rational arithmetic (summands need not be integers). Requires
// n >= k+1.
ExactRat eq3_middle_expression(Engine &eng, long long n, long long k);

// Point verifiers. Each returns true iff the identity holds exactly at the
// given parameters.
bool verify_eq1(Engine &eng, long long n);
bool verify_eq2(Engine &eng, long long n);
bool verify_gould_13_32(Engine &eng, long long n, long long k);
bool verify_eq3_chain(Engine &eng, long long n, long long k);
bool verify_eq3_poly(Engine &eng, long long k);
bool verify_eq4(Engine &eng, long long k);
bool verify_gould_14_34(Engine &eng, long long k);
bool verify_callan(Engine &eng, long long k);
bool verify_unit_sum(Engine &eng, long long n);
bool verify_gessel_leading(Engine &eng, long long k);

// Optional overrides for the sweep bounds. Defaults: the single parameter
// runs to 60; two-parameter identities run to n <= 40 with every valid k.
struct SuiteLimits {
  std::optional<long long> k_max;
  std::optional<long long> n_max;
};

// Sweeps one identity over its parameter range in lexicographic order.
IdentityReport run_identity(Engine &eng, IdentityId id, const SuiteLimits &limits = {});

// One report per requested identity. Bounds are validated up front
// (std::invalid_argument before any computation); report content is
// deterministic and independent of evaluation order, with counterexamples
// sorted by parameters before emission.
std::vector<IdentityReport> run_suite(Engine &eng, std::span<const IdentityId> ids,
                                      const SuiteLimits &limits = {});

} // namespace oddfact

#endif // ODDFACT_IDENTITIES_HPP
