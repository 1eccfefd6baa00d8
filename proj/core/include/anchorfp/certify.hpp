#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "anchorfp/operators.hpp"

namespace anchorfp {

/// Outcome of a sampling certifier for one inequality. A report is evidence,
/// not proof: passing means no violation beyond tolerance was found among
/// `samples_tested` seeded samples, and failing reports carry the worst pair
/// for reproduction.
struct CertificateReport {
  std::string inequality_id;
  std::int64_t samples_tested = 0;
  /// max over samples of (LHS - RHS) of the named inequality
  double max_violation = 0.0;
  /// max over samples of the per-sample magnitude term; pass tolerance is
  /// relative to this
  double scale = 1.0;
  /// the sampled pair achieving max_violation (point and fixed point for the
  /// quasi-type certifiers)
  std::optional<std::pair<Point, Point>> worst_pair;
  std::optional<double> estimated_coefficient;
  bool applicable = true;

  bool passes(double rel_tol = 1e-10) const { return max_violation <= rel_tol * scale; }
};

/// Merge shards of the same certifier run: violations and scales by max,
/// sample counts by sum, coefficient estimates by min.
CertificateReport merge_reports(CertificateReport a, const CertificateReport& b);

/// ||Tx - Ty|| <= ||x - y|| over sampled domain pairs.
CertificateReport certify_nonexpansive(const Operator& T, std::int64_t n_pairs,
                                       std::uint64_t seed);

struct NonspreadingCertificates {
  /// 2 ||Sx - Sy||^2 <= ||Sx - y||^2 + ||x - Sy||^2
  CertificateReport definition;
  /// ||Sx - Sy||^2 <= ||x - y||^2 + 2 <x - Sx, y - Sy>
  CertificateReport characterization;
  /// max over pairs of |definition violation - characterization violation|.
  /// Expanding all squares shows the two violations are the same polynomial
  /// in inner products, so the gap is pure rounding noise.
  double max_equivalence_gap = 0.0;
  double gap_scale = 1.0;
};

NonspreadingCertificates certify_nonspreading(const Operator& S, std::int64_t n_pairs,
                                              std::uint64_t seed);

/// ||Tx - p|| <= ||x - p|| over sampled x in the domain and p in known_fix.
CertificateReport certify_quasi_nonexpansive(const Operator& T, std::int64_t n_points,
                                             std::uint64_t seed);

/// 1/2 ||(I-T)x - (I-T)y||^2 <= <x - y, (I-T)x - (I-T)y>. Holds for every
/// nonexpansive T.
CertificateReport certify_inverse_strongly_monotone(const Operator& T,
                                                    std::int64_t n_pairs,
                                                    std::uint64_t seed);

/// ||(I-S)x - (I-S)y||^2 <= <x - y, (I-S)x - (I-S)y> + 1/2 (||x-Sx||^2 + ||y-Sy||^2).
/// Holds for every nonspreading S.
CertificateReport certify_displacement_inequality(const Operator& S, std::int64_t n_pairs,
                                                  std::uint64_t seed);

struct QuasiFirmlyCertificates {
  /// ||Ax - p||^2 <= ||x - p||^2 - (1-delta) ||x - Ax||^2 for p in known_fix
  CertificateReport fixed_point;
  /// ||Ax - Ay||^2 <= ||x - y||^2 + (2/delta) <x - Ax, y - Ay>
  ///                  - (1-delta) ||(x - Ax) - (y - Ay)||^2
  CertificateReport pairwise;
};

/// Both averaged-map inequalities for A = (1-delta) I + delta S with S
/// nonspreading. Throws when known_fix is absent (the fixed-point part needs
/// it); use certify_quasi_firmly_pairwise alone in that case.
QuasiFirmlyCertificates certify_quasi_firmly(const AveragedOperator& A,
                                             std::int64_t n_points, std::uint64_t seed);
CertificateReport certify_quasi_firmly_pairwise(const AveragedOperator& A,
                                                std::int64_t n_pairs, std::uint64_t seed);

/// Infimum over sampled pairs (with nonzero displacement difference) of
///   (||x - y||^2 - ||Tx - Ty||^2) / ||(x - Tx) - (y - Ty)||^2,
/// the best firmly-type coefficient consistent with the samples. Marked not
/// applicable when every denominator vanishes (T differs from the identity
/// by a constant).
CertificateReport estimate_firmly_coefficient(const Operator& T, std::int64_t n_pairs,
                                              std::uint64_t seed);

/// Randomized search for a piecewise-affine interval map that certifies as
/// nonspreading (no violation in n_pairs samples) while visibly failing
/// nonexpansiveness. Returns the first certified candidate, if any; finding
/// none within the budget is a normal outcome.
std::optional<Operator> search_nonspreading_not_nonexpansive(int n_candidates,
                                                             std::int64_t n_pairs,
                                                             std::uint64_t seed);

}  // namespace anchorfp
