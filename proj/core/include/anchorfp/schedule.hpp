#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <variant>

namespace anchorfp {

/// Asymptotic facts about a parameter sequence. Tags are assigned
/// symbolically from the family, never inferred from numeric limits:
/// divergence of a series is not observable from finitely many terms, so the
/// families are restricted to ones whose tags are provable.
enum class ConditionTag {
  TendsToZero,            // lim a_n = 0
  SumDiverges,            // sum a_n = infinity
  Summable,               // sum a_n < infinity
  ComplementSummable,     // sum (1 - a_n) < infinity
  LiminfProductPositive,  // liminf a_n (1 - a_n) > 0
};

std::string to_string(ConditionTag tag);

/// Which fixed-point set the blended anchored scheme converges to, keyed by
/// the hypothesis satisfied by the beta sequence.
enum class SchemeCase {
  FixT,    // "i":   sum (1 - beta_n) finite
  FixS,    // "ii":  sum beta_n finite
  Common,  // "iii": liminf beta_n (1 - beta_n) > 0
};

SchemeCase parse_scheme_case(const std::string& s);  // "i" | "ii" | "iii"
std::string to_string(SchemeCase c);

/// Symbolic parameter-sequence family. Values are defined for n >= 1 and lie
/// in [0, 1] for every family.
class Schedule {
 public:
  /// n^{-exponent}, exponent in (0, 1)
  static Schedule power(double exponent);
  /// min(1, c / (n + a)), c > 0, a >= 0; the clamp keeps early values valid
  /// convex weights
  static Schedule harmonic(double c, double a);
  /// v in [0, 1]
  static Schedule constant(double v);
  /// 1 - (n+1)^{-p}, p > 1
  static Schedule one_minus_inverse_power(double p);
  /// (n+1)^{-p}, p > 1
  static Schedule inverse_power(double p);

  double value_at(std::int64_t n) const;
  std::set<ConditionTag> tags() const;
  std::string family() const;
  std::string describe() const;

  // family parameters, meaningful per family()
  double param(const std::string& name) const;

  bool operator==(const Schedule& other) const { return data_ == other.data_; }

 private:
  struct Power {
    double exponent;
    bool operator==(const Power&) const = default;
  };
  struct Harmonic {
    double c, a;
    bool operator==(const Harmonic&) const = default;
  };
  struct Constant {
    double v;
    bool operator==(const Constant&) const = default;
  };
  struct OneMinusInversePower {
    double p;
    bool operator==(const OneMinusInversePower&) const = default;
  };
  struct InversePower {
    double p;
    bool operator==(const InversePower&) const = default;
  };
  using Data = std::variant<Power, Harmonic, Constant, OneMinusInversePower, InversePower>;

  explicit Schedule(Data data) : data_(data) {}
  Data data_;
};

struct CaseValidation {
  bool ok = false;
  std::string reason;  // names the missing tag when not ok
};

/// The anchored blended scheme needs alpha with tends_to_zero and
/// sum_diverges, plus the beta tag matching the requested case.
CaseValidation validate_case(const Schedule& alpha, const Schedule& beta, SchemeCase c);

}  // namespace anchorfp
