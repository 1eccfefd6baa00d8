#include "anchorfp/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace anchorfp {

std::string to_string(ConditionTag tag) {
  switch (tag) {
    case ConditionTag::TendsToZero:
      return "tends_to_zero";
    case ConditionTag::SumDiverges:
      return "sum_diverges";
    case ConditionTag::Summable:
      return "summable";
    case ConditionTag::ComplementSummable:
      return "complement_summable";
    case ConditionTag::LiminfProductPositive:
      return "liminf_product_positive";
  }
  return "?";
}

SchemeCase parse_scheme_case(const std::string& s) {
  if (s == "i") return SchemeCase::FixT;
  if (s == "ii") return SchemeCase::FixS;
  if (s == "iii") return SchemeCase::Common;
  throw std::invalid_argument("scheme case must be one of \"i\", \"ii\", \"iii\"");
}

std::string to_string(SchemeCase c) {
  switch (c) {
    case SchemeCase::FixT:
      return "i";
    case SchemeCase::FixS:
      return "ii";
    case SchemeCase::Common:
      return "iii";
  }
  return "?";
}

Schedule Schedule::power(double exponent) {
  if (!(exponent > 0.0 && exponent < 1.0)) {
    throw std::invalid_argument("Schedule::power: exponent must lie in (0, 1)");
  }
  return Schedule(Power{exponent});
}

Schedule Schedule::harmonic(double c, double a) {
  if (!(c > 0.0)) throw std::invalid_argument("Schedule::harmonic: c must be positive");
  if (!(a >= 0.0)) throw std::invalid_argument("Schedule::harmonic: a must be nonnegative");
  return Schedule(Harmonic{c, a});
}

Schedule Schedule::constant(double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument("Schedule::constant: value must lie in [0, 1]");
  }
  return Schedule(Constant{v});
}

Schedule Schedule::one_minus_inverse_power(double p) {
  if (!(p > 1.0)) {
    throw std::invalid_argument("Schedule::one_minus_inverse_power: p must exceed 1");
  }
  return Schedule(OneMinusInversePower{p});
}

Schedule Schedule::inverse_power(double p) {
  if (!(p > 1.0)) throw std::invalid_argument("Schedule::inverse_power: p must exceed 1");
  return Schedule(InversePower{p});
}

double Schedule::value_at(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("Schedule::value_at: n must be >= 1");
  const double nd = static_cast<double>(n);
  if (const auto* p = std::get_if<Power>(&data_)) return std::pow(nd, -p->exponent);
  if (const auto* h = std::get_if<Harmonic>(&data_)) return std::min(1.0, h->c / (nd + h->a));
  if (const auto* c = std::get_if<Constant>(&data_)) return c->v;
  if (const auto* o = std::get_if<OneMinusInversePower>(&data_)) {
    return 1.0 - std::pow(nd + 1.0, -o->p);
  }
  const auto& ip = std::get<InversePower>(data_);
  return std::pow(nd + 1.0, -ip.p);
}

std::set<ConditionTag> Schedule::tags() const {
  using Tag = ConditionTag;
  if (std::holds_alternative<Power>(data_) || std::holds_alternative<Harmonic>(data_)) {
    // n^{-t} with t <= 1 and c/(n+a) both vanish with divergent series
    return {Tag::TendsToZero, Tag::SumDiverges};
  }
  if (const auto* c = std::get_if<Constant>(&data_)) {
    if (c->v == 0.0) return {Tag::Summable};
    if (c->v == 1.0) return {Tag::ComplementSummable};
    return {Tag::LiminfProductPositive};
  }
  if (std::holds_alternative<OneMinusInversePower>(data_)) return {Tag::ComplementSummable};
  return {Tag::Summable, Tag::TendsToZero};  // inverse power, p > 1
}

std::string Schedule::family() const {
  if (std::holds_alternative<Power>(data_)) return "power";
  if (std::holds_alternative<Harmonic>(data_)) return "harmonic";
  if (std::holds_alternative<Constant>(data_)) return "constant";
  if (std::holds_alternative<OneMinusInversePower>(data_)) return "one_minus_inverse_power";
  return "inverse_power";
}

std::string Schedule::describe() const {
  std::ostringstream os;
  os << family() << "(";
  if (const auto* p = std::get_if<Power>(&data_)) {
    os << "theta=" << p->exponent;
  } else if (const auto* h = std::get_if<Harmonic>(&data_)) {
    os << "c=" << h->c << ", a=" << h->a;
  } else if (const auto* c = std::get_if<Constant>(&data_)) {
    os << "v=" << c->v;
  } else if (const auto* o = std::get_if<OneMinusInversePower>(&data_)) {
    os << "p=" << o->p;
  } else {
    os << "p=" << std::get<InversePower>(data_).p;
  }
  os << ")";
  return os.str();
}

double Schedule::param(const std::string& name) const {
  if (const auto* p = std::get_if<Power>(&data_)) {
    if (name == "theta") return p->exponent;
  } else if (const auto* h = std::get_if<Harmonic>(&data_)) {
    if (name == "c") return h->c;
    if (name == "a") return h->a;
  } else if (const auto* c = std::get_if<Constant>(&data_)) {
    if (name == "v") return c->v;
  } else if (const auto* o = std::get_if<OneMinusInversePower>(&data_)) {
    if (name == "p") return o->p;
  } else if (const auto* ip = std::get_if<InversePower>(&data_)) {
    if (name == "p") return ip->p;
  }
  throw std::invalid_argument("Schedule::param: no parameter '" + name + "' in family " +
                              family());
}

CaseValidation validate_case(const Schedule& alpha, const Schedule& beta, SchemeCase c) {
  const auto alpha_tags = alpha.tags();
  if (!alpha_tags.contains(ConditionTag::TendsToZero)) {
    return {false, "alpha lacks tends_to_zero"};
  }
  if (!alpha_tags.contains(ConditionTag::SumDiverges)) {
    return {false, "alpha lacks sum_diverges"};
  }
  const auto beta_tags = beta.tags();
  ConditionTag needed = ConditionTag::LiminfProductPositive;
  switch (c) {
    case SchemeCase::FixT:
      needed = ConditionTag::ComplementSummable;
      break;
    case SchemeCase::FixS:
      needed = ConditionTag::Summable;
      break;
    case SchemeCase::Common:
      needed = ConditionTag::LiminfProductPositive;
      break;
  }
  if (!beta_tags.contains(needed)) {
    return {false, "beta lacks " + to_string(needed) + " (required by case " + to_string(c) + ")"};
  }
  return {true, ""};
}

}  // namespace anchorfp
