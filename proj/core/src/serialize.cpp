#include "sylvester/serialize.hpp"

#include <cmath>
#include <stdexcept>

namespace sylvester {

namespace {

// JSON has no infinities; they travel as the strings "inf" / "-inf".
Json real_to_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double real_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    throw std::invalid_argument("expected a number or \"inf\", got \"" + s + "\"");
  }
  return j.get<double>();
}

}  // namespace

void to_json(Json& j, const Inertia3& v) {
  j = Json{{"n_plus", v.n_plus}, {"n_zero", v.n_zero}, {"n_minus", v.n_minus}};
}

void from_json(const Json& j, Inertia3& v) {
  j.at("n_plus").get_to(v.n_plus);
  j.at("n_zero").get_to(v.n_zero);
  j.at("n_minus").get_to(v.n_minus);
}

void to_json(Json& j, const Inertia5& v) {
  j = Json{{"n_plus", v.n_plus},
           {"n_zero", v.n_zero},
           {"n_minus", v.n_minus},
           {"n_complex", v.n_complex},
           {"n_infinite", v.n_infinite}};
}

void from_json(const Json& j, Inertia5& v) {
  j.at("n_plus").get_to(v.n_plus);
  j.at("n_zero").get_to(v.n_zero);
  j.at("n_minus").get_to(v.n_minus);
  j.at("n_complex").get_to(v.n_complex);
  j.at("n_infinite").get_to(v.n_infinite);
}

void to_json(Json& j, const Tolerance& v) {
  j = Json{{"relative_zero", v.relative_zero ? Json(*v.relative_zero) : Json(nullptr)},
           {"absolute_floor", v.absolute_floor}};
}

void from_json(const Json& j, Tolerance& v) {
  const auto& rel = j.at("relative_zero");
  v.relative_zero = rel.is_null() ? std::nullopt : std::optional<double>(rel.get<double>());
  j.at("absolute_floor").get_to(v.absolute_floor);
}

void to_json(Json& j, const Bound& v) {
  j = Json{{"lower", v.lower}, {"upper", v.upper}, {"lower_source", v.lower_source}, {"upper_source", v.upper_source}};
}

void from_json(const Json& j, Bound& v) {
  j.at("lower").get_to(v.lower);
  j.at("upper").get_to(v.upper);
  j.at("lower_source").get_to(v.lower_source);
  j.at("upper_source").get_to(v.upper_source);
}

void to_json(Json& j, const InertiaCombinations& v) {
  j = Json{{"n_pp", v.n_pp}, {"n_mm", v.n_mm}, {"n_pm", v.n_pm}, {"n_mp", v.n_mp},
           {"delta", v.delta}, {"N_pp", v.N_pp}, {"N_pm", v.N_pm}};
}

void from_json(const Json& j, InertiaCombinations& v) {
  j.at("n_pp").get_to(v.n_pp);
  j.at("n_mm").get_to(v.n_mm);
  j.at("n_pm").get_to(v.n_pm);
  j.at("n_mp").get_to(v.n_mp);
  j.at("delta").get_to(v.delta);
  j.at("N_pp").get_to(v.N_pp);
  j.at("N_pm").get_to(v.N_pm);
}

void to_json(Json& j, const BoundsReport& v) {
  j = Json{{"n", v.n},
           {"inertia_a", v.inertia_a},
           {"inertia_b", v.inertia_b},
           {"n_plus", v.n_plus},
           {"n_zero", v.n_zero},
           {"n_minus", v.n_minus},
           {"n_complex", v.n_complex},
           {"n_infinite", v.n_infinite},
           {"n_real", v.n_real},
           {"aux", v.aux},
           {"tolerance_used", v.tolerance_used ? Json(*v.tolerance_used) : Json(nullptr)},
           {"rank_used", v.rank_used ? Json(*v.rank_used) : Json(nullptr)},
           {"notes", v.notes}};
}

void from_json(const Json& j, BoundsReport& v) {
  j.at("n").get_to(v.n);
  j.at("inertia_a").get_to(v.inertia_a);
  j.at("inertia_b").get_to(v.inertia_b);
  j.at("n_plus").get_to(v.n_plus);
  j.at("n_zero").get_to(v.n_zero);
  j.at("n_minus").get_to(v.n_minus);
  j.at("n_complex").get_to(v.n_complex);
  j.at("n_infinite").get_to(v.n_infinite);
  j.at("n_real").get_to(v.n_real);
  j.at("aux").get_to(v.aux);
  const auto& tol = j.at("tolerance_used");
  v.tolerance_used = tol.is_null() ? std::nullopt : std::optional<Tolerance>(tol.get<Tolerance>());
  const auto& rank = j.at("rank_used");
  v.rank_used = rank.is_null() ? std::nullopt : std::optional<int>(rank.get<int>());
  j.at("notes").get_to(v.notes);
}

void to_json(Json& j, const CountRange& v) { j = Json{{"lower", v.lower}, {"upper", v.upper}}; }

void from_json(const Json& j, CountRange& v) {
  j.at("lower").get_to(v.lower);
  j.at("upper").get_to(v.upper);
}

void to_json(Json& j, const IntervalReport& v) {
  j = Json{{"a", real_to_json(v.a)},
           {"b", real_to_json(v.b)},
           {"count_open_interval", v.count_open_interval},
           {"count_open_mobius", v.count_open_mobius},
           {"count_at_a", v.count_at_a},
           {"count_at_b", v.count_at_b},
           {"count_outside_or_infinite", v.count_outside_or_infinite},
           {"count_complex", v.count_complex},
           {"closed_interval_lower", v.closed_interval_lower},
           {"parity_set", v.parity_set ? Json(*v.parity_set) : Json(nullptr)},
           {"a_is_eigenvalue", v.a_is_eigenvalue},
           {"b_is_eigenvalue", v.b_is_eigenvalue},
           {"inertia_a", v.inertia_a},
           {"inertia_b", v.inertia_b},
           {"normal_rank", v.normal_rank},
           {"notes", v.notes}};
}

void from_json(const Json& j, IntervalReport& v) {
  v.a = real_from_json(j.at("a"));
  v.b = real_from_json(j.at("b"));
  j.at("count_open_interval").get_to(v.count_open_interval);
  j.at("count_open_mobius").get_to(v.count_open_mobius);
  j.at("count_at_a").get_to(v.count_at_a);
  j.at("count_at_b").get_to(v.count_at_b);
  j.at("count_outside_or_infinite").get_to(v.count_outside_or_infinite);
  j.at("count_complex").get_to(v.count_complex);
  j.at("closed_interval_lower").get_to(v.closed_interval_lower);
  const auto& parity = j.at("parity_set");
  v.parity_set = parity.is_null() ? std::nullopt : std::optional<std::vector<int>>(parity.get<std::vector<int>>());
  j.at("a_is_eigenvalue").get_to(v.a_is_eigenvalue);
  j.at("b_is_eigenvalue").get_to(v.b_is_eigenvalue);
  j.at("inertia_a").get_to(v.inertia_a);
  j.at("inertia_b").get_to(v.inertia_b);
  j.at("normal_rank").get_to(v.normal_rank);
  j.at("notes").get_to(v.notes);
}

void to_json(Json& j, const EigenRecord& v) {
  Json value = "inf";
  if (v.value) value = Json{{"re", v.value->real()}, {"im", v.value->imag()}};
  j = Json{{"value", value},
           {"algebraic_mult", v.algebraic_mult},
           {"geometric_mult", v.geometric_mult},
           {"classification", to_string(v.classification)}};
}

void from_json(const Json& j, EigenRecord& v) {
  const auto& value = j.at("value");
  if (value.is_string()) {
    if (value.get<std::string>() != "inf") throw std::invalid_argument("eigenvalue must be {re, im} or \"inf\"");
    v.value = std::nullopt;
  } else {
    v.value = Complex(value.at("re").get<double>(), value.at("im").get<double>());
  }
  j.at("algebraic_mult").get_to(v.algebraic_mult);
  j.at("geometric_mult").get_to(v.geometric_mult);
  v.classification = eigen_class_from_string(j.at("classification").get<std::string>());
}

void to_json(Json& j, const OracleReport& v) {
  j = Json{{"n", v.n},
           {"normal_rank", v.normal_rank},
           {"common_kernel", v.common_kernel},
           {"inertia", v.inertia},
           {"records", v.records}};
}

void from_json(const Json& j, OracleReport& v) {
  j.at("n").get_to(v.n);
  j.at("normal_rank").get_to(v.normal_rank);
  j.at("common_kernel").get_to(v.common_kernel);
  j.at("inertia").get_to(v.inertia);
  j.at("records").get_to(v.records);
}

void to_json(Json& j, const ParityResult& v) {
  j = Json{{"counts", v.counts}, {"base", v.base}, {"k", v.k}, {"k_overridden", v.k_overridden}};
}

void to_json(Json& j, const NepLowerResult& v) {
  j = Json{{"lower", v.lower},
           {"inertia_at_a", v.at_a},
           {"inertia_at_b", v.at_b},
           {"rank_baseline", v.rank_baseline},
           {"caveat", v.caveat}};
}

void to_json(Json& j, const DefiniteCheck& v) {
  j = Json{{"definite", v.definite},
           {"sign", v.sign},
           {"not_definite_at", v.not_definite_at ? Json(*v.not_definite_at) : Json(nullptr)},
           {"inertias", v.inertias},
           {"per_interval_count", v.per_interval_count},
           {"sign_characteristic", v.sign_characteristic}};
}

void to_json(Json& j, const EndpointLower& v) {
  j = Json{{"positive_lower", v.positive_lower}, {"negative_lower", v.negative_lower}};
}

}  // namespace sylvester
