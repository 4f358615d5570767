#include "qsym/serialize.hpp"

#include <utility>

namespace qsym {

namespace {

using nlohmann::json;

json point_json(const Point& p) { return p.to_string(); }

Point point_from_json(const json& j, const char* field) {
  if (!j.is_string())
    throw FormatError(std::string("witness: ") + field +
                      " must be a bitstring");
  try {
    return Point::parse(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw FormatError(std::string("witness: ") + field +
                      " must contain only '0'/'1'");
  }
}

int bit_from_json(const json& j, const char* field) {
  if (j.is_boolean()) return j.get<bool>() ? 1 : 0;
  if (j.is_number_integer()) {
    const int v = j.get<int>();
    if (v == 0 || v == 1) return v;
  }
  throw FormatError(std::string("witness: ") + field + " must be 0 or 1");
}

json pair_json(const char* kind, const Point& x, const Point& y, bool fx,
               bool fy) {
  return json{{"kind", kind},
              {"x", point_json(x)},
              {"y", point_json(y)},
              {"fx", fx ? 1 : 0},
              {"fy", fy ? 1 : 0}};
}

json assignment_json(const Assignment& a) {
  json out = json::object();
  for (const auto& [idx, val] : a) out[std::to_string(idx)] = val ? 1 : 0;
  return out;
}

Assignment assignment_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("witness: assignment must be an object");
  Assignment a;
  for (const auto& [key, val] : j.items()) {
    std::size_t pos = 0;
    int idx = 0;
    try {
      idx = std::stoi(key, &pos);
    } catch (const std::exception&) {
      throw FormatError("witness: assignment key is not an index");
    }
    if (pos != key.size() || idx < 1)
      throw FormatError("witness: assignment key is not an index");
    a[idx] = bit_from_json(val, "assignment value") != 0;
  }
  return a;
}

const json& require(const json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end())
    throw FormatError(std::string("witness: missing field '") + field + "'");
  return *it;
}

NonSymmetryWitness non_symmetry_from_json(const json& j) {
  return {point_from_json(require(j, "x"), "x"),
          point_from_json(require(j, "y"), "y"),
          bit_from_json(require(j, "fx"), "fx") != 0,
          bit_from_json(require(j, "fy"), "fy") != 0};
}

ArgDependencyWitness arg_dependency_from_json(const json& j) {
  const json& idx = require(j, "index");
  if (!idx.is_number_integer() || idx.get<int>() < 1)
    throw FormatError("witness: index must be a positive integer");
  return {idx.get<int>(), point_from_json(require(j, "x"), "x"),
          point_from_json(require(j, "y"), "y"),
          bit_from_json(require(j, "fx"), "fx") != 0,
          bit_from_json(require(j, "fy"), "fy") != 0};
}

// Doubles in CSV are printed through the JSON encoder so both formats carry
// byte-identical numeric values.
std::string csv_num(double d) { return json(d).dump(); }

}  // namespace

json witness_to_json(const Witness& w) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NonSymmetryWitness>) {
          return pair_json("non-symmetry", v.x, v.y, v.fx, v.fy);
        } else if constexpr (std::is_same_v<T, NonConstancyWitness>) {
          return pair_json("non-constancy", v.x, v.y, v.fx, v.fy);
        } else if constexpr (std::is_same_v<T, ArgDependencyWitness>) {
          json j = pair_json("arg-dependency", v.x, v.y, v.fx, v.fy);
          j["index"] = v.index;
          return j;
        } else {
          json deps = json::array();
          for (const auto& d : v.dependencies) {
            json dj = pair_json("arg-dependency", d.x, d.y, d.fx, d.fy);
            dj["index"] = d.index;
            deps.push_back(std::move(dj));
          }
          return json{{"kind", "quasi-asymmetry"},
                      {"dependencies", std::move(deps)},
                      {"assignment", assignment_json(v.fixing)},
                      {"pair", pair_json("non-symmetry", v.pair.x, v.pair.y,
                                         v.pair.fx, v.pair.fy)}};
        }
      },
      w);
}

Witness witness_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("witness: expected a JSON object");
  const json& kind = require(j, "kind");
  if (!kind.is_string()) throw FormatError("witness: kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "non-symmetry") return non_symmetry_from_json(j);
  if (k == "non-constancy") {
    NonSymmetryWitness p = non_symmetry_from_json(j);
    return NonConstancyWitness{std::move(p.x), std::move(p.y), p.fx, p.fy};
  }
  if (k == "arg-dependency") return arg_dependency_from_json(j);
  if (k == "quasi-asymmetry") {
    QuasiAsymmetryWitness w;
    const json& deps = require(j, "dependencies");
    if (!deps.is_array())
      throw FormatError("witness: dependencies must be an array");
    for (const auto& d : deps)
      w.dependencies.push_back(arg_dependency_from_json(d));
    w.fixing = assignment_from_json(require(j, "assignment"));
    w.pair = non_symmetry_from_json(require(j, "pair"));
    return w;
  }
  throw FormatError("witness: unknown kind '" + k + "'");
}

json spec_to_json(const FunctionSpec& spec) {
  json j{{"family", family_name(spec.family)}, {"n", spec.n}};
  switch (spec.family) {
    case Family::kConst: j["value"] = spec.value ? 1 : 0; break;
    case Family::kDictator: j["index"] = spec.index; break;
    case Family::kParity:
    case Family::kMajority: break;
    case Family::kThreshold: j["threshold"] = spec.threshold; break;
    case Family::kRandomTable: j["fn_seed"] = spec.fn_seed; break;
    case Family::kSymJunta: {
      j["args"] = spec.args;
      std::string levels;
      for (auto v : spec.levels) levels += v ? '1' : '0';
      j["levels"] = levels;
      break;
    }
    case Family::kPerturbed:
      j["flips"] = spec.flips;
      j["fn_seed"] = spec.fn_seed;
      if (spec.base) j["base"] = spec_to_json(*spec.base);
      break;
  }
  j["label"] = spec.label();
  return j;
}

json verdict_to_json(const Verdict& v, const RunInfo& info) {
  json j{{"verdict", v.accepted ? "yes" : "no"},
         {"queries", v.queries_used},
         {"k", info.k},
         {"seed", info.seed},
         {"params", json{{"test", info.test},
                         {"eps", info.eps},
                         {"delta", info.delta},
                         {"n", info.n}}}};
  j["witness"] = v.witness ? witness_to_json(*v.witness) : json(nullptr);
  return j;
}

json estimate_to_json(const EstimateResult& e, const RunInfo& info) {
  json evidence = json::array();
  for (const auto& d : e.evidence) evidence.push_back(witness_to_json(d));
  return json{{"dependent_args", e.dependent_args},
              {"evidence", std::move(evidence)},
              {"queries", e.queries_used},
              {"seed", info.seed},
              {"params", json{{"test", info.test},
                              {"eps", info.eps},
                              {"delta", info.delta},
                              {"n", info.n}}}};
}

json distance_to_json(const std::string& cls, int n, const DistanceValue& d,
                      const DependencySet* junta_args) {
  json j{{"class", cls},
         {"n", n},
         {"numerator", d.numerator},
         {"denominator", d.denominator}};
  if (junta_args) j["args"] = *junta_args;
  return j;
}

json report_to_json(const TrialReport& r) {
  json source = r.spec_known
                    ? spec_to_json(r.spec)
                    : json{{"family", "table"}, {"n", r.spec.n},
                           {"label", r.source}};
  json j{{"spec", std::move(source)},
         {"test", json{{"name", tester_name(r.tester)},
                       {"eps", r.eps},
                       {"delta", r.delta}}},
         {"trials", r.trials},
         {"yes_count", r.yes_count},
         {"no_count", r.no_count},
         {"rejection_rate", r.rejection_rate},
         {"wilson_low", r.wilson.low},
         {"wilson_high", r.wilson.high},
         {"mean_queries", r.mean_queries},
         {"max_queries", r.max_queries},
         {"query_cap", r.query_cap},
         {"distance_available", r.distance_available},
         {"seed", r.seed}};
  j["distance"] = r.distance_available
                      ? json{{"numerator", r.exact_distance.numerator},
                             {"denominator", r.exact_distance.denominator}}
                      : json(nullptr);
  return j;
}

std::string report_to_csv(const TrialReport& r) {
  std::string head =
      "family,n,test,eps,delta,trials,yes_count,no_count,rejection_rate,"
      "wilson_low,wilson_high,mean_queries,max_queries,query_cap,"
      "distance_available,distance_num,distance_den,seed\n";
  std::string row = (r.spec_known ? family_name(r.spec.family)
                                  : std::string("table")) +
                    "," + std::to_string(r.spec.n) +
                    "," + tester_name(r.tester) + "," + csv_num(r.eps) + "," +
                    csv_num(r.delta) + "," + std::to_string(r.trials) + "," +
                    std::to_string(r.yes_count) + "," +
                    std::to_string(r.no_count) + "," +
                    csv_num(r.rejection_rate) + "," + csv_num(r.wilson.low) +
                    "," + csv_num(r.wilson.high) + "," +
                    csv_num(r.mean_queries) + "," +
                    std::to_string(r.max_queries) + "," +
                    std::to_string(r.query_cap) + "," +
                    (r.distance_available ? "1" : "0") + "," +
                    std::to_string(r.exact_distance.numerator) + "," +
                    std::to_string(r.exact_distance.denominator) + "," +
                    std::to_string(r.seed) + "\n";
  return head + row;
}

std::string verdict_to_csv(const Verdict& v, const RunInfo& info) {
  return "test,n,eps,delta,k,verdict,queries,seed\n" + info.test + "," +
         std::to_string(info.n) + "," + csv_num(info.eps) + "," +
         csv_num(info.delta) + "," + std::to_string(info.k) + "," +
         (v.accepted ? "yes" : "no") + "," + std::to_string(v.queries_used) +
         "," + std::to_string(info.seed) + "\n";
}

std::string distance_to_csv(const std::string& cls, int n,
                            const DistanceValue& d) {
  return "class,n,numerator,denominator\n" + cls + "," + std::to_string(n) +
         "," + std::to_string(d.numerator) + "," +
         std::to_string(d.denominator) + "\n";
}

}  // namespace qsym
