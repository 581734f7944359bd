#include "mapcount/painleve/orbit.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "mapcount/errors.hpp"
#include "mapcount/painleve/systems.hpp"

namespace mapcount::painleve {

const char* system_name(SystemKind k) {
  switch (k) {
    case SystemKind::dp1: return "dp1";
    case SystemKind::dp1_sfu: return "dp1-sfu";
    case SystemKind::mixed: return "mixed";
    case SystemKind::mixed_sfuzw: return "mixed-sfuzw";
    case SystemKind::qrt_cubic: return "qrt-cubic";
    case SystemKind::planar_restricted: return "planar-restricted";
  }
  return "?";
}

SystemKind system_from_name(const std::string& name) {
  for (SystemKind k :
       {SystemKind::dp1, SystemKind::dp1_sfu, SystemKind::mixed,
        SystemKind::mixed_sfuzw, SystemKind::qrt_cubic,
        SystemKind::planar_restricted})
    if (name == system_name(k)) return k;
  throw ValidationError("unknown system '" + name + "'");
}

std::vector<std::string> state_labels(SystemKind k) {
  switch (k) {
    case SystemKind::dp1: return {"x", "y"};
    case SystemKind::dp1_sfu: return {"s", "f", "u"};
    case SystemKind::mixed: return {"x", "y", "z", "w"};
    case SystemKind::mixed_sfuzw: return {"s", "f", "u", "z", "w"};
    case SystemKind::qrt_cubic: return {"a", "x"};
    case SystemKind::planar_restricted: return {"s", "f"};
  }
  return {};
}

bool system_uses_index(SystemKind k) {
  return k == SystemKind::dp1 || k == SystemKind::mixed ||
         k == SystemKind::qrt_cubic;
}

namespace {

template <class T, class Make, class Lift>
std::vector<T> step_system(SystemKind kind, const std::vector<T>& v,
                           const WeightParams& p, Make make, Lift lift,
                           const T& index_value) {
  const T big_n = lift(p.N);
  switch (kind) {
    case SystemKind::dp1: {
      const auto r = Dp1Raw::step(std::array<T, 2>{v[0], v[1]}, index_value,
                                  big_n, lift(p.r()), make);
      return {r[0], r[1]};
    }
    case SystemKind::dp1_sfu: {
      const auto r = Dp1Sfu::step(std::array<T, 3>{v[0], v[1], v[2]},
                                  lift(p.gamma()), make);
      return {r[0], r[1], r[2]};
    }
    case SystemKind::mixed: {
      const auto r = MixedRaw::step(std::array<T, 4>{v[0], v[1], v[2], v[3]},
                                    index_value, big_n, lift(p.zeta()),
                                    lift(p.eta()), make);
      return {r[0], r[1], r[2], r[3]};
    }
    case SystemKind::mixed_sfuzw: {
      const auto r = MixedSfuzw::step(
          std::array<T, 5>{v[0], v[1], v[2], v[3], v[4]}, lift(p.gamma()),
          lift(p.zeta()), lift(p.eta()), make);
      return {r[0], r[1], r[2], r[3], r[4]};
    }
    case SystemKind::qrt_cubic: {
      if (p.t3.is_zero()) throw ValidationError("qrt-cubic needs t3 != 0");
      const auto r = QrtCubic::step(std::array<T, 2>{v[0], v[1]}, index_value,
                                    big_n, lift(p.t3), make);
      return {r[0], r[1]};
    }
    case SystemKind::planar_restricted: {
      const auto r = PlanarRestricted::step(std::array<T, 2>{v[0], v[1]}, make);
      return {r[0], r[1]};
    }
  }
  throw Error("unreachable system kind");
}

}  // namespace

double OrbitRecord::estimated_valid_digits(long n) const {
  const double lambda = 2.0 + std::sqrt(3.0);
  return precision_digits -
         static_cast<double>(n - start_index) * std::log10(lambda);
}

OrbitRecord run_orbit(SystemKind kind, const WeightParams& p,
                      const std::vector<BigFloat>& initial_state,
                      long start_index, long steps, int digits) {
  if (initial_state.size() != state_labels(kind).size())
    throw ValidationError("initial state has the wrong dimension");
  OrbitRecord rec;
  rec.system = kind;
  rec.params = p;
  rec.precision_digits = digits;
  rec.start_index = start_index;
  const auto make = [digits](long c) { return BigFloat(c, digits); };
  const auto lift = [digits](const Rational& q) { return BigFloat(q, digits); };
  std::vector<BigFloat> v;
  v.reserve(initial_state.size());
  for (const auto& x : initial_state) v.push_back(x.with_precision(digits));
  rec.indices.push_back(start_index);
  rec.states.push_back(v);
  for (long i = 0; i < steps; ++i) {
    const long n = start_index + i;
    try {
      v = step_system(kind, v, p, make, lift, BigFloat(n, digits));
    } catch (const PoleError& e) {
      rec.singularity = SingularityEvent{n, e.what()};
      break;
    }
    rec.indices.push_back(n + 1);
    rec.states.push_back(v);
  }
  return rec;
}

ExactOrbit run_exact_orbit(SystemKind kind, const WeightParams& p,
                           const std::vector<Rational>& initial_state,
                           long start_index, long steps, bool freeze_index) {
  if (initial_state.size() != state_labels(kind).size())
    throw ValidationError("initial state has the wrong dimension");
  ExactOrbit rec;
  rec.system = kind;
  rec.params = p;
  rec.start_index = start_index;
  rec.frozen_index = freeze_index;
  const auto make = [](long c) { return Rational(c); };
  const auto lift = [](const Rational& q) { return q; };
  std::vector<Rational> v = initial_state;
  rec.indices.push_back(start_index);
  rec.states.push_back(v);
  for (long i = 0; i < steps; ++i) {
    const long n = freeze_index ? start_index : start_index + i;
    try {
      v = step_system(kind, v, p, make, lift, Rational(n));
    } catch (const PoleError& e) {
      rec.singularity = SingularityEvent{start_index + i, e.what()};
      break;
    }
    rec.indices.push_back(start_index + i + 1);
    rec.states.push_back(v);
  }
  return rec;
}

namespace {

nlohmann::json params_json(const WeightParams& p) {
  nlohmann::json j;
  j["N"] = p.N.to_string();
  j["t3"] = p.t3.to_string();
  j["t4"] = p.t4.to_string();
  return j;
}

template <class Rec, class ToString>
std::string orbit_csv(const Rec& rec, SystemKind kind, ToString to_string) {
  std::ostringstream os;
  os << "n";
  for (const auto& label : state_labels(kind)) os << "," << label;
  os << "\n";
  for (size_t i = 0; i < rec.indices.size(); ++i) {
    os << rec.indices[i];
    for (const auto& x : rec.states[i]) os << "," << to_string(x);
    os << "\n";
  }
  return os.str();
}

template <class Rec, class ToString>
nlohmann::json orbit_json(const Rec& rec, SystemKind kind, ToString to_string) {
  nlohmann::json j;
  j["system"] = system_name(kind);
  j["params"] = params_json(rec.params);
  j["start_index"] = rec.start_index;
  if (rec.singularity) {
    j["singularity"] = {{"at_index", rec.singularity->at_index},
                        {"message", rec.singularity->message}};
  }
  auto rows = nlohmann::json::array();
  for (size_t i = 0; i < rec.indices.size(); ++i) {
    nlohmann::json row;
    row["n"] = rec.indices[i];
    auto st = nlohmann::json::array();
    for (const auto& x : rec.states[i]) st.push_back(to_string(x));
    row["state"] = st;
    rows.push_back(row);
  }
  j["orbit"] = rows;
  return j;
}

}  // namespace

std::string OrbitRecord::to_csv() const {
  return orbit_csv(*this, system, [](const BigFloat& x) { return x.to_string(); });
}

std::string OrbitRecord::to_json() const {
  nlohmann::json j =
      orbit_json(*this, system, [](const BigFloat& x) { return x.to_string(); });
  j["precision_digits"] = precision_digits;
  return j.dump(2);
}

std::string ExactOrbit::to_csv() const {
  return orbit_csv(*this, system, [](const Rational& x) { return x.to_string(); });
}

std::string ExactOrbit::to_json() const {
  nlohmann::json j =
      orbit_json(*this, system, [](const Rational& x) { return x.to_string(); });
  j["exact"] = true;
  j["frozen_index"] = frozen_index;
  return j.dump(2);
}

std::pair<long, std::vector<std::string>> parse_seed_json(
    const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("seed file is not valid JSON: ") + e.what());
  }
  try {
    const long n = j.at("n").get<long>();
    std::vector<std::string> state;
    for (const auto& s : j.at("state")) state.push_back(s.get<std::string>());
    return {n, state};
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed seed file: ") + e.what());
  }
}

}  // namespace mapcount::painleve
