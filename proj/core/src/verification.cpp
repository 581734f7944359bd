#include "mapcount/verification.hpp"

#include <sstream>

#include "json.hpp"

namespace mapcount {

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["suite"] = name;
  j["ranges"] = ranges;
  j["cases"] = cases;
  j["passed"] = passed;
  j["pass"] = pass();
  if (first_failure) j["first_failure"] = *first_failure;
  j["wall_ms"] = wall_ms;
  return j.dump(2);
}

std::string VerificationReport::summary_line() const {
  std::ostringstream os;
  os << (pass() ? "PASS" : "FAIL") << " " << name << " [" << ranges << "] "
     << passed << "/" << cases << " cases, " << wall_ms << " ms";
  if (first_failure) os << "; first failure: " << *first_failure;
  return os.str();
}

}  // namespace mapcount
