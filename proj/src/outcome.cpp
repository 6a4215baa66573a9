#include "eprb/outcome.hpp"

namespace eprb {

const char* to_cstr(Outcome o) { return o == Outcome::plus ? "+1" : "-1"; }

Outcome parse_outcome(std::string_view s) {
  if (s == "+1" || s == "+") return Outcome::plus;
  if (s == "-1" || s == "-") return Outcome::minus;
  throw ValidationError("bad outcome token '" + std::string(s) + "' (want +1 or -1)");
}

const char* to_cstr(Setting s) {
  switch (s) {
    case Setting::a: return "A";
    case Setting::a_prime: return "A'";
    case Setting::b: return "B";
    case Setting::b_prime: return "B'";
  }
  return "?";
}

Setting parse_setting(std::string_view s) {
  if (s == "A" || s == "a") return Setting::a;
  if (s == "A'" || s == "a'" || s == "Ap" || s == "ap") return Setting::a_prime;
  if (s == "B" || s == "b") return Setting::b;
  if (s == "B'" || s == "b'" || s == "Bp" || s == "bp") return Setting::b_prime;
  throw ValidationError("bad setting token '" + std::string(s) + "' (want A, A', B or B')");
}

std::string context_name(Setting left, Setting right) {
  return std::string(to_cstr(left)) + to_cstr(right);
}

void require_opposite_sides(Setting c, Setting c_prime) {
  if (side(c) == side(c_prime))
    throw ValidationError(std::string("settings ") + to_cstr(c) + " and " + to_cstr(c_prime) +
                          " are on the same side");
}

}  // namespace eprb
