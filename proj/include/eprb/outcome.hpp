#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace eprb {

/// Raised when an input violates a documented precondition (bad table row,
/// same-side context pair, malformed file, ...). The CLI maps it to exit 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Spin measurement outcome, +1 or -1.
enum class Outcome : int { plus = +1, minus = -1 };

constexpr int value(Outcome o) { return static_cast<int>(o); }
constexpr Outcome opposite(Outcome o) { return o == Outcome::plus ? Outcome::minus : Outcome::plus; }
constexpr std::size_t oidx(Outcome o) { return o == Outcome::plus ? 0 : 1; }
constexpr std::array<Outcome, 2> both_outcomes{Outcome::plus, Outcome::minus};

const char* to_cstr(Outcome o);          // "+1" / "-1"
Outcome parse_outcome(std::string_view s);  // accepts "+1", "-1", "+", "-"

/// Measurement settings: two per side. A, A' act on the left particle,
/// B, B' on the right.
enum class Setting : int { a = 0, a_prime = 1, b = 2, b_prime = 3 };

enum class Side { left, right };

constexpr std::size_t sidx(Setting s) { return static_cast<std::size_t>(s); }
constexpr Side side(Setting s) { return sidx(s) < 2 ? Side::left : Side::right; }
constexpr std::array<Setting, 4> all_settings{Setting::a, Setting::a_prime, Setting::b,
                                              Setting::b_prime};
constexpr std::array<Setting, 2> left_settings{Setting::a, Setting::a_prime};
constexpr std::array<Setting, 2> right_settings{Setting::b, Setting::b_prime};

const char* to_cstr(Setting s);          // "A" / "A'" / "B" / "B'"
Setting parse_setting(std::string_view s);

/// Joint contexts in fixed order AB, AB', A'B, A'B'. This order indexes
/// correlation quads, schedule probabilities and report blocks throughout.
constexpr std::array<std::pair<Setting, Setting>, 4> joint_contexts{
    std::pair{Setting::a, Setting::b}, std::pair{Setting::a, Setting::b_prime},
    std::pair{Setting::a_prime, Setting::b}, std::pair{Setting::a_prime, Setting::b_prime}};

constexpr std::size_t context_index(Setting left, Setting right) {
  return 2 * (left == Setting::a_prime ? 1 : 0) + (right == Setting::b_prime ? 1 : 0);
}

std::string context_name(Setting left, Setting right);  // e.g. "A'B"

/// Both-sides check shared by all joint-context operations.
void require_opposite_sides(Setting c, Setting c_prime);

}  // namespace eprb
