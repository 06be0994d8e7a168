#pragma once

#include <string>
#include <string_view>

namespace tadda {

// Scoring functions s(y_hat, y), negatively oriented: lower is better.

inline constexpr double kDefaultEpsilon = 0.048;

enum class ScoreKind { AE, SE, TADDA1_L1, TADDA1_L2, TADDA2_L1 };

bool is_tadda(ScoreKind kind);

class ScoreSpec {
 public:
  // Throws std::invalid_argument for a TADDA kind with eps <= 0.
  explicit ScoreSpec(ScoreKind kind, double epsilon = kDefaultEpsilon);

  static ScoreSpec ae() { return ScoreSpec(ScoreKind::AE); }
  static ScoreSpec se() { return ScoreSpec(ScoreKind::SE); }
  static ScoreSpec tadda1_l1(double eps = kDefaultEpsilon) { return ScoreSpec(ScoreKind::TADDA1_L1, eps); }
  static ScoreSpec tadda1_l2(double eps = kDefaultEpsilon) { return ScoreSpec(ScoreKind::TADDA1_L2, eps); }
  static ScoreSpec tadda2_l1(double eps = kDefaultEpsilon) { return ScoreSpec(ScoreKind::TADDA2_L1, eps); }

  ScoreKind kind() const { return kind_; }
  // Only meaningful for TADDA kinds; 0 otherwise.
  double epsilon() const { return epsilon_; }

  // "ae", "se", "tadda1_l1(eps=0.048)", ...
  std::string to_string() const;

  friend bool operator==(const ScoreSpec&, const ScoreSpec&) = default;
  friend auto operator<=>(const ScoreSpec&, const ScoreSpec&) = default;

 private:
  ScoreKind kind_;
  double epsilon_;
};

// Case-insensitive. Accepts "tadda1_l1", "TADDA1_L1(eps=0.048)", "ae", ...
// A TADDA name without an eps argument takes default_eps.
ScoreSpec parse_score_spec(std::string_view text, double default_eps = kDefaultEpsilon);

double absolute_error(double y_hat, double y);
double squared_error(double y_hat, double y);

// |y_hat - y| plus (y_hat - eps) if y_hat > eps and y < -eps, or
// (-y_hat - eps) if y_hat < -eps and y > eps. All comparisons strict.
double tadda1_l1(double y_hat, double y, double eps);

// Squared distance plus the squared distance of y_hat to the nearer tolerance
// bound, under the same sign conditions as tadda1_l1.
double tadda1_l2(double y_hat, double y, double eps);

// Variant that also penalizes forecasts on the wrong side of the tolerance
// region when the outcome falls inside it:
//   |y_hat - eps| if (y_hat <= eps and y > eps) or (y_hat > eps and |y| <= eps)
//   |y_hat + eps| if (y_hat >= -eps and y < -eps) or (y_hat < -eps and |y| <= eps)
double tadda2_l1(double y_hat, double y, double eps);

double score(const ScoreSpec& spec, double y_hat, double y);

}  // namespace tadda
