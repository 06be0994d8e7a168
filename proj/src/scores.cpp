#include "tadda/scores.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tadda {

namespace {

void require_finite(double y_hat, double y) {
  if (!std::isfinite(y_hat) || !std::isfinite(y)) {
    std::ostringstream msg;
    msg << "scores need finite arguments, got y_hat=" << y_hat << ", y=" << y;
    throw std::invalid_argument(msg.str());
  }
}

void require_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    std::ostringstream msg;
    msg << "tolerance eps must be positive and finite, got " << eps;
    throw std::invalid_argument(msg.str());
  }
}

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string shortest(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

}  // namespace

bool is_tadda(ScoreKind kind) {
  return kind == ScoreKind::TADDA1_L1 || kind == ScoreKind::TADDA1_L2 || kind == ScoreKind::TADDA2_L1;
}

ScoreSpec::ScoreSpec(ScoreKind kind, double epsilon) : kind_(kind), epsilon_(0.0) {
  if (is_tadda(kind)) {
    require_eps(epsilon);
    epsilon_ = epsilon;
  }
}

std::string ScoreSpec::to_string() const {
  switch (kind_) {
    case ScoreKind::AE: return "ae";
    case ScoreKind::SE: return "se";
    case ScoreKind::TADDA1_L1: return "tadda1_l1(eps=" + shortest(epsilon_) + ")";
    case ScoreKind::TADDA1_L2: return "tadda1_l2(eps=" + shortest(epsilon_) + ")";
    case ScoreKind::TADDA2_L1: return "tadda2_l1(eps=" + shortest(epsilon_) + ")";
  }
  return "?";
}

ScoreSpec parse_score_spec(std::string_view text, double default_eps) {
  const std::string s = lower(trim(text));
  std::string_view name = s;
  std::string_view args;
  if (const auto open = s.find('('); open != std::string::npos) {
    if (s.back() != ')') throw std::invalid_argument("malformed score spec '" + std::string(text) + "'");
    name = trim(std::string_view(s).substr(0, open));
    args = trim(std::string_view(s).substr(open + 1, s.size() - open - 2));
  }

  ScoreKind kind;
  if (name == "ae" || name == "mae") {
    kind = ScoreKind::AE;
  } else if (name == "se" || name == "mse") {
    kind = ScoreKind::SE;
  } else if (name == "tadda1_l1" || name == "tadda") {
    kind = ScoreKind::TADDA1_L1;
  } else if (name == "tadda1_l2") {
    kind = ScoreKind::TADDA1_L2;
  } else if (name == "tadda2_l1") {
    kind = ScoreKind::TADDA2_L1;
  } else {
    throw std::invalid_argument("unknown score '" + std::string(text) + "'");
  }

  double eps = default_eps;
  if (!args.empty()) {
    if (!is_tadda(kind)) throw std::invalid_argument("score '" + std::string(name) + "' takes no arguments");
    const auto eq = args.find('=');
    if (eq == std::string_view::npos || trim(args.substr(0, eq)) != "eps") {
      throw std::invalid_argument("expected 'eps=<value>' in score spec '" + std::string(text) + "'");
    }
    const auto value = trim(args.substr(eq + 1));
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), eps);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw std::invalid_argument("bad eps value in score spec '" + std::string(text) + "'");
    }
  }
  return ScoreSpec(kind, eps);
}

double absolute_error(double y_hat, double y) {
  require_finite(y_hat, y);
  return std::abs(y_hat - y);
}

double squared_error(double y_hat, double y) {
  require_finite(y_hat, y);
  return (y_hat - y) * (y_hat - y);
}

double tadda1_l1(double y_hat, double y, double eps) {
  require_finite(y_hat, y);
  require_eps(eps);
  double penalty = 0.0;
  if (y_hat > eps && y < -eps) {
    penalty = y_hat - eps;
  } else if (y_hat < -eps && y > eps) {
    penalty = -y_hat - eps;
  }
  return std::abs(y_hat - y) + penalty;
}

double tadda1_l2(double y_hat, double y, double eps) {
  require_finite(y_hat, y);
  require_eps(eps);
  double penalty = 0.0;
  if (y_hat > eps && y < -eps) {
    penalty = (y_hat - eps) * (y_hat - eps);
  } else if (y_hat < -eps && y > eps) {
    penalty = (y_hat + eps) * (y_hat + eps);
  }
  return (y_hat - y) * (y_hat - y) + penalty;
}

double tadda2_l1(double y_hat, double y, double eps) {
  require_finite(y_hat, y);
  require_eps(eps);
  const bool y_inside = y >= -eps && y <= eps;
  double penalty = 0.0;
  if ((y_hat <= eps && y > eps) || (y_hat > eps && y_inside)) {
    penalty = std::abs(y_hat - eps);
  } else if ((y_hat >= -eps && y < -eps) || (y_hat < -eps && y_inside)) {
    penalty = std::abs(y_hat + eps);
  }
  return std::abs(y_hat - y) + penalty;
}

double score(const ScoreSpec& spec, double y_hat, double y) {
  switch (spec.kind()) {
    case ScoreKind::AE: return absolute_error(y_hat, y);
    case ScoreKind::SE: return squared_error(y_hat, y);
    case ScoreKind::TADDA1_L1: return tadda1_l1(y_hat, y, spec.epsilon());
    case ScoreKind::TADDA1_L2: return tadda1_l2(y_hat, y, spec.epsilon());
    case ScoreKind::TADDA2_L1: return tadda2_l1(y_hat, y, spec.epsilon());
  }
  throw std::logic_error("unhandled score kind");
}

}  // namespace tadda
