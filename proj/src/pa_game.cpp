#include "icnash/pa_game.hpp"

#include <algorithm>
#include <cmath>

namespace icnash {

namespace {

// Interior/boundary split and duplicate merging.
constexpr double kBoundaryTol = 1e-9;
constexpr double kMergeTol = 1e-9;
// Relative tolerance for slope-equals-one and parallel-lines tests.
constexpr double kDegenerateTol = 1e-12;

double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

bool at_boundary(double a) { return std::min(a, 1.0 - a) <= kBoundaryTol; }

}  // namespace

BestResponseLine br_line(const ChannelRealization& ch, int k) {
  const int o = 1 - k;
  const double g1 = ch.g[k][k][0];
  const double g2 = ch.g[k][k][1];
  if (g1 <= 0.0 || g2 <= 0.0) {
    throw DegenerateChannelError("direct gain must be strictly positive");
  }
  const double h1 = ch.g[k][o][0];
  const double h2 = ch.g[k][o][1];
  BestResponseLine line;
  line.slope = -0.5 * (h1 / g1 + h2 / g2);
  line.intercept = (g1 * (1.0 + h2) + g2 * (g1 - 1.0)) / (2.0 * g1 * g2);
  return line;
}

double best_response(const ChannelRealization& ch, int k, double alpha_other) {
  const auto line = br_line(ch, k);
  return clamp01(line.slope * alpha_other + line.intercept);
}

GammaLines gamma_lines(const BestResponseLine& br1, const BestResponseLine& br2) {
  GammaLines lines;
  lines.m1 = br1.slope;
  lines.q1 = br1.intercept;
  if (br2.slope != 0.0) {
    lines.m2 = 1.0 / br2.slope;
    lines.q2 = -br2.intercept / br2.slope;
    lines.line2_defined = true;
  } else {
    lines.m2 = 0.0;
    lines.q2 = 0.0;
    lines.line2_defined = false;
  }
  return lines;
}

std::optional<ActionProfile> intersect_br_lines(const BestResponseLine& br1,
                                                const BestResponseLine& br2) {
  const double c1 = br1.slope, d1 = br1.intercept;
  const double c2 = br2.slope, d2 = br2.intercept;
  const double product = c1 * c2;
  const double denom = 1.0 - product;
  if (std::abs(denom) <= kDegenerateTol * std::max(1.0, std::abs(product))) {
    return std::nullopt;
  }
  return ActionProfile{(d2 * c1 + d1) / denom, (d1 * c2 + d2) / denom};
}

PaNashSet enumerate_pa_nash(const ChannelRealization& ch) {
  const auto br1 = br_line(ch, 0);
  const auto br2 = br_line(ch, 1);
  const double c1 = br1.slope, d1 = br1.intercept;
  const double c2 = br2.slope, d2 = br2.intercept;
  const double slope_product = c1 * c2;  // >= 0 since both slopes <= 0
  const double offset = c1 * d2 + d1;

  // Knots of f(a) = clamp(c1 * clamp(c2 a + d2) + d1) on [0,1]: the inner
  // and outer clamp crossings. Extra knots on flat regions are harmless.
  std::vector<double> knots{0.0, 1.0};
  auto add_knot = [&knots](double x) {
    if (x > 0.0 && x < 1.0) knots.push_back(x);
  };
  if (c2 != 0.0) {
    add_knot(-d2 / c2);
    add_knot((1.0 - d2) / c2);
  }
  if (slope_product != 0.0) {
    add_knot(-offset / slope_product);
    add_knot((1.0 - offset) / slope_product);
  }
  std::sort(knots.begin(), knots.end());

  std::vector<double> fixed;  // isolated fixed points of f, as alpha_1
  std::vector<std::pair<double, double>> spans;  // continuum pieces

  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double lo = knots[i];
    const double hi = knots[i + 1];
    if (hi <= lo) continue;
    // Regime on this piece, probed at the midpoint.
    const double mid = 0.5 * (lo + hi);
    double slope = 0.0;
    double icpt = 0.0;
    const double inner = c2 * mid + d2;
    if (inner <= 0.0) {
      icpt = clamp01(d1);
    } else if (inner >= 1.0) {
      icpt = clamp01(c1 + d1);
    } else {
      const double outer = c1 * inner + d1;
      if (outer <= 0.0) {
        icpt = 0.0;
      } else if (outer >= 1.0) {
        icpt = 1.0;
      } else {
        slope = slope_product;
        icpt = offset;
      }
    }
    if (std::abs(slope - 1.0) <= kDegenerateTol * std::max(1.0, slope)) {
      // Slope-one piece: a continuum when it lies on the identity,
      // otherwise no fixed point here.
      if (std::abs(slope * lo + icpt - lo) <= kDegenerateTol) {
        spans.emplace_back(lo, hi);
      }
      continue;
    }
    const double a = icpt / (1.0 - slope);
    if (a >= lo - kDegenerateTol && a <= hi + kDegenerateTol) {
      fixed.push_back(clamp01(std::clamp(a, lo, hi)));
    }
  }

  const auto pair_with_response = [&](double a1) {
    return ActionProfile{a1, clamp01(c2 * a1 + d2)};
  };

  PaNashSet result;
  result.alpha_dagger = intersect_br_lines(br1, br2);

  if (!spans.empty()) {
    double lo = spans.front().first;
    double hi = spans.front().second;
    for (const auto& [l, h] : spans) {
      lo = std::min(lo, l);
      hi = std::max(hi, h);
    }
    result.kind = PaNashSet::Kind::Continuum;
    result.type = Fig1Type::E;
    result.zero_probability_flag = true;
    result.segment = {pair_with_response(lo), pair_with_response(hi)};
    result.equilibria = {result.segment->first, result.segment->second};
    return result;
  }

  std::sort(fixed.begin(), fixed.end());
  std::vector<double> merged;
  for (double a : fixed) {
    if (merged.empty() || a - merged.back() > kMergeTol) {
      merged.push_back(a);
    }
  }
  if (merged.empty() || merged.size() > 3) {
    throw std::logic_error("fixed-point enumeration produced an impossible count");
  }

  for (double a : merged) {
    result.equilibria.push_back(pair_with_response(a));
  }
  switch (merged.size()) {
    case 1: {
      const auto& ne = result.equilibria.front();
      result.type = (at_boundary(ne.alpha1) || at_boundary(ne.alpha2))
                        ? Fig1Type::A
                        : Fig1Type::B;
      break;
    }
    case 2:
      result.type = Fig1Type::C;
      result.zero_probability_flag = true;
      break;
    default:
      result.type = Fig1Type::D;
      break;
  }
  return result;
}

UniquenessConditions uniqueness_conditions(const ChannelRealization& ch) {
  const auto r = interference_ratios(ch);
  UniquenessConditions out;
  out.cond_a =
      (r.rho[0][0] + r.rho[0][1]) * (r.rho[1][0] + r.rho[1][1]) < 4.0;
  const auto dagger = intersect_br_lines(br_line(ch, 0), br_line(ch, 1));
  out.cond_b = !dagger.has_value() || dagger->alpha1 < 0.0 ||
               dagger->alpha1 > 1.0 || dagger->alpha2 < 0.0 ||
               dagger->alpha2 > 1.0;
  return out;
}

}  // namespace icnash
