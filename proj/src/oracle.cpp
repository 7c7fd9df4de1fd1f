#include "icnash/oracle.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace icnash {

namespace {

void check_config(const OracleConfig& cfg) {
  if (!(cfg.grid_step > 0.0) || cfg.grid_step > 0.1) {
    throw std::invalid_argument("grid_step must be in (0, 0.1]");
  }
  if (!(cfg.deviation_tol > 0.0)) {
    throw std::invalid_argument("deviation_tol must be positive");
  }
}

// Player k's utility is log2((1 + alpha*A)(1 + (1-alpha)*B)) for fixed
// opponent action; comparisons are done on the product, which is a
// monotone transform and avoids log calls in grid loops.
struct UtilitySlice {
  double a_gain;
  double b_gain;

  UtilitySlice(const ChannelRealization& ch, int k, double alpha_other) {
    const int o = 1 - k;
    a_gain = ch.g[k][k][0] / (1.0 + alpha_other * ch.g[k][o][0]);
    b_gain = ch.g[k][k][1] / (1.0 + (1.0 - alpha_other) * ch.g[k][o][1]);
  }

  double product(double alpha) const {
    return (1.0 + alpha * a_gain) * (1.0 + (1.0 - alpha) * b_gain);
  }
};

long grid_points(double step) { return std::lround(1.0 / step); }

double grid_value(long i, long n, double step) {
  return i == n ? 1.0 : static_cast<double>(i) * step;
}

// Continuous argmax of player k's utility by golden-section search on
// the product form; converges to a boundary when the maximizer is not
// interior. No use of the closed-form line coefficients.
double numeric_best_response(const ChannelRealization& ch, int k,
                             double alpha_other) {
  const UtilitySlice slice(ch, k, alpha_other);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 0.0, hi = 1.0;
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = slice.product(x1);
  double f2 = slice.product(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = slice.product(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = slice.product(x1);
    }
  }
  return 0.5 * (lo + hi);
}

// Residual of the composed best-response map; its zeros are the
// equilibria with first coordinate a1.
double composed_residual(const ChannelRealization& ch, double a1) {
  return numeric_best_response(ch, 0, numeric_best_response(ch, 1, a1)) - a1;
}

}  // namespace

double grid_best_response(const ChannelRealization& ch, int k,
                          double alpha_other, const OracleConfig& cfg) {
  check_config(cfg);
  const UtilitySlice slice(ch, k, alpha_other);
  const long n = grid_points(cfg.grid_step);
  double best_alpha = 0.0;
  double best_product = slice.product(0.0);
  for (long i = 1; i <= n; ++i) {
    const double alpha = grid_value(i, n, cfg.grid_step);
    const double p = slice.product(alpha);
    if (p > best_product) {  // strict: ties keep the smaller alpha
      best_product = p;
      best_alpha = alpha;
    }
  }
  return best_alpha;
}

bool is_pa_ne_by_deviation(const ChannelRealization& ch, ActionProfile profile,
                           const OracleConfig& cfg) {
  check_config(cfg);
  const double factor = std::exp2(cfg.deviation_tol);
  const long n = grid_points(cfg.grid_step);
  for (int k = 0; k < 2; ++k) {
    const UtilitySlice slice(ch, k, profile.alpha(1 - k));
    const double threshold = slice.product(profile.alpha(k)) * factor;
    for (long i = 0; i <= n; ++i) {
      if (slice.product(grid_value(i, n, cfg.grid_step)) > threshold) {
        return false;
      }
    }
  }
  return true;
}

bool is_cs_ne_by_deviation(const ChannelRealization& ch, CsProfile profile,
                           const OracleConfig& cfg) {
  for (int k = 0; k < 2; ++k) {
    const ActionProfile current = profile.as_action_profile();
    ActionProfile flipped = current;
    (k == 0 ? flipped.alpha1 : flipped.alpha2) = 1.0 - current.alpha(k);
    if (utility(ch, k, flipped) > utility(ch, k, current) + cfg.deviation_tol) {
      return false;
    }
  }
  return true;
}

std::vector<ActionProfile> brute_force_pa_nash(const ChannelRealization& ch,
                                               const OracleConfig& cfg) {
  check_config(cfg);
  const double factor = std::exp2(cfg.deviation_tol);
  const long n = grid_points(cfg.grid_step);
  const std::size_t width = static_cast<std::size_t>(n) + 1;

  // Full product grids for both players plus the per-line maxima needed
  // by the deviation test.
  std::vector<double> p1(width * width);  // [i + width*j], alpha1=x_i, alpha2=x_j
  std::vector<double> p2(width * width);
  std::vector<double> col_max1(width, 0.0);
  std::vector<double> row_max2(width, 0.0);
  for (long j = 0; j <= n; ++j) {
    const UtilitySlice slice(ch, 0, grid_value(j, n, cfg.grid_step));
    double best = 0.0;
    for (long i = 0; i <= n; ++i) {
      const double p = slice.product(grid_value(i, n, cfg.grid_step));
      p1[static_cast<std::size_t>(i) + width * static_cast<std::size_t>(j)] = p;
      best = std::max(best, p);
    }
    col_max1[static_cast<std::size_t>(j)] = best;
  }
  for (long i = 0; i <= n; ++i) {
    const UtilitySlice slice(ch, 1, grid_value(i, n, cfg.grid_step));
    double best = 0.0;
    for (long j = 0; j <= n; ++j) {
      const double p = slice.product(grid_value(j, n, cfg.grid_step));
      p2[static_cast<std::size_t>(i) + width * static_cast<std::size_t>(j)] = p;
      best = std::max(best, p);
    }
    row_max2[static_cast<std::size_t>(i)] = best;
  }

  std::vector<ActionProfile> passing;
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j <= n; ++j) {
      const std::size_t idx =
          static_cast<std::size_t>(i) + width * static_cast<std::size_t>(j);
      if (col_max1[static_cast<std::size_t>(j)] <= p1[idx] * factor &&
          row_max2[static_cast<std::size_t>(i)] <= p2[idx] * factor) {
        passing.push_back({grid_value(i, n, cfg.grid_step),
                           grid_value(j, n, cfg.grid_step)});
      }
    }
  }

  // Single-link clustering with radius 2 * grid_step (infinity norm).
  const double radius = 2.0 * cfg.grid_step;
  std::vector<int> cluster(passing.size(), -1);
  int n_clusters = 0;
  std::vector<std::size_t> frontier;
  for (std::size_t a = 0; a < passing.size(); ++a) {
    if (cluster[a] >= 0) continue;
    const int id = n_clusters++;
    cluster[a] = id;
    frontier.assign(1, a);
    while (!frontier.empty()) {
      const std::size_t c = frontier.back();
      frontier.pop_back();
      for (std::size_t b = 0; b < passing.size(); ++b) {
        if (cluster[b] >= 0) continue;
        const double dist =
            std::max(std::abs(passing[b].alpha1 - passing[c].alpha1),
                     std::abs(passing[b].alpha2 - passing[c].alpha2));
        if (dist <= radius) {
          cluster[b] = id;
          frontier.push_back(b);
        }
      }
    }
  }

  std::vector<ActionProfile> centroids(static_cast<std::size_t>(n_clusters));
  std::vector<long> sizes(static_cast<std::size_t>(n_clusters), 0);
  for (std::size_t a = 0; a < passing.size(); ++a) {
    auto& c = centroids[static_cast<std::size_t>(cluster[a])];
    c.alpha1 += passing[a].alpha1;
    c.alpha2 += passing[a].alpha2;
    ++sizes[static_cast<std::size_t>(cluster[a])];
  }
  for (std::size_t c = 0; c < centroids.size(); ++c) {
    centroids[c].alpha1 /= static_cast<double>(sizes[c]);
    centroids[c].alpha2 /= static_cast<double>(sizes[c]);
  }
  return centroids;
}

std::vector<ActionProfile> numeric_pa_fixed_points(const ChannelRealization& ch) {
  validate(ch);
  // The composed map is piecewise affine with at most one non-flat
  // piece, so a dense sample plus bisection on sign changes recovers
  // every transversal zero of the residual.
  const int samples = 1024;
  std::vector<double> roots;
  double prev_a = 0.0;
  double prev_h = composed_residual(ch, 0.0);
  if (prev_h == 0.0) roots.push_back(0.0);
  for (int i = 1; i <= samples; ++i) {
    const double a = static_cast<double>(i) / samples;
    const double h = composed_residual(ch, a);
    if (h == 0.0) {
      roots.push_back(a);
    } else if ((prev_h < 0.0) != (h < 0.0) && prev_h != 0.0) {
      double lo = prev_a, f_lo = prev_h;
      double hi = a;
      for (int it = 0; it < 100 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = composed_residual(ch, mid);
        if (f_mid == 0.0) {
          lo = hi = mid;
        } else if ((f_mid < 0.0) == (f_lo < 0.0)) {
          lo = mid;
          f_lo = f_mid;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_a = a;
    prev_h = h;
  }
  std::vector<ActionProfile> out;
  for (double a1 : roots) {
    if (!out.empty() && a1 - out.back().alpha1 < 1e-7) continue;
    out.push_back({a1, numeric_best_response(ch, 1, a1)});
  }
  return out;
}

bool numeric_fixed_points_covered(const ChannelRealization& ch,
                                  const std::vector<ActionProfile>& enumerated,
                                  double tol) {
  for (const auto& fp : numeric_pa_fixed_points(ch)) {
    bool matched = false;
    for (const auto& ne : enumerated) {
      if (std::max(std::abs(fp.alpha1 - ne.alpha1),
                   std::abs(fp.alpha2 - ne.alpha2)) <= tol) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace icnash
