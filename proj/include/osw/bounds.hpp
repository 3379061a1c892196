#pragma once

namespace osw {

// Upper estimate of the Riemann zeta value at 3, used as an exact constant
// inside the closed-form bounds.
inline constexpr double kZeta3 = 1.20206;

// Closed-form bound values for size parameter n. Several are larger than 1
// for small n; they are still reported verbatim and used only as upper-bound
// comparisons.
struct BoundsReport {
  int n = 0;
  double zu_upper = 0.0;       // 1 / ln(n+1)
  double zu_lower = 0.0;       // 1 / (6 ln(2en))
  double routing_upper = 0.0;  // (ceil(log2 n)+1) * 192 ln(2en) + 2
  double e1 = 0.0;             // 3 / ln(n+1)
  double e2 = 0.0;             // (9/2) / ln(n+1)
  double e3 = 0.0;             // 36 zeta(3) / ln^2(n+1)
  double e4 = 0.0;             // 3 / ln(n+1)
  double e5 = 0.0;             // 36 zeta(3) / ln^2(n+1)
  double e6 = 0.0;             // 36 zeta(3) / ln^2(n+1)
  double e7 = 0.0;             // 36 (3 zeta(3) + 1/8) ln(2n) / ln^3(n+1)
  double eu_bound = 0.0;       // union bound over e1..e7
  double zeta3 = kZeta3;
};

// Evaluates every bound formula at n. Logs are natural throughout; only the
// routing phase count uses a base-2 ceiling, because routing phases double
// the remaining distance. Throws unless n >= 1.
BoundsReport bounds_report(int n);

}  // namespace osw
