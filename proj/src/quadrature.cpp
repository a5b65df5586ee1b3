#include "quadrature.hpp"

#include <map>
#include <mutex>

#include "errors.hpp"

namespace photoem {

static GaussRule make_gauss_legendre(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return r;
}

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
  return it->second;
}

cplx gl_integrate(const std::function<cplx(double)>& f, double a, double b, int n) {
  const GaussRule& r = gauss_legendre(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  cplx acc = 0.0;
  for (int i = 0; i < n; ++i) acc += r.w[i] * f(mid + half * r.x[i]);
  return acc * half;
}

// Kronrod 15 / Gauss 7 pair (nodes for [-1,1])
namespace {
const double XGK[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                       0.741531185599394, 0.586087235467691, 0.405845151377397,
                       0.207784955007898, 0.0};
const double WGK[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                       0.140653259715525, 0.169004726639267, 0.190350578064785,
                       0.204432940075298, 0.209482141084728};
const double WG[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                      0.417959183673469};

struct GKResult {
  cplx value;
  double err;
};

GKResult gk15(const std::function<cplx(double)>& f, double a, double b) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  cplx fc = f(mid);
  cplx resg = WG[3] * fc;
  cplx resk = WGK[7] * fc;
  for (int j = 0; j < 7; ++j) {
    double dx = half * XGK[j];
    cplx f1 = f(mid - dx), f2 = f(mid + dx);
    resk += WGK[j] * (f1 + f2);
    if (j % 2 == 1) resg += WG[j / 2] * (f1 + f2);
  }
  GKResult r;
  r.value = resk * half;
  r.err = std::abs(resk - resg) * std::abs(half);
  // standard GK error sharpening
  r.err = std::pow(200.0 * r.err, 1.5) < r.err ? std::pow(200.0 * r.err, 1.5) : r.err;
  return r;
}

void adapt(const std::function<cplx(double)>& f, double a, double b, double tol,
           int depth, int max_depth, cplx& acc, double& err_acc) {
  GKResult r = gk15(f, a, b);
  if (r.err < tol || depth >= max_depth) {
    acc += r.value;
    err_acc += r.err;
    return;
  }
  double mid = 0.5 * (a + b);
  adapt(f, a, mid, tol * 0.6, depth + 1, max_depth, acc, err_acc);
  adapt(f, mid, b, tol * 0.6, depth + 1, max_depth, acc, err_acc);
}
}  // namespace

cplx adaptive_integrate(const std::function<cplx(double)>& f, double a, double b,
                        double abs_tol, double rel_tol, int max_depth) {
  GKResult first = gk15(f, a, b);
  double tol = std::max(abs_tol, rel_tol * std::abs(first.value));
  if (first.err < tol) return first.value;
  cplx acc = 0.0;
  double err = 0.0;
  double mid = 0.5 * (a + b);
  adapt(f, a, mid, tol * 0.6, 1, max_depth, acc, err);
  adapt(f, mid, b, tol * 0.6, 1, max_depth, acc, err);
  double final_tol = std::max(abs_tol, rel_tol * std::abs(acc)) * 20.0;
  if (err > final_tol && err > 1e-15)
    throw ToleranceError("adaptive quadrature did not reach tolerance", err);
  return acc;
}

cplx expsinh_integrate(const std::function<cplx(double)>& f, double abs_tol,
                       double rel_tol) {
  // p = exp(2 sinh u); refine by halving h until the result stabilizes
  auto node_sum = [&](double h, int parity_only) {
    cplx acc = 0.0;
    for (int k = 0; k <= 400; ++k) {
      bool touched = false;
      for (int sgn = (k == 0 ? 1 : -1); sgn <= 1; sgn += 2) {
        if (k == 0 && sgn == -1) continue;
        double u = sgn * k * h;
        if (parity_only && (k % 2 == 0)) continue;
        double sh = std::sinh(u);
        double p = std::exp(2.0 * sh);
        double dp = 2.0 * std::cosh(u) * p;
        if (!std::isfinite(p) || p > 1e300) continue;
        if (p < 1e-290) continue;
        cplx term = f(p) * dp;
        if (std::abs(term) > 1e-280) touched = true;
        acc += term * h;
        if (k == 0) break;
      }
      if (k > 8 && !touched) break;
    }
    return acc;
  };
  double h = 0.5;
  cplx prev = node_sum(h, 0);
  for (int level = 0; level < 7; ++level) {
    h *= 0.5;
    // new points only (odd multiples of the new h), plus rescale of previous sum
    cplx fresh = node_sum(h, 1);
    cplx cur = prev * 0.5 + fresh;
    if (std::abs(cur - prev) < std::max(abs_tol, rel_tol * std::abs(cur)) && level >= 2)
      return cur;
    prev = cur;
  }
  return prev;
}

void fft_radix2(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw NumericalError("fft_radix2 requires power-of-two length");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = sign * TWO_PI / static_cast<double>(len);
    cplx wl = expi(ang);
    for (std::size_t i = 0; i < n; i += len) {
      cplx w = 1.0;
      for (std::size_t j = 0; j < len / 2; ++j) {
        cplx u = a[i + j];
        cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

}  // namespace photoem
