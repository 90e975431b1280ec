#ifndef NILORB_FD_HPP
#define NILORB_FD_HPP

// Central finite differences with one level of Richardson extrapolation.

namespace nilorb {

template <typename F>
double fd_first(const F& f, double x, double h) {
  auto d = [&](double step) { return (f(x + step) - f(x - step)) / (2.0 * step); };
  return (4.0 * d(h / 2) - d(h)) / 3.0;
}

template <typename F>
double fd_second(const F& f, double x, double h) {
  double fx = f(x);
  auto d = [&](double step) {
    return (f(x + step) - 2.0 * fx + f(x - step)) / (step * step);
  };
  return (4.0 * d(h / 2) - d(h)) / 3.0;
}

// f is a function of two scalars; returns d^2 f / dx dy.
template <typename F>
double fd_mixed(const F& f, double x, double y, double hx, double hy) {
  auto d = [&](double a, double b) {
    return (f(x + a, y + b) - f(x + a, y - b) - f(x - a, y + b) + f(x - a, y - b)) /
           (4.0 * a * b);
  };
  return (4.0 * d(hx / 2, hy / 2) - d(hx, hy)) / 3.0;
}

}  // namespace nilorb

#endif
