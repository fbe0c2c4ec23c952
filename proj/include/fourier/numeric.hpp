#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace fourier {

using Complex = std::complex<double>;

/// sin(pi t), exact at integers and half-integers.
double sinpi(double t);
/// cos(pi t), exact at integers and half-integers.
double cospi(double t);

/// exp(i pi t) computed with quadrant reduction so that multiples of 1/2 land
/// exactly on {1, i, -1, -i}.
Complex unit_phase(double t);

/// Neumaier compensated summation over complex terms (real and imaginary parts
/// are compensated independently).
class CompensatedSum {
public:
  void add(Complex term) {
    accumulate(re_, re_carry_, term.real());
    accumulate(im_, im_carry_, term.imag());
  }
  Complex value() const { return {re_ + re_carry_, im_ + im_carry_}; }

private:
  static void accumulate(double& sum, double& carry, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      carry += (sum - t) + x;
    else
      carry += (x - t) + sum;
    sum = t;
  }

  double re_ = 0.0, re_carry_ = 0.0;
  double im_ = 0.0, im_carry_ = 0.0;
};

/// Worker count used when a caller passes 0: hardware concurrency, at least 1.
std::size_t default_worker_count();

/// Runs body(i) for i in [0, count). Each index is visited exactly once; the
/// caller must make body(i) write only to slot i so the result does not depend
/// on scheduling.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body);

/// SplitMix64 finalizer, used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x);

}  // namespace fourier
