#pragma once

#include <stdexcept>
#include <string>

namespace gwdn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by left_divide_by_D when some q^i slice R_i(D) is not divisible by D+i.
class NotLeftDivisible : public Error {
 public:
  NotLeftDivisible(int q_power, std::string remainder)
      : Error("operator is not left divisible by D: slice q^" + std::to_string(q_power) +
              " leaves remainder " + remainder),
        q_power_(q_power),
        remainder_(std::move(remainder)) {}
  int q_power() const noexcept { return q_power_; }
  const std::string& remainder() const noexcept { return remainder_; }

 private:
  int q_power_;
  std::string remainder_;
};

/// P_0(m + eps) is not a unit of the truncated eps-ring for the reported m.
class IndicialNotInvertible : public Error {
 public:
  explicit IndicialNotInvertible(int m)
      : Error("indicial polynomial P_0(m+eps) is not invertible at m = " + std::to_string(m)),
        m_(m) {}
  int m() const noexcept { return m_; }

 private:
  int m_;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class DegreeNonzero : public Error {
 public:
  using Error::Error;
};

/// Internal assertion of the rewriting engine; indicates a strategy bug.
class MeasureNotDecreasing : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gwdn
