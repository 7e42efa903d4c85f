#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace gwdn {

/// One insertion tau_d H^e (a head) or tau_d H_e (the tail).
struct GWSlot {
  int d = 0;
  int e = 0;
  friend auto operator<=>(const GWSlot&, const GWSlot&) = default;
};

/// <tau_{d_1} H^{i_1}, ..., tau_{d_{n-1}} H^{i_{n-1}}, tau_{d_n} H_r>.
/// Heads are stored ascending by (e, d) once canonical.
struct GWSymbol {
  std::vector<GWSlot> heads;
  GWSlot tail;

  GWSymbol() = default;
  GWSymbol(std::vector<GWSlot> h, GWSlot t) : heads(std::move(h)), tail(t) {}

  int n() const noexcept { return static_cast<int>(heads.size()) + 1; }
  int sum_d() const noexcept;
  bool has_negative_entry() const noexcept;

  /// "<t1 H^2, H^1, H_0>"; tau_0 is omitted.
  std::string str() const;
  std::string latex() const;
  /// Accepts the text form above, with "t d" or "td" prefixes. Throws ParseError.
  static GWSymbol parse(std::string_view text);

  friend auto operator<=>(const GWSymbol&, const GWSymbol&) = default;
};

GWSymbol canonicalize(GWSymbol s);

/// sum d + sum i - r + 3 - n; may be negative.
int degree(const GWSymbol& s) noexcept;

}  // namespace gwdn
