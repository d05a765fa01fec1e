#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cavity {

// spectroscopic letters for l = 0, 1, 2, ... ("j" is skipped by convention)
inline constexpr std::string_view kSpectroscopicLetters = "spdfghiklmnoqrtuvwxyz";

/// Principal / angular quantum number pair (n, l) with n >= l + 1. The
/// radial index k = n - l - 1 counts interior nodes and identifies the state
/// within one l block.
struct StateLabel {
  int n = 1;
  int ell = 0;

  int radial_index() const { return n - ell - 1; }
  bool valid() const { return n >= 1 && ell >= 0 && ell <= n - 1; }

  friend bool operator==(const StateLabel&, const StateLabel&) = default;
};

inline std::string format(const StateLabel& s) {
  if (s.ell >= 0 && s.ell < static_cast<int>(kSpectroscopicLetters.size()))
    return std::to_string(s.n) + kSpectroscopicLetters[s.ell];
  return std::to_string(s.n) + "[l=" + std::to_string(s.ell) + "]";
}

/// Parses "1s", "10m", ... and the numeric fallback "n:l" (e.g. "8:7").
inline StateLabel parse_state_label(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("cannot parse state label '" + std::string(text) + "'");
  };
  if (text.empty()) fail();

  std::size_t pos = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == 0) fail();
  StateLabel out;
  out.n = std::stoi(std::string(text.substr(0, pos)));

  if (pos + 1 == text.size()) {
    const auto l = kSpectroscopicLetters.find(text[pos]);
    if (l == std::string_view::npos) fail();
    out.ell = static_cast<int>(l);
  } else if (pos < text.size() && text[pos] == ':') {
    out.ell = std::stoi(std::string(text.substr(pos + 1)));
  } else {
    fail();
  }
  if (!out.valid())
    throw std::invalid_argument("state label '" + std::string(text) +
                                "' violates n >= l + 1");
  return out;
}

}  // namespace cavity
