#include "qeei/quaternion.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "qeei/error.hpp"

namespace qeei {

Quaternion inverse(const Quaternion& q) {
  const double n = norm_sq(q);
  if (n == 0.0) {
    throw Error(ErrorKind::kZeroDivisor, "inverse of the zero quaternion");
  }
  return conj(q) / n;
}

double max_abs_diff(const Quaternion& p, const Quaternion& q) {
  return std::max({std::abs(p.w - q.w), std::abs(p.x - q.x), std::abs(p.y - q.y),
                   std::abs(p.z - q.z)});
}

namespace {

std::string format_real(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

}  // namespace

std::string to_string(const Quaternion& q, int precision) {
  const double parts[4] = {q.w, q.x, q.y, q.z};
  const char* units[4] = {"", "i", "j", "k"};
  std::string out;
  for (int c = 0; c < 4; ++c) {
    std::string s = format_real(parts[c], precision);
    if (s == "0") continue;
    if (!out.empty() && s.front() != '-') out += '+';
    out += s;
    out += units[c];
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << to_string(q); }

}  // namespace qeei
