#include "relweyl/numeric.hpp"

#include "relweyl/error.hpp"

namespace relweyl {

std::string rat_to_string(const Rat& q) {
  if (is_integer(q)) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw UsageError("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw UsageError("malformed rational literal '" + s + "'");
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace relweyl
