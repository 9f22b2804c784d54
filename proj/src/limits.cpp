#include "orderkit/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace orderkit {

namespace {
Limits& mutable_limits() {
  static Limits l;
  return l;
}
}  // namespace

const Limits& limits() { return mutable_limits(); }
void set_limits(const Limits& l) { mutable_limits() = l; }

bool apply_env_limits() {
  const char* v = std::getenv("ORDERKIT_MAX_N");
  if (!v || !*v) return false;
  std::size_t n = 0;
  auto [end, ec] = std::from_chars(v, v + std::strlen(v), n);
  if (ec != std::errc{} || *end != '\0' || n == 0) return false;
  Limits l = limits();
  l.subset_max_n = n;
  l.enumerate_max_n = n;
  set_limits(l);
  return true;
}

}  // namespace orderkit
