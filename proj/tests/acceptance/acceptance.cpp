#include <cstdio>

#include "klsc/validate.hpp"

int main() {
  const klsc::DeskReport R = klsc::run_desk_suite();
  for (const auto& c : R.criteria)
    std::printf("%s %s: %s (%s; %.2f s)\n", c.ok ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(), c.detail.c_str(),
                c.seconds);
  return R.ok() ? 0 : 1;
}
