#include <iostream>

#include "braidkit/selftest.hpp"

int main() {
  int failures = braid::selftest::run(std::cout);
  if (failures > 0) std::cout << failures << " check(s) failed\n";
  return failures == 0 ? 0 : 1;
}
