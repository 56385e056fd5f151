#ifndef PRENICHOLS_TEST_SUPPORT_HPP
#define PRENICHOLS_TEST_SUPPORT_HPP

#include <string>
#include <vector>

#include "prenichols/bichar.hpp"

namespace testing_support {

inline prenichols::BraidingMatrix braiding(int order, int theta, const std::vector<std::string>& entries) {
  auto ctx = prenichols::context(order);
  std::vector<prenichols::CycNum> q;
  for (const auto& e : entries) q.push_back(prenichols::parse_cyclo(e, ctx));
  return prenichols::BraidingMatrix(ctx, theta, std::move(q));
}

inline prenichols::IntVector vec(std::initializer_list<std::int64_t> xs) { return prenichols::IntVector(xs); }

}  // namespace testing_support

#endif
