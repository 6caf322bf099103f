#include "kwsym/integer.hpp"

#include "kwsym/error.hpp"

namespace kwsym {

BigInt factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial of a negative number");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt falling_factorial(int v, int k) {
  if (k < 0 || k > v) throw InvalidArgument("falling factorial needs 0 <= k <= v");
  BigInt result = 1;
  for (int i = 0; i < k; ++i) result *= (v - i);
  return result;
}

}  // namespace kwsym
