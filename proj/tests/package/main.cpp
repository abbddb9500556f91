#include <albert/jordan.hpp>
#include <albert/octonion.hpp>

int main() {
  using albert::Octonion;
  using albert::Unit;
  const bool table = Octonion::unit(Unit::i) * Octonion::unit(Unit::j) == Octonion::unit(Unit::k);
  const double d = albert::det(albert::Hermitian3::diagonal(1, 2, 3));
  return table && d > 5.999 && d < 6.001 ? 0 : 1;
}
