#include "pcclosure/numeric.hpp"

namespace pcc {

std::string int_str(const Int& n) { return n.str(); }

std::string rat_str(const Rat& q) {
  if (rat_den(q) == 1) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

}  // namespace pcc
