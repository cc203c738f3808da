#include "convexmod/convex.hpp"
#include "convexmod/freemod.hpp"

namespace convexmod {

std::string to_string(const FinSupp& phi) {
  if (phi.empty()) return "eps";
  std::string out = "(";
  bool first = true;
  for (auto& [x, v] : phi) {
    if (!first) out += ", ";
    first = false;
    out += x + ":" + v.str();
  }
  return out + ")";
}

std::string to_string(const SymbolSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto& x : s) {
    if (!first) out += ",";
    first = false;
    out += x;
  }
  return out + "}";
}

std::string to_string(const SetWeighting& phi) {
  if (phi.empty()) return "eps";
  std::string out = "(";
  bool first = true;
  for (auto& [a, v] : phi) {
    if (!first) out += ", ";
    first = false;
    out += to_string(a) + ":" + v.str();
  }
  return out + ")";
}

std::string to_string(const ConvexSet& a) {
  std::string out = "hull{";
  bool first = true;
  for (auto& g : a.generators()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(g);
  }
  return out + "}";
}

}  // namespace convexmod
