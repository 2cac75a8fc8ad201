#pragma once

#include <map>
#include <string>
#include <vector>

#include "gmaxent/ratmatrix.hpp"

namespace gmaxent {

struct GroupElement {
  RatMatrix mat;
  std::string label;  // word in generator symbols; "e" for the identity
};

// A finite matrix group, closed under product and inverse.
// Element 0 is always the identity.
struct GroupSpec {
  int dimension = 0;
  std::vector<GroupElement> elements;
  std::vector<int> generator_ids;  // positions of the supplied generators
  std::vector<int> inverse_of;     // inverse_of[g] = index of g^{-1}

  int order() const { return static_cast<int>(elements.size()); }
  const GroupElement& identity() const { return elements[0]; }

  // Index of the product elements[g] * elements[h].
  int product_of(int g, int h) const;

 private:
  friend GroupSpec close_group(const std::vector<GroupElement>&, int);
  std::map<std::string, int> index_by_key_;
};

// Breadth-first closure of the generated group. Throws NonInvertibleGenerator
// or OrderBoundExceeded (the latter signals an infinite or too-large group).
GroupSpec close_group(const std::vector<GroupElement>& generators, int max_order = 10000);

// Built-in groups: "microimage", "sign_inversion(m)", "trivial(m)".
GroupSpec builtin_group(const std::string& name);
bool is_builtin_group(const std::string& name);

// JSON group file: { "dimension": m, "generators": [[[entry,...],...],...],
// "names": [...] }, entries integers or "p/q" strings.
GroupSpec load_group(const std::string& path);
GroupSpec group_from_json_text(const std::string& text);

}  // namespace gmaxent
