#include "grpaudit/caps.hpp"

namespace grpaudit {

void Caps::set(const std::string& key, std::uint64_t value) {
  if (key == "element") element_cap = value;
  else if (key == "coset_degree") coset_degree_cap = value;
  else if (key == "lattice") lattice_cap = value;
  else if (key == "table") table_cap = value;
  else if (key == "subgroup_count") subgroup_count_cap = value;
  else if (key == "character") character_cap = value;
  else if (key == "character_classes") character_class_cap = value;
  else if (key == "pair") pair_cap = value;
  else throw ParseError("unknown cap '" + key + "'", 0);
}

}  // namespace grpaudit
