#pragma once

#include <map>
#include <string>
#include <vector>

#include "odsq/dsl.hpp"
#include "odsq/term.hpp"

namespace odsq {

// One entry of the bundled census of two-component oriented dichromatic
// singular links. Only the crossing relation systems are known for these
// diagrams; the component labelings of the original pictures are not, so no
// diagram-level data is stored.
struct CatalogEntry {
  std::string name;
  RelationSystem system;
  std::map<std::string, int> component_labels;  // empty: not recoverable
};

namespace detail {

struct CatalogSource {
  const char* name;
  const char* relations;
};

// Crossing relation systems for the eighteen census links. Bare * is the
// first quandle operation; every structure shipped here has *1 = *2, so
// counts do not depend on that reading.
inline const std::vector<CatalogSource>& catalog_sources() {
  static const std::vector<CatalogSource> sources = {
      {"1_1^2",
       "R1(x,y)*R2(x,y)=y\n"
       "R2(x,y)=x\n"},
      {"3_1^2",
       "z*R1(x,y)=R2(x,y)\n"
       "y*z=R1(x,y)\n"
       "x*y=z\n"},
      {"4_1^2",
       "y*R1(x,y)=z\n"
       "R2(x,y)*z=w\n"
       "x*y=w\n"
       "R1(x,y)*w=z\n"},
      {"5_1^2",
       "x*y=v\n"
       "y*v=z\n"
       "v*z=u\n"
       "z*u=R1(x,y)\n"
       "u*R1(x,y)=R2(x,y)\n"},
      {"5_2^2",
       "u*y=z\n"
       "y*u=v\n"
       "x*v=u\n"
       "v*z=R1(x,y)\n"
       "z*R1(x,y)=R2(x,y)\n"},
      {"5_3^2",
       "x*y=z\n"
       "z*u=R2(x,y)\n"
       "v*z=u\n"
       "u*v=R1(x,y)\n"
       "y*R1(x,y)=v\n"},
      {"6_1^2",
       "R1(x,y)*v=w\n"
       "z*R1(x,y)=R2(x,y)\n"
       "x*z=v\n"
       "u*w=v\n"
       "w*u=y\n"
       "z*y=u\n"},
      {"6_2^2",
       "v*u=R1(x,y)\n"
       "x*v=u\n"
       "u*x=z\n"
       "v*z=w\n"
       "R2(x,y)*w=z\n"
       "w*R2(x,y)=y\n"},
      {"6_3^2",
       "w*R1(x,y)=R2(x,y)\n"
       "u*y=R1(x,y)\n"
       "u*z=v\n"
       "v*w=y\n"
       "w*u=z\n"
       "z*v=x\n"},
      {"6_4^2",
       "u*z=R2(x,y)\n"
       "y*u=z\n"
       "v*R2(x,y)=u\n"
       "R1(x,y)*v=w\n"
       "v*w=x\n"
       "w*x=z\n"},
      {"6_5^2",
       "w*R2(x,y)=u\n"
       "z*w=R2(x,y)\n"
       "v*u=w\n"
       "R1(x,y)*z=u\n"
       "z*v=x\n"
       "v*x=y\n"},
      {"6_6^2",
       "R2(x,y)*v=z\n"
       "u*z=v\n"
       "w*u=v\n"
       "u*w=R1(x,y)\n"
       "y*R1(x,y)=w\n"
       "x*y=z\n"},
      {"6_7^2",
       "R1(x,y)*R2(x,y)=z\n"
       "v*z=w\n"
       "z*w=u\n"
       "w*u=y\n"
       "x*v=R2(x,y)\n"
       "v*x=u\n"},
      {"6_8^2",
       "w*u=R1(x,y)\n"
       "v*w=u\n"
       "u*v=z\n"
       "w*R2(x,y)=z\n"
       "R2(x,y)*z=x\n"
       "v*x=y\n"},
      {"6_9^2",
       "u*R1(x,y)=v\n"
       "w*u=x\n"
       "w*v=R2(x,y)\n"
       "z*w=R1(x,y)\n"
       "y*z=v\n"
       "u*y=z\n"},
      {"6_10^2",
       "u*R1(x,y)=v\n"
       "R1(x,y)*v=w\n"
       "v*w=y\n"
       "u*x=w\n"
       "x*u=z\n"
       "z*R1(x,y)=R2(x,y)\n"},
      {"6_11^2",
       "w*x=y\n"
       "u*x=z\n"
       "v*w=u\n"
       "x*z=R2(x,y)\n"
       "w*z=v\n"
       "v*z=R1(x,y)\n"},
      {"6_12^2",
       "z*w=R2(x,y)\n"
       "y*z=w\n"
       "u*R2(x,y)=z\n"
       "v*R1(x,y)=u\n"
       "w*v=R1(x,y)\n"
       "x*w=v\n"},
  };
  return sources;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& src : detail::catalog_sources())
      out.push_back({src.name, parse_relation_dsl(src.relations), {}});
    return out;
  }();
  return entries;
}

inline const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace odsq
