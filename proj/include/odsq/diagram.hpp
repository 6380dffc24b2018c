#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "odsq/term.hpp"

namespace odsq {

enum class CrossingKind { Positive, Negative, Singular };

// Slot order. Classical: incoming-under, incoming-over, outgoing-under,
// outgoing-over. Singular: incoming-left, incoming-right, outgoing-left,
// outgoing-right; the strand entering on the left leaves on the right.
struct Crossing {
  CrossingKind kind;
  std::array<std::string, 4> slots;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Oriented dichromatic singular diagram: arcs, crossings, and a component
// label in {1,2} for every arc.
struct LinkDiagram {
  std::vector<std::string> arcs;                // insertion order
  std::vector<Crossing> crossings;
  std::map<std::string, std::string> component_of;  // arc -> component id
  std::map<std::string, int> label_of;              // component id -> 1|2

  void add_arc(const std::string& a) {
    if (std::find(arcs.begin(), arcs.end(), a) == arcs.end()) arcs.push_back(a);
  }

  void add_crossing(CrossingKind kind, const std::string& s0, const std::string& s1,
                    const std::string& s2, const std::string& s3) {
    crossings.push_back({kind, {s0, s1, s2, s3}});
    add_arc(s0);
    add_arc(s1);
    add_arc(s2);
    add_arc(s3);
  }

  void set_component(const std::string& component, const std::vector<std::string>& member_arcs,
                     int label) {
    for (const auto& a : member_arcs) {
      add_arc(a);
      component_of[a] = component;
    }
    label_of[component] = label;
  }
};

struct DiagramReport {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// Arc identifiers must survive a round trip through the relation DSL: plain
// identifiers, not of the reserved crossing-map form R<digits>.
inline bool valid_arc_name(const std::string& a) {
  if (a.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(a[0])) && a[0] != '_') return false;
  for (char c : a)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  if (a[0] == 'R' && a.size() > 1) {
    bool digits = true;
    for (std::size_t i = 1; i < a.size(); ++i)
      digits = digits && std::isdigit(static_cast<unsigned char>(a[i]));
    if (digits) return false;
  }
  return true;
}

// Well-formedness: every arc either never ends at a crossing (free circle)
// or begins exactly once and ends exactly once; strands keep their component
// through each crossing; every arc has a labelled component.
inline DiagramReport validate_diagram(const LinkDiagram& d) {
  DiagramReport rep;
  std::map<std::string, int> begins, ends;
  for (const auto& a : d.arcs) begins[a] = ends[a] = 0;

  auto comp = [&](const std::string& a) -> std::string {
    auto it = d.component_of.find(a);
    return it == d.component_of.end() ? std::string() : it->second;
  };

  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const Crossing& c = d.crossings[i];
    const std::string at = " at crossing " + std::to_string(i);
    if (c.kind == CrossingKind::Singular) {
      ends[c.slots[0]]++;
      ends[c.slots[1]]++;
      begins[c.slots[2]]++;
      begins[c.slots[3]]++;
      if (comp(c.slots[0]) != comp(c.slots[3]))
        rep.violations.push_back("left-in arc '" + c.slots[0] + "' and right-out arc '" +
                                 c.slots[3] + "' are on different components" + at);
      if (comp(c.slots[1]) != comp(c.slots[2]))
        rep.violations.push_back("right-in arc '" + c.slots[1] + "' and left-out arc '" +
                                 c.slots[2] + "' are on different components" + at);
    } else {
      ends[c.slots[0]]++;
      begins[c.slots[2]]++;
      if (comp(c.slots[0]) != comp(c.slots[2]))
        rep.violations.push_back("under-strand arcs '" + c.slots[0] + "' and '" + c.slots[2] +
                                 "' are on different components" + at);
      if (comp(c.slots[1]) != comp(c.slots[3]))
        rep.violations.push_back("over-strand arcs '" + c.slots[1] + "' and '" + c.slots[3] +
                                 "' are on different components" + at);
    }
  }

  for (const auto& a : d.arcs) {
    if (!valid_arc_name(a))
      rep.violations.push_back("arc '" + a + "' is not a usable identifier");
    int b = begins[a], e = ends[a];
    if (!((b == 0 && e == 0) || (b == 1 && e == 1)))
      rep.violations.push_back("arc '" + a + "' begins " + std::to_string(b) + " time(s) and ends " +
                               std::to_string(e) + " time(s); expected one of each or neither");
    auto it = d.component_of.find(a);
    if (it == d.component_of.end()) {
      rep.violations.push_back("arc '" + a + "' belongs to no component");
    } else if (!d.label_of.count(it->second)) {
      rep.violations.push_back("component '" + it->second + "' has no label");
    }
  }
  for (const auto& [component, label] : d.label_of)
    if (label != 1 && label != 2)
      rep.violations.push_back("component '" + component + "' labelled " + std::to_string(label) +
                               "; labels are 1 or 2");
  return rep;
}

// Crossing relations. Positive crossing, under-in x, over y with component
// label k: x *k y = under-out. Negative crossing is stored flipped,
// under-out *k y = under-in, so stored systems avoid the inverse tables.
// Singular crossing with inputs (x, y): out-left = R1(x,y),
// out-right = R2(x,y), emitted as two equations.
inline RelationSystem relations_from_diagram(const LinkDiagram& d) {
  DiagramReport rep = validate_diagram(d);
  if (!rep.ok()) throw structural_error("diagram invalid: " + rep.violations.front());

  RelationSystem sys;
  for (const auto& a : d.arcs) sys.var(a);

  auto label_of_arc = [&](const std::string& a) { return d.label_of.at(d.component_of.at(a)); };

  for (const Crossing& c : d.crossings) {
    if (c.kind == CrossingKind::Singular) {
      int inl = sys.var_term(c.slots[0]);
      int inr = sys.var_term(c.slots[1]);
      sys.equate(sys.app(OpKind::R1, inl, inr), sys.var_term(c.slots[2]));
      int inl2 = sys.var_term(c.slots[0]);
      int inr2 = sys.var_term(c.slots[1]);
      sys.equate(sys.app(OpKind::R2, inl2, inr2), sys.var_term(c.slots[3]));
      continue;
    }
    OpKind star = label_of_arc(c.slots[1]) == 1 ? OpKind::Star1 : OpKind::Star2;
    if (c.kind == CrossingKind::Positive) {
      int u_in = sys.var_term(c.slots[0]);
      int over = sys.var_term(c.slots[1]);
      sys.equate(sys.app(star, u_in, over), sys.var_term(c.slots[2]));
    } else {
      int u_out = sys.var_term(c.slots[2]);
      int over = sys.var_term(c.slots[1]);
      sys.equate(sys.app(star, u_out, over), sys.var_term(c.slots[0]));
    }
  }
  return sys;
}

// Diagram file: "format=1" line, then crossing lines pos(a,b,c,d) /
// neg(a,b,c,d) / sing(a,b,c,d) and component lines
// "component c1 = {a,b} label 1".
inline LinkDiagram parse_diagram_text(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  if (!std::getline(in, line)) throw structural_error("empty diagram file");
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
  if (line != "format=1") throw structural_error("diagram file must start with 'format=1'");

  LinkDiagram d;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string s;
    for (char c : line) {
      if (c == '#') break;
      s += c;
    }
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = s.find_last_not_of(" \t\r");
    s = s.substr(first, last - first + 1);

    auto bad = [&](const std::string& msg) -> structural_error {
      return structural_error("diagram line " + std::to_string(line_no) + ": " + msg);
    };

    if (s.rfind("pos(", 0) == 0 || s.rfind("neg(", 0) == 0 || s.rfind("sing(", 0) == 0) {
      CrossingKind kind = s[0] == 'p'   ? CrossingKind::Positive
                          : s[0] == 'n' ? CrossingKind::Negative
                                        : CrossingKind::Singular;
      auto open = s.find('(');
      if (s.back() != ')') throw bad("expected closing ')'");
      std::string body = s.substr(open + 1, s.size() - open - 2);
      std::vector<std::string> parts;
      std::string cur;
      for (char c : body) {
        if (c == ',') {
          parts.push_back(cur);
          cur.clear();
        } else if (c != ' ' && c != '\t') {
          cur += c;
        }
      }
      parts.push_back(cur);
      if (parts.size() != 4) throw bad("crossings take exactly 4 arcs");
      for (const auto& p : parts)
        if (p.empty()) throw bad("empty arc name");
      d.add_crossing(kind, parts[0], parts[1], parts[2], parts[3]);
    } else if (s.rfind("component", 0) == 0) {
      // component <id> = {a,b,...} label <1|2>
      std::istringstream ls(s);
      std::string kw, comp_id, eq;
      ls >> kw >> comp_id >> eq;
      if (eq != "=") throw bad("expected 'component <id> = {arcs} label <n>'");
      auto lb = s.find('{');
      auto rb = s.find('}');
      if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw bad("expected '{a,b,...}'");
      std::vector<std::string> members;
      std::string cur;
      for (std::size_t i = lb + 1; i < rb; ++i) {
        char c = s[i];
        if (c == ',') {
          if (!cur.empty()) members.push_back(cur);
          cur.clear();
        } else if (c != ' ' && c != '\t') {
          cur += c;
        }
      }
      if (!cur.empty()) members.push_back(cur);
      auto lab_pos = s.find("label", rb);
      if (lab_pos == std::string::npos) throw bad("missing 'label'");
      int label = 0;
      try {
        label = std::stoi(s.substr(lab_pos + 5));
      } catch (const std::exception&) {
        throw bad("bad label value");
      }
      d.set_component(comp_id, members, label);
    } else {
      throw bad("unrecognized line '" + s + "'");
    }
  }
  return d;
}

}  // namespace odsq
