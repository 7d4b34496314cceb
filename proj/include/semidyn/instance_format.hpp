#pragma once

#include <string>
#include <vector>

#include "semidyn/groupoid_action.hpp"
#include "semidyn/inverse_semigroup.hpp"
#include "semidyn/partial_action.hpp"

namespace semidyn {

/// Plain-text bundle of named instances. Line-oriented: sections open with
/// "[kind name]" and hold "key ... : ..." lines; '#' starts a comment.
/// Labels may use any characters except whitespace, ':', '>' and '#'.
/// Everything parsed is fully validated; printing is canonical and
/// parse(print(x)) == x.
struct InstanceBundle {
  struct NamedAction {
    std::string semigroup;
    std::string space;
    PartialAction action;
    bool operator==(const NamedAction&) const = default;
  };
  struct NamedCongruence {
    std::string semigroup;
    Congruence congruence;
    bool operator==(const NamedCongruence&) const = default;
  };
  struct NamedGroupoidAction {
    std::string groupoid;
    std::string space;
    GroupoidAction action;
    bool operator==(const NamedGroupoidAction&) const = default;
  };

  std::vector<std::pair<std::string, FiniteInverseSemigroup>> semigroups;
  std::vector<std::pair<std::string, FiniteSpace>> spaces;
  std::vector<std::pair<std::string, NamedAction>> actions;
  std::vector<std::pair<std::string, NamedCongruence>> congruences;
  std::vector<std::pair<std::string, FiniteGroupoid>> groupoids;
  std::vector<std::pair<std::string, NamedGroupoidAction>> groupoid_actions;

  const FiniteInverseSemigroup* find_semigroup(const std::string& name) const;
  const FiniteSpace* find_space(const std::string& name) const;
  const NamedAction* find_action(const std::string& name) const;
  const NamedCongruence* find_congruence(const std::string& name) const;
  const FiniteGroupoid* find_groupoid(const std::string& name) const;
  const NamedGroupoidAction* find_groupoid_action(const std::string& name) const;

  bool operator==(const InstanceBundle&) const = default;
};

InstanceBundle parse_instances(const std::string& text);

std::string print_instances(const InstanceBundle& bundle);

}  // namespace semidyn
