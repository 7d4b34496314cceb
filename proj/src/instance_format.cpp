#include "semidyn/instance_format.hpp"

#include <algorithm>
#include <sstream>

namespace semidyn {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

struct Line {
  std::vector<Token> tokens;  // nonempty
  int number;
};

bool label_ok(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == ':' || c == '>' || c == '#' || std::isspace(static_cast<unsigned char>(c)))
      return false;
  return true;
}

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  int lineno = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    Line line{{}, lineno};
    size_t i = 0;
    while (i < raw.size()) {
      char c = raw[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      size_t start = i;
      if (c == ':' || c == '[' || c == ']') {
        ++i;
      } else {
        while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) &&
               raw[i] != ':' && raw[i] != '#' && raw[i] != '[' && raw[i] != ']')
          ++i;
      }
      line.tokens.push_back(
          {raw.substr(start, i - start), lineno, static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void parse_fail(const Token& at, const std::string& msg) {
  throw ParseError(at.line, at.column, msg);
}

[[noreturn]] void parse_fail(const Line& at, const std::string& msg) {
  throw ParseError(at.number, 1, msg);
}

// a section: header tokens "[", kind, name, "]" followed by body lines
struct Section {
  std::string kind;
  std::string name;
  Token header;
  std::vector<Line> body;
};

std::vector<Section> split_sections(const std::vector<Line>& lines) {
  std::vector<Section> out;
  for (const Line& line : lines) {
    if (line.tokens[0].text == "[") {
      if (line.tokens.size() != 4 || line.tokens[3].text != "]")
        parse_fail(line.tokens[0], "section header must be `[kind name]`");
      Section s;
      s.kind = line.tokens[1].text;
      s.name = line.tokens[2].text;
      s.header = line.tokens[1];
      if (!label_ok(s.name)) parse_fail(line.tokens[2], "bad section name");
      out.push_back(std::move(s));
    } else {
      if (out.empty())
        parse_fail(line.tokens[0], "content before the first section header");
      out.back().body.push_back(line);
    }
  }
  return out;
}

// splits a body line into the key, the tokens before ':' and after ':'
struct KeyedLine {
  std::string key;
  std::vector<Token> head;  // between key and ':' (or all, when no ':')
  std::vector<Token> tail;  // after ':'
  bool has_colon = false;
  const Line* raw;
};

KeyedLine keyed(const Line& line) {
  KeyedLine k;
  k.raw = &line;
  k.key = line.tokens[0].text;
  size_t i = 1;
  for (; i < line.tokens.size() && line.tokens[i].text != ":"; ++i)
    k.head.push_back(line.tokens[i]);
  if (i < line.tokens.size()) {
    k.has_colon = true;
    for (++i; i < line.tokens.size(); ++i) {
      if (line.tokens[i].text == ":")
        parse_fail(line.tokens[i], "unexpected second ':'");
      k.tail.push_back(line.tokens[i]);
    }
  }
  return k;
}

int lookup(const std::vector<std::string>& labels, const Token& t) {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == t.text) return static_cast<int>(i);
  parse_fail(t, "unknown label '" + t.text + "'");
}

std::pair<std::string, std::string> split_pair(const Token& t) {
  size_t pos = t.text.find('>');
  if (pos == std::string::npos || pos == 0 || pos + 1 >= t.text.size())
    parse_fail(t, "expected `from>to`");
  return {t.text.substr(0, pos), t.text.substr(pos + 1)};
}

std::vector<std::string> label_list(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) {
    if (!label_ok(t.text)) parse_fail(t, "bad label '" + t.text + "'");
    out.push_back(t.text);
  }
  return out;
}

FiniteInverseSemigroup parse_semigroup(const Section& sec) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;
  std::vector<char> row_seen;
  for (const Line& line : sec.body) {
    KeyedLine k = keyed(line);
    if (k.key == "elements") {
      if (!labels.empty()) parse_fail(line.tokens[0], "duplicate `elements`");
      labels = label_list(k.head);
      table.assign(labels.size(), {});
      row_seen.assign(labels.size(), 0);
    } else if (k.key == "mul") {
      if (labels.empty()) parse_fail(line.tokens[0], "`elements` must come first");
      if (k.head.size() != 1 || !k.has_colon)
        parse_fail(line.tokens[0], "expected `mul element : products`");
      int row = lookup(labels, k.head[0]);
      if (row_seen[row]) parse_fail(k.head[0], "duplicate row");
      row_seen[row] = 1;
      if (k.tail.size() != labels.size())
        parse_fail(line.tokens[0],
                   str("expected ", labels.size(), " products, got ", k.tail.size()));
      for (const Token& t : k.tail) table[row].push_back(lookup(labels, t));
    } else {
      parse_fail(line.tokens[0], "unknown key '" + k.key + "' in [semigroup]");
    }
  }
  if (labels.empty()) parse_fail(sec.body.empty() ? Line{{sec.header}, sec.header.line}
                                                  : sec.body.front(),
                                 "missing `elements`");
  for (size_t i = 0; i < labels.size(); ++i)
    if (!row_seen[i])
      throw ParseError(sec.header.line, 1, "missing `mul " + labels[i] + "`");
  return validate_inverse_semigroup(table, labels,
                                    std::max<int>(static_cast<int>(labels.size()),
                                                  kDefaultSemigroupCap));
}

FiniteSpace parse_space(const Section& sec) {
  std::vector<std::string> pts;
  for (const Line& line : sec.body) {
    KeyedLine k = keyed(line);
    if (k.key == "points" && pts.empty())
      pts = label_list(k.head);
    else
      parse_fail(line.tokens[0], "expected a single `points` line in [space]");
  }
  if (pts.empty()) throw ParseError(sec.header.line, 1, "missing `points`");
  return make_space(pts);
}

}  // namespace

const FiniteInverseSemigroup* InstanceBundle::find_semigroup(
    const std::string& name) const {
  for (const auto& [n, v] : semigroups)
    if (n == name) return &v;
  return nullptr;
}

const FiniteSpace* InstanceBundle::find_space(const std::string& name) const {
  for (const auto& [n, v] : spaces)
    if (n == name) return &v;
  return nullptr;
}

const InstanceBundle::NamedAction* InstanceBundle::find_action(
    const std::string& name) const {
  for (const auto& [n, v] : actions)
    if (n == name) return &v;
  return nullptr;
}

const InstanceBundle::NamedCongruence* InstanceBundle::find_congruence(
    const std::string& name) const {
  for (const auto& [n, v] : congruences)
    if (n == name) return &v;
  return nullptr;
}

const FiniteGroupoid* InstanceBundle::find_groupoid(
    const std::string& name) const {
  for (const auto& [n, v] : groupoids)
    if (n == name) return &v;
  return nullptr;
}

const InstanceBundle::NamedGroupoidAction* InstanceBundle::find_groupoid_action(
    const std::string& name) const {
  for (const auto& [n, v] : groupoid_actions)
    if (n == name) return &v;
  return nullptr;
}

InstanceBundle parse_instances(const std::string& text) {
  InstanceBundle b;
  std::vector<Section> sections = split_sections(tokenize(text));

  auto fresh_name = [&](const Section& sec) {
    bool taken = b.find_semigroup(sec.name) || b.find_space(sec.name) ||
                 b.find_action(sec.name) || b.find_congruence(sec.name) ||
                 b.find_groupoid(sec.name) || b.find_groupoid_action(sec.name);
    if (taken) parse_fail(sec.header, "duplicate instance name '" + sec.name + "'");
  };

  for (const Section& sec : sections) {
    fresh_name(sec);
    if (sec.kind == "semigroup") {
      b.semigroups.emplace_back(sec.name, parse_semigroup(sec));
    } else if (sec.kind == "space") {
      b.spaces.emplace_back(sec.name, parse_space(sec));
    } else if (sec.kind == "action") {
      std::string sg_name, sp_name;
      std::vector<std::pair<Token, KeyedLine>> maps;
      for (const Line& line : sec.body) {
        KeyedLine k = keyed(line);
        if (k.key == "semigroup" && k.head.size() == 1)
          sg_name = k.head[0].text;
        else if (k.key == "space" && k.head.size() == 1)
          sp_name = k.head[0].text;
        else if (k.key == "map" && k.head.size() == 1 && k.has_colon)
          maps.push_back({k.head[0], k});
        else
          parse_fail(line.tokens[0], "unknown line in [action]");
      }
      const FiniteInverseSemigroup* sg = b.find_semigroup(sg_name);
      if (!sg) throw ParseError(sec.header.line, 1, "unknown semigroup '" + sg_name + "'");
      const FiniteSpace* sp = b.find_space(sp_name);
      if (!sp) throw ParseError(sec.header.line, 1, "unknown space '" + sp_name + "'");

      std::vector<PartialBijection> theta(sg->size(),
                                          PartialBijection::empty_map(sp->size()));
      std::vector<char> seen(sg->size(), 0);
      for (auto& [tok, k] : maps) {
        int s = lookup(sg->labels(), tok);
        if (seen[s]) parse_fail(tok, "duplicate map row");
        seen[s] = 1;
        std::vector<int> img(sp->size(), -1);
        for (const Token& t : k.tail) {
          auto [from, to] = split_pair(t);
          int p = sp->index_of(from), q = sp->index_of(to);
          if (p < 0) parse_fail(t, "unknown point '" + from + "'");
          if (q < 0) parse_fail(t, "unknown point '" + to + "'");
          if (img[p] >= 0) parse_fail(t, "point mapped twice");
          img[p] = q;
        }
        theta[s] = PartialBijection::from_images(img);
      }
      for (int s = 0; s < sg->size(); ++s)
        if (!seen[s])
          throw ParseError(sec.header.line, 1,
                           "missing `map " + sg->label(s) + "`");
      b.actions.emplace_back(
          sec.name, InstanceBundle::NamedAction{
                        sg_name, sp_name,
                        validate_partial_action(*sg, *sp, std::move(theta))});
    } else if (sec.kind == "congruence") {
      std::string sg_name;
      std::vector<IndexSet> classes;
      const FiniteInverseSemigroup* sg = nullptr;
      for (const Line& line : sec.body) {
        KeyedLine k = keyed(line);
        if (k.key == "semigroup" && k.head.size() == 1) {
          sg_name = k.head[0].text;
          sg = b.find_semigroup(sg_name);
          if (!sg) parse_fail(k.head[0], "unknown semigroup '" + sg_name + "'");
        } else if (k.key == "class") {
          if (!sg) parse_fail(line.tokens[0], "`semigroup` must come first");
          IndexSet cls;
          for (const Token& t : k.head) insert_sorted(cls, lookup(sg->labels(), t));
          classes.push_back(cls);
        } else {
          parse_fail(line.tokens[0], "unknown line in [congruence]");
        }
      }
      if (!sg) throw ParseError(sec.header.line, 1, "missing `semigroup`");
      b.congruences.emplace_back(
          sec.name,
          InstanceBundle::NamedCongruence{sg_name, validate_congruence(*sg, classes)});
    } else if (sec.kind == "groupoid") {
      std::vector<std::string> labels;
      IndexSet units;
      std::vector<int> d, r;
      std::vector<std::vector<int>> comp;
      std::vector<char> dr_seen;
      std::vector<std::pair<Token, KeyedLine>> comps;
      for (const Line& line : sec.body) {
        KeyedLine k = keyed(line);
        if (k.key == "arrows") {
          if (!labels.empty()) parse_fail(line.tokens[0], "duplicate `arrows`");
          labels = label_list(k.head);
          d.assign(labels.size(), -1);
          r.assign(labels.size(), -1);
          dr_seen.assign(labels.size(), 0);
          comp.assign(labels.size(), std::vector<int>(labels.size(), -1));
        } else if (k.key == "units") {
          if (labels.empty()) parse_fail(line.tokens[0], "`arrows` must come first");
          for (const Token& t : k.head) insert_sorted(units, lookup(labels, t));
        } else if (k.key == "dr") {
          if (labels.empty()) parse_fail(line.tokens[0], "`arrows` must come first");
          if (k.head.size() != 1 || k.tail.size() != 2)
            parse_fail(line.tokens[0], "expected `dr arrow : source range`");
          int x = lookup(labels, k.head[0]);
          if (dr_seen[x]) parse_fail(k.head[0], "duplicate `dr` row");
          dr_seen[x] = 1;
          d[x] = lookup(labels, k.tail[0]);
          r[x] = lookup(labels, k.tail[1]);
        } else if (k.key == "comp") {
          if (labels.empty()) parse_fail(line.tokens[0], "`arrows` must come first");
          if (k.head.size() != 2 || k.tail.size() != 1)
            parse_fail(line.tokens[0], "expected `comp left right : product`");
          comps.push_back({k.head[0], k});
        } else {
          parse_fail(line.tokens[0], "unknown line in [groupoid]");
        }
      }
      if (labels.empty()) throw ParseError(sec.header.line, 1, "missing `arrows`");
      for (size_t i = 0; i < labels.size(); ++i)
        if (!dr_seen[i])
          throw ParseError(sec.header.line, 1, "missing `dr " + labels[i] + "`");
      for (auto& [tok, k] : comps) {
        int x = lookup(labels, k.head[0]);
        int y = lookup(labels, k.head[1]);
        if (comp[x][y] >= 0) parse_fail(tok, "duplicate `comp` row");
        comp[x][y] = lookup(labels, k.tail[0]);
      }
      b.groupoids.emplace_back(sec.name, validate_groupoid(units, d, r, comp, labels));
    } else if (sec.kind == "groupoid-action") {
      std::string g_name, sp_name;
      std::vector<std::pair<Token, KeyedLine>> anchors, acts;
      for (const Line& line : sec.body) {
        KeyedLine k = keyed(line);
        if (k.key == "groupoid" && k.head.size() == 1)
          g_name = k.head[0].text;
        else if (k.key == "space" && k.head.size() == 1)
          sp_name = k.head[0].text;
        else if (k.key == "anchor" && k.head.size() == 1 && k.tail.size() == 1)
          anchors.push_back({k.head[0], k});
        else if (k.key == "act" && k.head.size() == 1 && k.has_colon)
          acts.push_back({k.head[0], k});
        else
          parse_fail(line.tokens[0], "unknown line in [groupoid-action]");
      }
      const FiniteGroupoid* g = b.find_groupoid(g_name);
      if (!g) throw ParseError(sec.header.line, 1, "unknown groupoid '" + g_name + "'");
      const FiniteSpace* sp = b.find_space(sp_name);
      if (!sp) throw ParseError(sec.header.line, 1, "unknown space '" + sp_name + "'");

      std::vector<std::string> arrow_labels;
      for (int x = 0; x < g->size(); ++x) arrow_labels.push_back(g->label(x));

      std::vector<int> anchor(sp->size(), -1);
      for (auto& [tok, k] : anchors) {
        int p = sp->index_of(tok.text);
        if (p < 0) parse_fail(tok, "unknown point '" + tok.text + "'");
        if (anchor[p] >= 0) parse_fail(tok, "duplicate anchor");
        anchor[p] = lookup(arrow_labels, k.tail[0]);
      }
      for (int p = 0; p < sp->size(); ++p)
        if (anchor[p] < 0)
          throw ParseError(sec.header.line, 1,
                           "missing `anchor " + sp->points[p] + "`");

      std::vector<std::vector<int>> act(g->size(), std::vector<int>(sp->size(), -1));
      std::vector<char> seen(g->size(), 0);
      for (auto& [tok, k] : acts) {
        int x = lookup(arrow_labels, tok);
        if (seen[x]) parse_fail(tok, "duplicate act row");
        seen[x] = 1;
        for (const Token& t : k.tail) {
          auto [from, to] = split_pair(t);
          int p = sp->index_of(from), q = sp->index_of(to);
          if (p < 0) parse_fail(t, "unknown point '" + from + "'");
          if (q < 0) parse_fail(t, "unknown point '" + to + "'");
          if (act[x][p] >= 0) parse_fail(t, "point acted on twice");
          act[x][p] = q;
        }
      }
      for (int x = 0; x < g->size(); ++x)
        if (!seen[x])
          throw ParseError(sec.header.line, 1, "missing `act " + g->label(x) + "`");
      b.groupoid_actions.emplace_back(
          sec.name,
          InstanceBundle::NamedGroupoidAction{
              g_name, sp_name, validate_groupoid_action(*g, *sp, anchor, act)});
    } else {
      parse_fail(sec.header, "unknown section kind '" + sec.kind + "'");
    }
  }
  return b;
}

namespace {

void require_printable(const std::string& label) {
  if (!label_ok(label))
    fail("NotSerializable", "label '" + label + "' cannot be printed");
}

}  // namespace

std::string print_instances(const InstanceBundle& b) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << "\n";
    first = false;
  };

  for (const auto& [name, sg] : b.semigroups) {
    sep();
    os << "[semigroup " << name << "]\n";
    os << "elements";
    for (int i = 0; i < sg.size(); ++i) {
      require_printable(sg.label(i));
      os << " " << sg.label(i);
    }
    os << "\n";
    for (int i = 0; i < sg.size(); ++i) {
      os << "mul " << sg.label(i) << " :";
      for (int j = 0; j < sg.size(); ++j) os << " " << sg.label(sg.mul(i, j));
      os << "\n";
    }
  }
  for (const auto& [name, sp] : b.spaces) {
    sep();
    os << "[space " << name << "]\npoints";
    for (const std::string& p : sp.points) {
      require_printable(p);
      os << " " << p;
    }
    os << "\n";
  }
  for (const auto& [name, na] : b.actions) {
    sep();
    os << "[action " << name << "]\n";
    os << "semigroup " << na.semigroup << "\nspace " << na.space << "\n";
    const auto& a = na.action;
    for (int s = 0; s < a.sg().size(); ++s) {
      os << "map " << a.sg().label(s) << " :";
      for (int p : a.theta(s).domain())
        os << " " << a.space().points[p] << ">"
           << a.space().points[a.theta(s).apply(p)];
      os << "\n";
    }
  }
  for (const auto& [name, nc] : b.congruences) {
    sep();
    os << "[congruence " << name << "]\n";
    os << "semigroup " << nc.semigroup << "\n";
    const FiniteInverseSemigroup* sg = b.find_semigroup(nc.semigroup);
    internal_check(sg != nullptr, "congruence over a missing semigroup");
    for (const IndexSet& cls : nc.congruence.classes) {
      os << "class";
      for (int x : cls) os << " " << sg->label(x);
      os << "\n";
    }
  }
  for (const auto& [name, g] : b.groupoids) {
    sep();
    os << "[groupoid " << name << "]\n";
    os << "arrows";
    for (int x = 0; x < g.size(); ++x) {
      require_printable(g.label(x));
      os << " " << g.label(x);
    }
    os << "\nunits";
    for (int u : g.units()) os << " " << g.label(u);
    os << "\n";
    for (int x = 0; x < g.size(); ++x)
      os << "dr " << g.label(x) << " : " << g.label(g.d(x)) << " "
         << g.label(g.r(x)) << "\n";
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y)
        if (g.compose(x, y) >= 0)
          os << "comp " << g.label(x) << " " << g.label(y) << " : "
             << g.label(g.compose(x, y)) << "\n";
  }
  for (const auto& [name, nga] : b.groupoid_actions) {
    sep();
    os << "[groupoid-action " << name << "]\n";
    os << "groupoid " << nga.groupoid << "\nspace " << nga.space << "\n";
    const auto& ga = nga.action;
    for (int p = 0; p < ga.space().size(); ++p)
      os << "anchor " << ga.space().points[p] << " : "
         << ga.gpd().label(ga.anchor(p)) << "\n";
    for (int x = 0; x < ga.gpd().size(); ++x) {
      os << "act " << ga.gpd().label(x) << " :";
      for (int p = 0; p < ga.space().size(); ++p)
        if (ga.defined(x, p))
          os << " " << ga.space().points[p] << ">"
             << ga.space().points[ga.apply(x, p)];
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace semidyn
