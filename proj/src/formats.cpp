// Copyright 2026 The unsharp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unsharp/formats.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "unsharp/format.hpp"

namespace unsharp {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string text;  // comment stripped
  std::vector<Token> tokens;
};

struct Section {
  std::string name;
  std::vector<Token> args;
  std::size_t line = 0;
  std::vector<Line> body;
};

std::vector<Token> tokenize(const std::string &s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    out.push_back({s.substr(start, i - start), start + 1});
  }
  return out;
}

/// Splits text into sections. Content before the first header is an error.
std::vector<Section> sections_of(std::string_view text) {
  std::vector<Section> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens.front().text.front() == '[') {
      const auto open = raw.find('[');
      const auto close = raw.find(']');
      if (close == std::string::npos) throw ParseError(number, open + 1, "unterminated section header");
      Section sec;
      sec.line = number;
      auto inner = tokenize(raw.substr(open + 1, close - open - 1));
      if (inner.empty()) throw ParseError(number, open + 1, "empty section header");
      for (auto &t : inner) t.column += open + 1;
      sec.name = inner.front().text;
      sec.args.assign(inner.begin() + 1, inner.end());
      // Text after the header belongs to the section body.
      std::string rest = std::string(close + 1, ' ') + raw.substr(close + 1);
      auto rest_tokens = tokenize(rest);
      if (!rest_tokens.empty()) sec.body.push_back({number, rest, std::move(rest_tokens)});
      out.push_back(std::move(sec));
      continue;
    }
    if (out.empty()) throw ParseError(number, tokens.front().column, "content before the first section header");
    out.back().body.push_back({number, raw, std::move(tokens)});
  }
  return out;
}

/// All body tokens of a section, in order, with their line numbers.
std::vector<std::pair<std::size_t, Token>> flat(const Section &sec) {
  std::vector<std::pair<std::size_t, Token>> out;
  for (const auto &l : sec.body) {
    for (const auto &t : l.tokens) out.emplace_back(l.number, t);
  }
  return out;
}

/// Element and proposition ids avoid the set and table punctuation; time ids
/// only avoid brackets, so extended-frame ids such as "(t,1)" stay legal.
void check_id(const std::string &id, std::size_t line, std::size_t column, bool time_id = false) {
  if (id == "-") throw ParseError(line, column, "'-' is reserved");
  if (id.find_first_of(time_id ? "#[]" : "{},:#[]") != std::string::npos) {
    throw ParseError(line, column, "identifier '" + id + "' contains a reserved character");
  }
}

std::vector<std::string> declared_ids(const Section &sec, const char *what) {
  std::vector<std::string> ids;
  std::set<std::string> seen;
  for (const auto &[line, tok] : flat(sec)) {
    check_id(tok.text, line, tok.column, std::string_view(what) == "time point");
    if (!seen.insert(tok.text).second) throw ParseError(line, tok.column, std::string("duplicate ") + what + " '" + tok.text + "'");
    ids.push_back(tok.text);
  }
  if (ids.empty()) throw ParseError(sec.line, 1, std::string("no ") + what + "s declared");
  return ids;
}

std::size_t lookup(const std::map<std::string, std::size_t> &index, const std::string &id, std::size_t line,
                   std::size_t column, const char *what) {
  const auto it = index.find(id);
  if (it == index.end()) throw ParseError(line, column, std::string("unknown ") + what + " '" + id + "'");
  return it->second;
}

std::map<std::string, std::size_t> index_of(const std::vector<std::string> &ids) {
  std::map<std::string, std::size_t> m;
  for (std::size_t i = 0; i < ids.size(); ++i) m.emplace(ids[i], i);
  return m;
}

const Section *find_unique(const std::vector<Section> &secs, const std::string &name, bool required,
                           std::string_view what) {
  const Section *found = nullptr;
  for (const auto &s : secs) {
    if (s.name != name) continue;
    if (found) throw ParseError(s.line, 1, "duplicate [" + name + "] section");
    found = &s;
  }
  if (!found && required) throw ParseError(secs.empty() ? 1 : secs.back().line, 1, "missing [" + name + "] section in " + std::string(what));
  return found;
}

void only_sections(const std::vector<Section> &secs, std::initializer_list<const char *> allowed) {
  for (const auto &s : secs) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char *a) { return s.name == a; })) {
      throw ParseError(s.line, 1, "unknown section [" + s.name + "]");
    }
  }
}

void no_args(const Section &sec) {
  if (!sec.args.empty()) throw ParseError(sec.line, sec.args.front().column, "unexpected argument in [" + sec.name + "]");
}

Element single_id(const Section &sec, const std::map<std::string, std::size_t> &index) {
  no_args(sec);
  const auto toks = flat(sec);
  if (toks.size() != 1) throw ParseError(sec.line, 1, "[" + sec.name + "] expects exactly one element");
  return lookup(index, toks[0].second.text, toks[0].first, toks[0].second.column, "element");
}

ElementSet parse_value(const std::string &text, std::size_t line, std::size_t column,
                       const std::map<std::string, std::size_t> &index) {
  ElementSet out;
  if (text.empty()) throw ParseError(line, column, "missing value");
  if (text.front() != '{') {
    out.insert(lookup(index, text, line, column, "element"));
    return out;
  }
  if (text.back() != '}') throw ParseError(line, column, "unterminated set");
  std::string inner = text.substr(1, text.size() - 2);
  std::size_t pos = 0;
  while (true) {
    const auto comma = inner.find(',', pos);
    std::string item = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError(line, column + 1 + pos, "empty set member");
    out.insert(lookup(index, item.substr(b, e - b + 1), line, column + 1 + pos + b, "element"));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

/// [prop name] sections: the name is the single header argument, values follow.
NamedPropositions props_from(const std::vector<Section> &secs, const EffectAlgebra &ea, std::size_t times) {
  NamedPropositions out;
  std::map<std::string, std::size_t> elems = index_of(ea.names());
  for (const auto &s : secs) {
    if (s.name != "prop") continue;
    if (s.args.size() != 1) throw ParseError(s.line, 1, "expected [prop <name>]");
    const auto &name = s.args[0];
    check_id(name.text, s.line, name.column);
    if (std::find(out.names.begin(), out.names.end(), name.text) != out.names.end()) {
      throw ParseError(s.line, name.column, "duplicate proposition '" + name.text + "'");
    }
    Proposition p;
    for (const auto &[line, tok] : flat(s)) p.push_back(lookup(elems, tok.text, line, tok.column, "element"));
    if (p.size() != times) {
      throw ParseError(s.line, name.column, "proposition '" + name.text + "' has " + std::to_string(p.size()) +
                                                " values for " + std::to_string(times) + " time points");
    }
    out.names.push_back(name.text);
    out.props.push_back(std::move(p));
  }
  return out;
}

}  // namespace

const Proposition &NamedPropositions::get(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return props[i];
  }
  throw Error("unknown proposition '" + std::string(name) + "'");
}

RawAlgebra parse_algebra_raw(std::string_view text) {
  const auto secs = sections_of(text);
  only_sections(secs, {"elements", "zero", "one", "plus", "supplement"});
  const Section *elements = find_unique(secs, "elements", true, "algebra");
  no_args(*elements);
  RawAlgebra raw;
  raw.names = declared_ids(*elements, "element");
  if (raw.names.size() > kMaxElements) {
    throw ParseError(elements->line, 1, "at most " + std::to_string(kMaxElements) + " elements are supported");
  }
  const auto index = index_of(raw.names);
  const std::size_t n = raw.names.size();
  raw.zero = single_id(*find_unique(secs, "zero", true, "algebra"), index);
  raw.one = single_id(*find_unique(secs, "one", true, "algebra"), index);

  const Section *plus = find_unique(secs, "plus", true, "algebra");
  no_args(*plus);
  if (plus->body.empty()) throw ParseError(plus->line, 1, "[plus] section is empty");
  raw.plus.assign(n, std::vector<std::optional<Element>>(n));
  std::vector<bool> have(n, false);
  for (const auto &row : plus->body) {
    const Token &head = row.tokens.front();
    std::string label = head.text;
    std::size_t first_cell = 1;
    if (label.size() > 1 && label.back() == ':') {
      label.pop_back();
    } else if (row.tokens.size() > 1 && row.tokens[1].text == ":") {
      first_cell = 2;
    } else {
      throw ParseError(row.number, head.column, "expected a row label 'x:'");
    }
    const Element a = lookup(index, label, row.number, head.column, "element");
    if (have[a]) throw ParseError(row.number, head.column, "duplicate row for '" + label + "'");
    have[a] = true;
    const std::size_t cells = row.tokens.size() - first_cell;
    if (cells != n) {
      const std::size_t col = cells > n ? row.tokens[first_cell + n].column : row.text.size() + 1;
      throw ParseError(row.number, col,
                       "row '" + label + "' has " + std::to_string(cells) + " cells, expected " + std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      const Token &cell = row.tokens[first_cell + b];
      if (cell.text != "-") raw.plus[a][b] = lookup(index, cell.text, row.number, cell.column, "element");
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (!have[a]) throw ParseError(plus->line, 1, "[plus] has no row for '" + raw.names[a] + "'");
  }

  if (const Section *sup = find_unique(secs, "supplement", false, "algebra")) {
    no_args(*sup);
    std::vector<std::optional<Element>> map(n);
    for (const auto &l : sup->body) {
      if (l.tokens.size() != 2) throw ParseError(l.number, l.tokens.front().column, "expected 'x x'' pair");
      const Element a = lookup(index, l.tokens[0].text, l.number, l.tokens[0].column, "element");
      const Element b = lookup(index, l.tokens[1].text, l.number, l.tokens[1].column, "element");
      if (map[a]) throw ParseError(l.number, l.tokens[0].column, "duplicate supplement for '" + raw.names[a] + "'");
      map[a] = b;
    }
    std::vector<Element> full(n);
    for (Element a = 0; a < n; ++a) {
      if (!map[a]) throw ParseError(sup->line, 1, "[supplement] has no entry for '" + raw.names[a] + "'");
      full[a] = *map[a];
    }
    raw.supplement = std::move(full);
  }
  return raw;
}

EffectAlgebra parse_algebra(std::string_view text) { return EffectAlgebra::from_raw(parse_algebra_raw(text)); }

TimeFrame parse_frame(std::string_view text) {
  const auto secs = sections_of(text);
  only_sections(secs, {"times", "rel"});
  const Section *times = find_unique(secs, "times", true, "frame");
  no_args(*times);
  auto names = declared_ids(*times, "time point");
  const auto index = index_of(names);
  const Section *rel = find_unique(secs, "rel", true, "frame");
  no_args(*rel);
  if (rel->body.empty()) throw ParseError(rel->line, 1, "[rel] section is empty");
  std::vector<std::pair<TimePoint, TimePoint>> pairs;
  for (const auto &l : rel->body) {
    if (l.tokens.size() != 2) throw ParseError(l.number, l.tokens.front().column, "expected an 's t' pair");
    pairs.emplace_back(lookup(index, l.tokens[0].text, l.number, l.tokens[0].column, "time point"),
                       lookup(index, l.tokens[1].text, l.number, l.tokens[1].column, "time point"));
  }
  return TimeFrame(std::move(names), pairs);
}

NamedPropositions parse_props(std::string_view text, const EffectAlgebra &ea, std::size_t times) {
  const auto secs = sections_of(text);
  only_sections(secs, {"prop"});
  return props_from(secs, ea, times);
}

bool looks_like_ops(std::string_view text) {
  try {
    const auto secs = sections_of(text);
    return std::any_of(secs.begin(), secs.end(), [](const Section &s) { return s.name == "op"; });
  } catch (const ParseError &) {
    return false;
  }
}

OperatorTable parse_ops(std::string_view text, const EffectAlgebra &ea) {
  const auto secs = sections_of(text);
  only_sections(secs, {"times", "prop", "op"});
  const Section *times = find_unique(secs, "times", true, "operator table");
  no_args(*times);
  OperatorTable table(declared_ids(*times, "time point"));
  const auto time_index = index_of(table.times());
  const auto elems = index_of(ea.names());
  const auto props = props_from(secs, ea, table.size());
  for (const auto &s : secs) {
    if (s.name != "op") continue;
    if (s.args.size() != 2) throw ParseError(s.line, 1, "expected [op <P|F|H|G> <prop|*>]");
    const Token &which = s.args[0];
    const auto op = which.text.size() == 1 ? tense_op_from_char(which.text[0]) : std::nullopt;
    if (!op) throw ParseError(s.line, which.column, "unknown operator '" + which.text + "'");
    const Token &target = s.args[1];
    std::optional<Proposition> prop;
    if (target.text != "*") {
      auto it = std::find(props.names.begin(), props.names.end(), target.text);
      if (it == props.names.end()) throw ParseError(s.line, target.column, "unknown proposition '" + target.text + "'");
      prop = props.props[static_cast<std::size_t>(it - props.names.begin())];
    }
    for (const auto &l : s.body) {
      const auto arrow = l.text.find("->");
      if (arrow == std::string::npos) throw ParseError(l.number, l.tokens.front().column, "expected 't -> value'");
      const auto left = tokenize(l.text.substr(0, arrow));
      if (left.size() != 1) throw ParseError(l.number, l.tokens.front().column, "expected one time point before '->'");
      const Token &when = left.front();
      std::string value = l.text.substr(arrow + 2);
      const auto b = value.find_first_not_of(" \t");
      const auto e = value.find_last_not_of(" \t");
      if (b == std::string::npos) throw ParseError(l.number, arrow + 3, "missing value");
      const ElementSet v = parse_value(value.substr(b, e - b + 1), l.number, arrow + 3 + b, elems);
      std::vector<TimePoint> points;
      if (when.text == "*") {
        for (TimePoint t = 0; t < table.size(); ++t) points.push_back(t);
      } else {
        points.push_back(lookup(time_index, when.text, l.number, when.column, "time point"));
      }
      for (TimePoint t : points) {
        if (prop) {
          table.set(*op, *prop, t, v);
        } else {
          table.set_default(*op, t, v);
        }
      }
    }
  }
  return table;
}

namespace {

std::string pad(const std::string &s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

std::string write_algebra(const EffectAlgebra &ea) {
  const std::size_t n = ea.size();
  std::size_t width = 1;
  for (const auto &name : ea.names()) width = std::max(width, name.size());
  std::ostringstream out;
  out << "[elements]\n";
  for (Element a = 0; a < n; ++a) out << (a ? " " : "") << ea.name(a);
  out << "\n\n[zero]\n" << ea.name(ea.zero()) << "\n\n[one]\n" << ea.name(ea.one()) << "\n\n[plus]\n";
  for (Element a = 0; a < n; ++a) {
    std::string row = pad(ea.name(a) + ":", width + 2);
    for (Element b = 0; b < n; ++b) {
      const auto s = ea.plus(a, b);
      row += pad(s ? ea.name(*s) : "-", width + 1);
    }
    out << rstrip(row) << "\n";
  }
  out << "\n[supplement]\n";
  for (Element a = 0; a < n; ++a) out << pad(ea.name(a), width + 1) << ea.name(ea.supplement(a)) << "\n";
  return out.str();
}

std::string write_frame(const TimeFrame &frame) {
  std::ostringstream out;
  out << "[times]\n";
  for (TimePoint t = 0; t < frame.size(); ++t) out << (t ? " " : "") << frame.name(t);
  out << "\n\n[rel]\n";
  for (auto [s, t] : frame.pairs()) out << frame.name(s) << " " << frame.name(t) << "\n";
  return out.str();
}

std::string write_props(const EffectAlgebra &ea, const NamedPropositions &props) {
  std::ostringstream out;
  for (std::size_t i = 0; i < props.names.size(); ++i) {
    out << "[prop " << props.names[i] << "]";
    for (Element e : props.props[i]) out << " " << ea.name(e);
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace unsharp
