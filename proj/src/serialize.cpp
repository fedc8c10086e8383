#include "torelli/serialize.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace torelli {

namespace {

std::string word_str(const WeightedAlphabet &a, const TWord &w) {
  std::string s;
  for (int i = 0; i < w.len; ++i) {
    if (i) s += '.';
    s += a.symbol(w.letter(i));
  }
  return s;
}

TWord word_from_str(const WeightedAlphabet &a, const std::string &s) {
  TWord w;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t dot = s.find('.', pos);
    std::string tok = s.substr(pos, dot == std::string::npos ? dot : dot - pos);
    int letter = -1;
    for (int l = 0; l < a.size(); ++l)
      if (a.symbol(l) == tok) letter = l;
    if (letter < 0) throw AlgebraError("unknown letter '" + tok + "' in word");
    w.push_back(letter);
    pos = dot == std::string::npos ? s.size() : dot + 1;
  }
  if (w.len == 0) throw AlgebraError("empty word in serialized Lie element");
  return w;
}

std::string bracket_str(const WeightedAlphabet &a, const TWord &w) {
  if (w.len == 1) return a.symbol(w.letter(0));
  auto [u, v] = standard_factorization(w);
  return "[" + bracket_str(a, u) + "," + bracket_str(a, v) + "]";
}

nlohmann::json rat_json(const Rat &c) {
  return {{"num", numerator(c).str()}, {"den", denominator(c).str()}};
}

Rat rat_from_json(const nlohmann::json &j) {
  Rat r(Int(j.at("num").get<std::string>()));
  return r / Rat(Int(j.at("den").get<std::string>()));
}

nlohmann::json part_json(const std::string &prefix,
                         const std::map<int, LieElement> &part) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &[i, v] : part)
    out.push_back({{"gen", prefix + std::to_string(i)}, {"lie", to_json(v)}});
  return out;
}

// appends sign-carrying terms like "-(1)·a1⊗a1" for one tensor factor
void text_terms(std::ostringstream &out, bool &first, const std::string &gen,
                const LieElement &v) {
  for (const auto &[w, c] : v.terms()) {
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (!first) out << (neg ? " - " : " + ");
    else if (neg) out << "-";
    first = false;
    std::ostringstream cs;
    cs << mag;
    out << "(" << cs.str() << ")·" << gen << "⊗"
        << bracket_str(v.alphabet(), w);
  }
}

} // namespace

std::vector<McFactor> parse_mc_word(const std::string &text) {
  std::vector<McFactor> out;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto fail = [&](const std::string &msg) -> ParseError {
    return ParseError(msg + " (position " + std::to_string(pos) + ")", pos);
  };
  skip_ws();
  if (pos == text.size()) throw fail("empty mapping-class word");
  while (true) {
    if (pos == text.size() || (!std::isalpha(static_cast<unsigned char>(text[pos])) &&
                               text[pos] != '_'))
      throw fail("expected a name");
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    McFactor f{text.substr(start, pos - start), 1, start};
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      size_t es = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == es || (pos == es + 1 && !std::isdigit(
                                             static_cast<unsigned char>(text[pos - 1]))))
        throw fail("malformed exponent");
      f.exponent = std::stol(text.substr(es, pos - es));
    }
    out.push_back(std::move(f));
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '*') throw fail("expected '*' between factors");
    ++pos;
    skip_ws();
  }
  return out;
}

SurfaceEndo resolve_mc_word(const std::vector<McFactor> &factors,
                            const std::map<std::string, SurfaceEndo> &lib,
                            int genus) {
  SurfaceEndo h = SurfaceEndo::identity(genus);
  for (const auto &f : factors) {
    auto it = lib.find(f.name);
    if (it == lib.end()) {
      // diagnose the common two-handle index slip
      if (f.name.size() == 5 && f.name.rfind("t_a", 0) == 0 &&
          std::isdigit(static_cast<unsigned char>(f.name[3])) &&
          std::isdigit(static_cast<unsigned char>(f.name[4])) &&
          f.name[3] >= f.name[4])
        throw ParseError("indices must satisfy k<l in '" + f.name +
                             "' (position " + std::to_string(f.pos) + ")",
                         f.pos);
      throw ParseError("unknown name '" + f.name + "' (position " +
                           std::to_string(f.pos) + ")",
                       f.pos);
    }
    if (it->second.genus() != genus)
      throw ParseError("'" + f.name + "' has genus " +
                           std::to_string(it->second.genus()) + ", expected " +
                           std::to_string(genus),
                       f.pos);
    const SurfaceEndo *base = &it->second;
    long n = f.exponent;
    if (n < 0) {
      auto inv = lib.find(f.name + "^-1");
      if (inv == lib.end())
        throw ParseError("no inverse available for '" + f.name + "'", f.pos);
      base = &inv->second;
      n = -n;
    }
    for (long k = 0; k < n; ++k) h = h.compose(*base);
  }
  return h;
}

std::map<std::string, SurfaceEndo> load_user_endos(const std::string &path,
                                                   int genus) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open endo file: " + path);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  if (content.find_first_not_of(" \t\r\n") == std::string::npos) return {};
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(content);
  } catch (const nlohmann::json::exception &e) {
    throw AlgebraError("malformed endo file: " + std::string(e.what()));
  }
  if (!j.is_array()) throw AlgebraError("endo file must hold an array of entries");
  std::map<std::string, SurfaceEndo> out;
  for (const auto &entry : j) {
    std::string name = entry.at("name").get<std::string>();
    int g = entry.at("genus").get<int>();
    if (g != genus)
      throw AlgebraError("entry '" + name + "' has genus " + std::to_string(g) +
                         ", expected " + std::to_string(genus));
    std::map<Generator, FreeWord> im;
    const auto &images = entry.at("images");
    for (int i = 1; i <= genus; ++i) {
      for (auto kind : {Generator::Alpha, Generator::Beta}) {
        std::string key = (kind == Generator::Alpha ? "a" : "b") + std::to_string(i);
        if (!images.contains(key))
          throw AlgebraError("entry '" + name + "' is missing image " + key);
        im.emplace(Generator{kind, i},
                   FreeWord::parse(genus, images.at(key).get<std::string>()));
      }
    }
    SurfaceEndo h(genus, std::move(im), name);
    if (!h.validates())
      throw AlgebraError("entry '" + name + "' does not fix the boundary; defect " +
                         h.boundary_defect().str());
    out.emplace(std::move(name), std::move(h));
  }
  return out;
}

nlohmann::json to_json(const LieElement &x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &[w, c] : x.terms())
    out.push_back({{"word", word_str(x.alphabet(), w)}, {"coeff", rat_json(c)}});
  return out;
}

nlohmann::json to_json(const DerivationElement &d) {
  return {{"genus", d.genus},
          {"level", d.level},
          {"a_part", part_json("a", d.a_part)},
          {"b_part", part_json("b", d.b_part)},
          {"symplectic", d.symplectic}};
}

nlohmann::json to_json(const ClassicalDerivation &d) {
  nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
  for (const auto &[g, v] : d.parts) {
    nlohmann::json item = {
        {"gen", (g.kind == Generator::Alpha ? "a" : "b") + std::to_string(g.index)},
        {"lie", to_json(v)}};
    (g.kind == Generator::Alpha ? a : b).push_back(std::move(item));
  }
  return {{"genus", d.genus},
          {"level", d.level},
          {"a_part", std::move(a)},
          {"b_part", std::move(b)},
          {"symplectic", xi_classical(d).is_zero()}};
}

nlohmann::json to_json(const LevineDerivation &d) {
  return {{"genus", d.genus},
          {"level", d.level},
          {"a_part", nlohmann::json::array()},
          {"b_part", part_json("b", d.parts)},
          {"symplectic", xi_levine(d).is_zero()}};
}

nlohmann::json to_json(const GElement &x) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto &row : x.R) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto &v : row) r.push_back(v.str());
    rows.push_back(std::move(r));
  }
  return {{"genus", x.genus}, {"R", std::move(rows)}, {"mu", part_json("a", x.mu)}};
}

nlohmann::json to_json(const DiagramElement &e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto &[c, t] : e.terms()) {
    const WeightedAlphabet &a = t.alphabet();
    TWord w; // rebuild the Lyndon word from the shape's leaves, left to right
    std::vector<int> legs = t.leg_colors();
    for (size_t i = 1; i < legs.size(); ++i) w.push_back(legs[i]);
    terms.push_back({{"coeff", rat_json(c)},
                     {"root_color", a.symbol(t.root_color())},
                     {"lyndon_word", word_str(a, w)}});
  }
  return {{"genus", e.genus()}, {"adeg", e.adeg()}, {"terms", std::move(terms)}};
}

LieElement lie_from_json(const nlohmann::json &j, const WeightedAlphabet &a) {
  LieElement x(a);
  for (const auto &term : j)
    x.add_term(word_from_str(a, term.at("word").get<std::string>()),
               rat_from_json(term.at("coeff")));
  return x;
}

DerivationElement derivation_from_json(const nlohmann::json &j) {
  int genus = j.at("genus").get<int>();
  auto ba = WeightedAlphabet::ba(genus);
  DerivationElement d{genus, j.at("level").get<int>(), {}, {},
                      j.at("symplectic").get<bool>()};
  auto read = [&](const nlohmann::json &part, std::map<int, LieElement> &dst,
                  char prefix) {
    for (const auto &item : part) {
      std::string gen = item.at("gen").get<std::string>();
      if (gen.empty() || gen[0] != prefix)
        throw AlgebraError("unexpected generator '" + gen + "' in part");
      dst.emplace(std::stoi(gen.substr(1)), lie_from_json(item.at("lie"), ba));
    }
  };
  read(j.at("a_part"), d.a_part, 'a');
  read(j.at("b_part"), d.b_part, 'b');
  return d;
}

std::string tau_text(const DerivationElement &d) {
  if (d.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[i, v] : d.a_part)
    text_terms(out, first, "a" + std::to_string(i), v);
  for (const auto &[i, v] : d.b_part)
    text_terms(out, first, "b" + std::to_string(i), v);
  return out.str();
}

std::string tau_text(const ClassicalDerivation &d) {
  if (d.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[g, v] : d.parts)
    text_terms(out, first,
               (g.kind == Generator::Alpha ? "a" : "b") + std::to_string(g.index),
               v);
  return out.str();
}

std::string tau_text(const LevineDerivation &d) {
  if (d.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[i, v] : d.parts)
    text_terms(out, first, "b" + std::to_string(i), v);
  return out.str();
}

} // namespace torelli
