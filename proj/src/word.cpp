#include "torelli/word.hpp"

#include <cctype>
#include <sstream>

namespace torelli {

namespace {

void check_letter(int genus, const Letter &l) {
  if (l.gen.index < 1 || l.gen.index > genus)
    throw WordError("generator index " + std::to_string(l.gen.index) +
                    " out of range for genus " + std::to_string(genus));
  if (l.exponent != 1 && l.exponent != -1)
    throw WordError("letter exponent must be +1 or -1");
}

} // namespace

FreeWord::FreeWord(int genus, std::vector<Letter> raw) : FreeWord(genus) {
  letters_.reserve(raw.size());
  for (const Letter &l : raw) {
    check_letter(genus, l);
    if (!letters_.empty() && letters_.back().gen == l.gen &&
        letters_.back().exponent == -l.exponent) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

FreeWord FreeWord::generator(int genus, Generator g, int exponent) {
  std::vector<Letter> ls;
  int e = exponent >= 0 ? 1 : -1;
  for (int k = 0; k < (exponent >= 0 ? exponent : -exponent); ++k)
    ls.push_back({g, e});
  return FreeWord(genus, std::move(ls));
}

FreeWord FreeWord::operator*(const FreeWord &rhs) const {
  if (genus_ != rhs.genus_) throw WordError("genus mismatch in multiply");
  std::vector<Letter> raw = letters_;
  raw.insert(raw.end(), rhs.letters_.begin(), rhs.letters_.end());
  return FreeWord(genus_, std::move(raw));
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> raw;
  raw.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    raw.push_back({it->gen, -it->exponent});
  FreeWord w(genus_);
  w.letters_ = std::move(raw); // inverse of a reduced word is reduced
  return w;
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  // run-length renders repeated letters as a single token with exponent
  for (size_t i = 0; i < letters_.size();) {
    size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    int run = static_cast<int>(j - i) * letters_[i].exponent;
    if (i) os << ' ';
    os << (letters_[i].gen.kind == Generator::Alpha ? 'a' : 'b')
       << letters_[i].gen.index;
    if (run != 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

FreeWord FreeWord::parse(int genus, const std::string &text) {
  std::vector<Letter> raw;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    size_t p = 0;
    if (tok[p] != 'a' && tok[p] != 'b')
      throw WordError("bad generator token '" + tok + "'");
    Generator::Kind kind = tok[p] == 'a' ? Generator::Alpha : Generator::Beta;
    ++p;
    size_t q = p;
    while (q < tok.size() && std::isdigit(static_cast<unsigned char>(tok[q]))) ++q;
    if (q == p) throw WordError("missing index in token '" + tok + "'");
    int index = std::stoi(tok.substr(p, q - p));
    int exponent = 1;
    if (q < tok.size()) {
      if (tok[q] != '^') throw WordError("bad token '" + tok + "'");
      try {
        exponent = std::stoi(tok.substr(q + 1));
      } catch (const std::exception &) {
        throw WordError("bad exponent in token '" + tok + "'");
      }
    }
    int sign = exponent >= 0 ? 1 : -1;
    for (int k = 0; k < sign * exponent; ++k)
      raw.push_back({Generator{kind, index}, sign});
  }
  return FreeWord(genus, std::move(raw));
}

FreeWord commutator(const FreeWord &u, const FreeWord &v) {
  return u * v * u.inverse() * v.inverse();
}

FreeWord boundary_word(int genus) {
  if (genus < 1) throw WordError("boundary word needs genus >= 1");
  FreeWord w(genus);
  for (int i = 1; i <= genus; ++i) {
    FreeWord ai = FreeWord::generator(genus, {Generator::Alpha, i});
    FreeWord bi = FreeWord::generator(genus, {Generator::Beta, i});
    w = w * commutator(bi.inverse(), ai);
  }
  return w;
}

} // namespace torelli
