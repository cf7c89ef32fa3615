#include "lgs/word.hpp"

#include <algorithm>
#include <sstream>

namespace lgs {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InputError("alphabet must be nonempty");
  dotted_ = false;
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    const auto& n = names_[i];
    if (n.empty()) throw InputError("empty symbol name");
    if (n.find('.') != std::string::npos)
      throw InputError("symbol names may not contain '.'");
    if (!index_.emplace(n, i).second)
      throw InputError("duplicate symbol name: " + n);
    if (n.size() > 1) dotted_ = true;
  }
}

const std::string& Alphabet::name(Symbol s) const {
  if (s < 0 || s >= size()) throw InputError("symbol index out of range");
  return names_[static_cast<size_t>(s)];
}

std::optional<Symbol> Alphabet::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (dotted_ && i > 0) out += '.';
    out += name(w[i]);
  }
  return out;
}

Word Alphabet::parse(const std::string& text) const {
  Word w;
  if (text.empty()) return w;
  if (dotted_ || text.find('.') != std::string::npos) {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '.')) {
      auto s = index(part);
      if (!s) throw InputError("unknown symbol: " + part);
      w.push_back(*s);
    }
  } else {
    for (char c : text) {
      auto s = index(std::string(1, c));
      if (!s) throw InputError("unknown symbol: " + std::string(1, c));
      w.push_back(*s);
    }
  }
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool is_prefix(const Word& p, const Word& w) {
  if (p.size() > w.size()) return false;
  return std::equal(p.begin(), p.end(), w.begin());
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace lgs
