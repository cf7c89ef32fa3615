#ifndef LGS_WORD_HPP
#define LGS_WORD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgs/errors.hpp"

namespace lgs {

// Symbols are indices into an Alphabet; words are index sequences.
using Symbol = int;
using Word = std::vector<Symbol>;

// Ordered finite alphabet of named symbols. The declared order is total
// and used for every serialized word set and matrix ordering.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Symbol s) const;
  std::optional<Symbol> index(const std::string& name) const;
  const std::vector<std::string>& names() const { return names_; }

  // Words print as concatenated symbol names; a '.' separator is used
  // when any symbol name is longer than one character.
  std::string format(const Word& w) const;
  Word parse(const std::string& text) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Symbol> index_;
  bool dotted_;
};

Word concat(const Word& a, const Word& b);
bool is_prefix(const Word& p, const Word& w);

// Shortlex order: by length first, then lexicographically by symbol index.
bool shortlex_less(const Word& a, const Word& b);

}  // namespace lgs

#endif
