#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "synclab/transformation.hpp"

namespace synclab {

struct Generator {
  std::string name;
  Transformation map;

  bool operator==(const Generator&) const = default;
};

/// A sequence of generator names, read left to right: the first letter acts
/// first.
struct Word {
  std::vector<std::string> letters;

  std::size_t length() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  /// Letters separated by spaces; "" for the empty word.
  std::string to_string() const;

  bool operator==(const Word&) const = default;
};

/// States {1..n} with an ordered list of named generator maps. The order
/// fixes every tie-break in the searches below.
class Automaton {
 public:
  /// Throws DimensionError for a generator of the wrong degree, DomainError
  /// for n == 0 or a duplicate name.
  Automaton(std::size_t n, std::vector<Generator> generators);

  std::size_t states() const noexcept { return n_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  std::size_t alphabet_size() const noexcept { return generators_.size(); }

  /// Throws DomainError for an unknown name.
  const Transformation& map_of(const std::string& name) const;
  /// The map induced by `word`; identity for the empty word.
  Transformation evaluate(const Word& word) const;
  /// Word from generator indices.
  Word word_from_indices(const std::vector<std::size_t>& letters) const;

  /// A copy with one more generator appended.
  Automaton with_generator(Generator g) const;

  bool operator==(const Automaton&) const = default;

 private:
  std::size_t n_;
  std::vector<Generator> generators_;
};

}  // namespace synclab
