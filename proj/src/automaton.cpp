#include "synclab/automaton.hpp"

#include <set>

#include "synclab/errors.hpp"

namespace synclab {

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out += ' ';
    out += letters[i];
  }
  return out;
}

Automaton::Automaton(std::size_t n, std::vector<Generator> generators)
    : n_(n), generators_(std::move(generators)) {
  if (n_ == 0) throw DomainError("an automaton needs at least one state");
  std::set<std::string> names;
  for (const auto& g : generators_) {
    if (g.map.degree() != n_) {
      throw DimensionError("generator " + g.name + " acts on " + std::to_string(g.map.degree()) +
                           " states, expected " + std::to_string(n_));
    }
    if (g.name.empty()) throw DomainError("generator names must be nonempty");
    if (!names.insert(g.name).second) throw DomainError("duplicate generator name " + g.name);
  }
}

const Transformation& Automaton::map_of(const std::string& name) const {
  for (const auto& g : generators_)
    if (g.name == name) return g.map;
  throw DomainError("unknown generator " + name);
}

Transformation Automaton::evaluate(const Word& word) const {
  auto result = Transformation::identity(n_);
  for (const auto& letter : word.letters) result = compose(result, map_of(letter));
  return result;
}

Word Automaton::word_from_indices(const std::vector<std::size_t>& letters) const {
  Word w;
  w.letters.reserve(letters.size());
  for (auto i : letters) w.letters.push_back(generators_.at(i).name);
  return w;
}

Automaton Automaton::with_generator(Generator g) const {
  auto gens = generators_;
  gens.push_back(std::move(g));
  return Automaton(n_, std::move(gens));
}

}  // namespace synclab
