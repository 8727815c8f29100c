#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sylrank {

/// A finite group given by its Cayley table over element indices 0..order-1.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  /// Validates the group law (closure, associativity, identity, inverses).
  FiniteGroup(Table cayley, std::string name);

  /// C_n with element i = s^i, identity 0.
  static FiniteGroup cyclic(std::size_t n);
  /// Permutations of {0,1,2} in lexicographic order; identity 0.
  static FiniteGroup symmetric3();
  /// Reads "order" on the first line then `order` rows of indices.
  static FiniteGroup from_cayley_file(const std::string& path);

  std::size_t order() const { return cayley_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return cayley_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const Table& cayley() const { return cayley_; }
  const std::string& name() const { return name_; }

  /// Structural equality of the multiplication tables.
  bool operator==(const FiniteGroup& other) const { return cayley_ == other.cayley_; }

 private:
  Table cayley_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::string name_;
};

}  // namespace sylrank
