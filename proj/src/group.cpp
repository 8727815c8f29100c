#include "sylrank/group.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "sylrank/error.hpp"

namespace sylrank {

FiniteGroup::FiniteGroup(Table cayley, std::string name)
    : cayley_(std::move(cayley)), name_(std::move(name)) {
  const std::size_t n = cayley_.size();
  if (n == 0) throw Error("group must have at least one element");
  for (const auto& row : cayley_) {
    if (row.size() != n) throw Error("Cayley table is not square");
    for (std::size_t x : row) {
      if (x >= n) throw Error("Cayley table entry out of range");
    }
  }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool is_identity = true;
    for (std::size_t a = 0; a < n && is_identity; ++a) {
      is_identity = cayley_[e][a] == a && cayley_[a][e] == a;
    }
    if (is_identity) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error("Cayley table has no identity element");

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (cayley_[cayley_[a][b]][c] != cayley_[a][cayley_[b][c]]) {
          throw Error("Cayley table is not associative");
        }
      }
    }
  }

  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (cayley_[a][b] == identity_ && cayley_[b][a] == identity_) {
        if (inverse_[a] != n) throw Error("Cayley table has non-unique inverses");
        inverse_[a] = b;
      }
    }
    if (inverse_[a] == n) throw Error("Cayley table element has no inverse");
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw Error("cyclic group order must be positive");
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(t), "C" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  // (a*b)(x) = a(b(x))
  Table t(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::array<std::size_t, 3> c{};
      for (std::size_t x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroup(std::move(t), "S3");
}

FiniteGroup FiniteGroup::from_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open Cayley file: " + path);
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> std::string {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
    }
    throw ParseError("unexpected end of Cayley file", line_no + 1, 1);
  };

  std::istringstream head(next_line());
  long long order = 0;
  if (!(head >> order) || order <= 0) throw ParseError("expected positive group order", line_no, 1);

  Table t(static_cast<std::size_t>(order));
  for (auto& row : t) {
    std::istringstream ls(next_line());
    long long x = 0;
    while (ls >> x) {
      if (x < 0) throw ParseError("negative element index", line_no, 1);
      row.push_back(static_cast<std::size_t>(x));
    }
    if (row.size() != t.size()) throw ParseError("Cayley row has wrong length", line_no, 1);
  }
  return FiniteGroup(std::move(t), "cayley:" + path);
}

}  // namespace sylrank
