#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ampalg/group.hpp"
#include "ampalg/ring.hpp"

namespace ampalg {

/// Block structure of a product of matrix algebras prod_i M_{n_i}(R G_i).
using BlockShape = std::vector<OrbitSummary>;

/// `M_2(Q) x M_1(Q[C_3]) x M_1(Laurent(Z))`.
std::string render_shape(const BlockShape& shape, const RingDescriptor& r);

/// One n x n factor with entries in the group algebra R G.
struct Block {
  IsotropyDescriptor group;
  std::size_t size = 0;
  /// Row-major, size * size entries.
  std::vector<GroupAlgebraElement> entries;

  const GroupAlgebraElement& at(std::size_t row, std::size_t col) const { return entries[row * size + col]; }
  GroupAlgebraElement& at(std::size_t row, std::size_t col) { return entries[row * size + col]; }
};

/// An element of prod_i M_{n_i}(R G_i).
class BlockMatrix {
 public:
  static BlockMatrix zero(const BlockShape& shape, const RingDescriptor& r);
  static BlockMatrix identity(const BlockShape& shape, const RingDescriptor& r);
  /// coeff * key * E_{row,col} in block `block`, zero elsewhere.
  static BlockMatrix unit(const BlockShape& shape, const RingElement& coeff, std::size_t block, std::size_t row,
                          std::size_t col, std::int64_t key);

  const RingDescriptor& ring() const { return ring_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  BlockShape shape() const;

  const GroupAlgebraElement& entry(std::size_t block, std::size_t row, std::size_t col) const {
    return blocks_[block].at(row, col);
  }
  /// Adds coeff * key at (block, row, col).
  void add_term(std::size_t block, std::size_t row, std::size_t col, std::int64_t key, const RingElement& coeff);

  bool is_zero() const;
  /// Number of nonzero (block, row, col, group key) terms.
  std::size_t support_size() const;

  friend BlockMatrix operator+(const BlockMatrix& a, const BlockMatrix& b);
  friend BlockMatrix operator-(const BlockMatrix& a, const BlockMatrix& b);
  /// Blockwise matrix product with group-algebra entries.
  friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b);
  BlockMatrix& operator+=(const BlockMatrix& b) { return *this = *this + b; }

  friend bool operator==(const BlockMatrix& a, const BlockMatrix& b);
  friend bool operator!=(const BlockMatrix& a, const BlockMatrix& b) { return !(a == b); }

  /// Sparse listing of nonzero entries, e.g. `[1](0,1): x^-1`.
  std::string to_string() const;

 private:
  BlockMatrix(RingDescriptor r, std::vector<Block> blocks) : ring_(std::move(r)), blocks_(std::move(blocks)) {}
  void check_same_structure(const BlockMatrix& other) const;

  RingDescriptor ring_;
  std::vector<Block> blocks_;
};

}  // namespace ampalg
