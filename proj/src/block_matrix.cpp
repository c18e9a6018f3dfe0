#include "ampalg/block_matrix.hpp"

#include <stdexcept>

namespace ampalg {

std::string render_shape(const BlockShape& shape, const RingDescriptor& r) {
  std::string out;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) out += " x ";
    out += "M_" + std::to_string(shape[i].size) + "(" + group_ring_name(shape[i].isotropy, r) + ")";
  }
  return out;
}

BlockMatrix BlockMatrix::zero(const BlockShape& shape, const RingDescriptor& r) {
  std::vector<Block> blocks;
  blocks.reserve(shape.size());
  for (const auto& o : shape) {
    if (o.size == 0) throw std::invalid_argument("block of size 0");
    Block b{o.isotropy, o.size, {}};
    b.entries.assign(o.size * o.size, GroupAlgebraElement::zero(o.isotropy, r));
    blocks.push_back(std::move(b));
  }
  return BlockMatrix(r, std::move(blocks));
}

BlockMatrix BlockMatrix::identity(const BlockShape& shape, const RingDescriptor& r) {
  BlockMatrix m = zero(shape, r);
  for (auto& b : m.blocks_) {
    for (std::size_t i = 0; i < b.size; ++i) b.at(i, i) = GroupAlgebraElement::one(b.group, r);
  }
  return m;
}

BlockMatrix BlockMatrix::unit(const BlockShape& shape, const RingElement& coeff, std::size_t block, std::size_t row,
                              std::size_t col, std::int64_t key) {
  BlockMatrix m = zero(shape, coeff.descriptor());
  m.add_term(block, row, col, key, coeff);
  return m;
}

BlockShape BlockMatrix::shape() const {
  BlockShape out;
  for (const auto& b : blocks_) out.push_back({b.size, b.group});
  return out;
}

void BlockMatrix::add_term(std::size_t block, std::size_t row, std::size_t col, std::int64_t key, const RingElement& coeff) {
  if (block >= blocks_.size() || row >= blocks_[block].size || col >= blocks_[block].size) {
    throw std::out_of_range("block matrix index out of range");
  }
  GroupAlgebraElement& e = blocks_[block].at(row, col);
  e += GroupAlgebraElement::term(e.group(), coeff, key);
}

bool BlockMatrix::is_zero() const {
  for (const auto& b : blocks_) {
    for (const auto& e : b.entries) {
      if (!e.is_zero()) return false;
    }
  }
  return true;
}

std::size_t BlockMatrix::support_size() const {
  std::size_t n = 0;
  for (const auto& b : blocks_) {
    for (const auto& e : b.entries) n += e.terms().size();
  }
  return n;
}

void BlockMatrix::check_same_structure(const BlockMatrix& other) const {
  if (ring_ != other.ring_) throw std::invalid_argument("block matrices over different rings");
  if (blocks_.size() != other.blocks_.size()) throw std::invalid_argument("block-structure mismatch: block count");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].size != other.blocks_[i].size || blocks_[i].group != other.blocks_[i].group) {
      throw std::invalid_argument("block-structure mismatch at block " + std::to_string(i));
    }
  }
}

BlockMatrix operator+(const BlockMatrix& a, const BlockMatrix& b) {
  a.check_same_structure(b);
  BlockMatrix out = a;
  for (std::size_t i = 0; i < out.blocks_.size(); ++i) {
    for (std::size_t k = 0; k < out.blocks_[i].entries.size(); ++k) out.blocks_[i].entries[k] += b.blocks_[i].entries[k];
  }
  return out;
}

BlockMatrix operator-(const BlockMatrix& a, const BlockMatrix& b) {
  a.check_same_structure(b);
  BlockMatrix out = a;
  for (std::size_t i = 0; i < out.blocks_.size(); ++i) {
    for (std::size_t k = 0; k < out.blocks_[i].entries.size(); ++k) out.blocks_[i].entries[k] += -b.blocks_[i].entries[k];
  }
  return out;
}

BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
  a.check_same_structure(b);
  BlockMatrix out = BlockMatrix::zero(a.shape(), a.ring_);
  for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
    const Block& x = a.blocks_[i];
    const Block& y = b.blocks_[i];
    Block& z = out.blocks_[i];
    std::size_t n = x.size;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto& xrk = x.at(r, k);
        if (xrk.is_zero()) continue;
        for (std::size_t c = 0; c < n; ++c) {
          const auto& ykc = y.at(k, c);
          if (ykc.is_zero()) continue;
          z.at(r, c) += xrk * ykc;
        }
      }
    }
  }
  return out;
}

bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.ring_ != b.ring_ || a.blocks_.size() != b.blocks_.size()) return false;
  for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
    if (a.blocks_[i].size != b.blocks_[i].size || a.blocks_[i].group != b.blocks_[i].group) return false;
    if (a.blocks_[i].entries != b.blocks_[i].entries) return false;
  }
  return true;
}

std::string BlockMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& b = blocks_[i];
    for (std::size_t r = 0; r < b.size; ++r) {
      for (std::size_t c = 0; c < b.size; ++c) {
        if (b.at(r, c).is_zero()) continue;
        if (!out.empty()) out += "; ";
        out += "[" + std::to_string(i) + "](" + std::to_string(r) + "," + std::to_string(c) + "): " + b.at(r, c).to_string();
      }
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace ampalg
