#pragma once

// Fixed-width key interning: keys are runs of `width` uint32 values stored
// contiguously; ids are dense in insertion order.

#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

namespace itermag {

class FlatInterner {
 public:
  static constexpr std::uint32_t kMissing = 0xffffffffu;

  explicit FlatInterner(std::size_t width = 1) : width_(width) { rehash(64); }

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return count_; }

  std::span<std::uint32_t const> key(std::uint32_t id) const {
    return {data_.data() + static_cast<std::size_t>(id) * width_, width_};
  }

  std::uint32_t find(std::span<std::uint32_t const> k) const {
    std::size_t slot = hash(k) & mask_;
    for (;;) {
      std::uint32_t id = table_[slot];
      if (id == kMissing) {
        return kMissing;
      }
      if (equal(id, k)) {
        return id;
      }
      slot = (slot + 1) & mask_;
    }
  }

  // Returns the id of k, inserting it if new.
  std::uint32_t intern(std::span<std::uint32_t const> k) {
    if ((count_ + 1) * 2 > table_.size()) {
      rehash(table_.size() * 2);
    }
    std::size_t slot = hash(k) & mask_;
    for (;;) {
      std::uint32_t id = table_[slot];
      if (id == kMissing) {
        break;
      }
      if (equal(id, k)) {
        return id;
      }
      slot = (slot + 1) & mask_;
    }
    auto const id = static_cast<std::uint32_t>(count_++);
    data_.insert(data_.end(), k.begin(), k.end());
    table_[slot] = id;
    return id;
  }

 private:
  static std::uint64_t mix(std::uint64_t h) {
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    h *= 0xc4ceb9fe1a85ec53ULL;
    h ^= h >> 33;
    return h;
  }
  static std::size_t hash(std::span<std::uint32_t const> k) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint32_t v : k) {
      h = mix(h ^ v) + 0x9e3779b97f4a7c15ULL;
    }
    return static_cast<std::size_t>(h);
  }
  bool equal(std::uint32_t id, std::span<std::uint32_t const> k) const {
    return width_ == 0
           || std::memcmp(data_.data() + static_cast<std::size_t>(id) * width_, k.data(),
                          width_ * sizeof(std::uint32_t))
                  == 0;
  }
  void rehash(std::size_t n) {
    table_.assign(n, kMissing);
    mask_ = n - 1;
    for (std::size_t id = 0; id < count_; ++id) {
      std::size_t slot = hash(key(static_cast<std::uint32_t>(id))) & mask_;
      while (table_[slot] != kMissing) {
        slot = (slot + 1) & mask_;
      }
      table_[slot] = static_cast<std::uint32_t>(id);
    }
  }

  std::size_t                width_;
  std::size_t                count_ = 0;
  std::size_t                mask_  = 0;
  std::vector<std::uint32_t> data_;
  std::vector<std::uint32_t> table_;
};

}  // namespace itermag
