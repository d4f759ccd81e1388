// Fixed-universe bit vectors over the canonical state order of a model.

#ifndef EXPERTISE_STATE_SET_H_
#define EXPERTISE_STATE_SET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace expertise {

// A subset of {0, ..., universe-1}. Bit i stands for the i-th state of the
// owning state space. All binary operations require equal universes.
//
// Sets are totally ordered by their value as a binary number (bit i has
// weight 2^i), which is the canonical order used for set families.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe);

  static StateSet Full(std::size_t universe);
  static StateSet Singleton(std::size_t universe, std::size_t element);
  // Low `universe` bits of `mask`; universe must be at most 64.
  static StateSet FromMask(std::size_t universe, std::uint64_t mask);
  static StateSet FromElements(std::size_t universe,
                               const std::vector<std::size_t>& elements);

  std::size_t universe() const { return universe_; }

  bool contains(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1u;
  }
  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  std::size_t count() const;
  bool empty() const;
  bool full() const;

  bool IsSubsetOf(const StateSet& other) const;
  bool Intersects(const StateSet& other) const;

  StateSet Complement() const;

  StateSet& operator&=(const StateSet& other);
  StateSet& operator|=(const StateSet& other);
  // Set difference.
  StateSet& operator-=(const StateSet& other);

  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

  std::optional<std::size_t> First() const;
  std::vector<std::size_t> Elements() const;

  // Low 64 bits; exact when universe <= 64.
  std::uint64_t LowWord() const { return words_.empty() ? 0 : words_[0]; }

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(w * 64 + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

  std::size_t Hash() const;

  friend bool operator==(const StateSet& a, const StateSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const StateSet& a,
                                          const StateSet& b);

 private:
  void ClearPadding();

  std::size_t universe_ = 0;
  boost::container::small_vector<std::uint64_t, 1> words_;
};

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const { return s.Hash(); }
};

}  // namespace expertise

#endif  // EXPERTISE_STATE_SET_H_
