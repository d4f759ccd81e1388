#include "expertise/state_set.h"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace expertise {

namespace {

std::size_t WordCount(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

StateSet::StateSet(std::size_t universe)
    : universe_(universe), words_(WordCount(universe), 0) {}

StateSet StateSet::Full(std::size_t universe) {
  StateSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.ClearPadding();
  return s;
}

StateSet StateSet::Singleton(std::size_t universe, std::size_t element) {
  if (element >= universe) throw std::out_of_range("state index out of range");
  StateSet s(universe);
  s.insert(element);
  return s;
}

StateSet StateSet::FromMask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("FromMask needs universe <= 64");
  StateSet s(universe);
  if (universe > 0) s.words_[0] = mask;
  s.ClearPadding();
  return s;
}

StateSet StateSet::FromElements(std::size_t universe,
                                const std::vector<std::size_t>& elements) {
  StateSet s(universe);
  for (std::size_t e : elements) {
    if (e >= universe) throw std::out_of_range("state index out of range");
    s.insert(e);
  }
  return s;
}

std::size_t StateSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool StateSet::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool StateSet::full() const { return count() == universe_; }

bool StateSet::IsSubsetOf(const StateSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool StateSet::Intersects(const StateSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

StateSet StateSet::Complement() const {
  StateSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.ClearPadding();
  return s;
}

StateSet& StateSet::operator&=(const StateSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

StateSet& StateSet::operator|=(const StateSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

StateSet& StateSet::operator-=(const StateSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::optional<std::size_t> StateSet::First() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0)
      return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return std::nullopt;
}

std::vector<std::size_t> StateSet::Elements() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  ForEach([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t StateSet::Hash() const {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::strong_ordering operator<=>(const StateSet& a, const StateSet& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;)
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

void StateSet::ClearPadding() {
  const std::size_t rem = universe_ % 64;
  if (rem != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << rem) - 1;
}

}  // namespace expertise
