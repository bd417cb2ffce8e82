#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace pmds {

/// Binary min-heap over item ids 0..capacity-1 with arbitrary key updates.
///
/// Items are ordered by (key, id), so equal keys pop the smallest id first.
class IndexedMinHeap {
 public:
  using Id = std::uint32_t;

  explicit IndexedMinHeap(std::size_t capacity)
      : keys_(capacity, 0.0), slot_(capacity, npos) {
    heap_.reserve(capacity);
  }

  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }
  bool contains(Id id) const { return slot_[id] != npos; }
  double key(Id id) const { return keys_[id]; }
  /// Key per id; stale for ids no longer in the heap.
  std::span<const double> keys() const noexcept { return keys_; }
  Id top() const { return heap_.front(); }

  void push(Id id, double key) {
    if (contains(id)) throw std::logic_error("IndexedMinHeap::push: id already present");
    keys_[id] = key;
    slot_[id] = heap_.size();
    heap_.push_back(id);
    sift_up(heap_.size() - 1);
  }

  /// Sets a new key for an item already in the heap, moving it either way.
  void update(Id id, double key) {
    const std::size_t s = slot_[id];
    if (s == npos) throw std::logic_error("IndexedMinHeap::update: id not present");
    const double old = keys_[id];
    keys_[id] = key;
    if (key < old)
      sift_up(s);
    else if (old < key)
      sift_down(s);
  }

  Id pop() {
    const Id id = heap_.front();
    erase_slot(0);
    return id;
  }

  void erase(Id id) {
    if (!contains(id)) throw std::logic_error("IndexedMinHeap::erase: id not present");
    erase_slot(slot_[id]);
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  bool less(Id a, Id b) const {
    return keys_[a] < keys_[b] || (keys_[a] == keys_[b] && a < b);
  }

  void place(std::size_t s, Id id) {
    heap_[s] = id;
    slot_[id] = s;
  }

  void sift_up(std::size_t s) {
    const Id id = heap_[s];
    while (s > 0) {
      const std::size_t parent = (s - 1) / 2;
      if (!less(id, heap_[parent])) break;
      place(s, heap_[parent]);
      s = parent;
    }
    place(s, id);
  }

  void sift_down(std::size_t s) {
    const Id id = heap_[s];
    const std::size_t n = heap_.size();
    for (;;) {
      std::size_t child = 2 * s + 1;
      if (child >= n) break;
      if (child + 1 < n && less(heap_[child + 1], heap_[child])) ++child;
      if (!less(heap_[child], id)) break;
      place(s, heap_[child]);
      s = child;
    }
    place(s, id);
  }

  void erase_slot(std::size_t s) {
    const Id gone = heap_[s];
    slot_[gone] = npos;
    const Id last = heap_.back();
    heap_.pop_back();
    if (s == heap_.size()) return;
    place(s, last);
    sift_up(s);
    sift_down(slot_[last]);
  }

  std::vector<double> keys_;
  std::vector<std::size_t> slot_;
  std::vector<Id> heap_;
};

}  // namespace pmds
