#include "fingpd/hom_search.hpp"

#include <algorithm>

#include "fingpd/error.hpp"
#include "fingpd/group.hpp"

namespace fingpd {

namespace {

class Searcher {
 public:
  Searcher(const HomSearch& s, std::uint64_t cap)
      : s_(s), cap_(cap), f_(s.source_size, kNone) {}

  std::vector<std::vector<std::uint32_t>> run() {
    search(0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  bool allowed(std::uint32_t a, std::uint32_t x) const {
    auto const& c = s_.candidates[a];
    return std::binary_search(c.begin(), c.end(), x);
  }

  bool assign(std::uint32_t a, std::uint32_t x) {
    if (f_[a] != kNone) {
      return f_[a] == x;
    }
    if (!allowed(a, x)) {
      return false;
    }
    f_[a] = x;
    trail_.push_back(a);
    queue_.push_back(a);
    return true;
  }

  bool check_product(std::uint32_t a, std::uint32_t b) {
    auto const c = s_.source_op(a, b);
    if (c == kNone) {
      return true;
    }
    auto const y = s_.target_op(f_[a], f_[b]);
    return y != kNone && assign(c, y);
  }

  bool propagate() {
    while (!queue_.empty()) {
      auto const a = queue_.back();
      queue_.pop_back();
      for (auto b : s_.right_partners(a)) {
        if (f_[b] != kNone && !check_product(a, b)) {
          return false;
        }
      }
      for (auto b : s_.left_partners(a)) {
        if (f_[b] != kNone && !check_product(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      f_[trail_.back()] = kNone;
      trail_.pop_back();
    }
    queue_.clear();
  }

  void search(std::uint32_t from) {
    while (from < f_.size() && f_[from] != kNone) {
      ++from;
    }
    if (from == f_.size()) {
      out_.push_back(f_);
      return;
    }
    for (auto x : s_.candidates[from]) {
      if (++nodes_ > cap_) {
        throw CapExceeded(s_.what, nodes_);
      }
      auto const mark = trail_.size();
      if (assign(from, x) && propagate()) {
        search(from + 1);
      }
      undo(mark);
    }
  }

  const HomSearch&                        s_;
  std::uint64_t                           cap_;
  std::uint64_t                           nodes_ = 0;
  std::vector<std::uint32_t>              f_;
  std::vector<std::uint32_t>              trail_;
  std::vector<std::uint32_t>              queue_;
  std::vector<std::vector<std::uint32_t>> out_;
};

}  // namespace

std::vector<std::vector<std::uint32_t>> enumerate_homs(const HomSearch& s,
                                                       std::uint64_t    cap) {
  return Searcher(s, cap).run();
}

}  // namespace fingpd
