#include <algorithm>
#include <map>
#include <tuple>

#include "precubical/complex.hpp"

namespace precubical {

namespace {

// How often a cell occurs as d_i^k of cells one degree up, per (i, k).
using Signature = std::map<std::pair<int, int>, int>;

std::map<CellRef, Signature> signatures(const Complex& p) {
  std::map<CellRef, Signature> out;
  for (const auto& c : p.cells()) out[c];
  for (int d = 1; d < p.num_levels(); ++d) {
    for (const auto& [_, f] : p.level(d)) {
      for (int i = 1; i <= d; ++i) {
        for (int k = 0; k <= 1; ++k) ++out[CellRef{d - 1, f[i - 1][k]}][{i, k}];
      }
    }
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Complex& p, const Complex& q) : p_(p), q_(q), sig_p_(signatures(p)), sig_q_(signatures(q)) {
    order_ = p.cells();
    std::stable_sort(order_.begin(), order_.end(), [](const CellRef& a, const CellRef& b) {
      if (a.degree != b.degree) return a.degree > b.degree;
      return a.id < b.id;
    });
  }

  std::optional<CellMap> run() {
    if (search(0)) return forward_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t pos) {
    while (pos < order_.size() && forward_.contains(order_[pos])) ++pos;
    if (pos == order_.size()) return true;
    const CellRef& z = order_[pos];
    const auto& want = sig_p_.at(z);
    for (const auto& [id, _] : q_.level(z.degree)) {
      CellRef target{z.degree, id};
      if (backward_.contains(target) || sig_q_.at(target) != want) continue;
      std::size_t mark = trail_.size();
      if (assign(z, target) && search(pos + 1)) return true;
      undo(mark);
    }
    return false;
  }

  // Maps z to target and forces the images of all iterated faces.
  bool assign(const CellRef& z, const CellRef& target) {
    if (auto it = forward_.find(z); it != forward_.end()) return it->second == target;
    if (backward_.contains(target)) return false;
    if (sig_p_.at(z) != sig_q_.at(target)) return false;
    forward_.emplace(z, target);
    backward_.emplace(target, z);
    trail_.push_back(z);
    for (int i = 1; i <= z.degree; ++i) {
      for (int k = 0; k <= 1; ++k) {
        CellRef fz{z.degree - 1, p_.face(z, i, k)};
        CellRef ft{z.degree - 1, q_.face(target, i, k)};
        if (!assign(fz, ft)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const CellRef& z = trail_.back();
      backward_.erase(forward_.at(z));
      forward_.erase(z);
      trail_.pop_back();
    }
  }

  const Complex& p_;
  const Complex& q_;
  std::map<CellRef, Signature> sig_p_, sig_q_;
  std::vector<CellRef> order_;
  CellMap forward_, backward_;
  std::vector<CellRef> trail_;
};

}  // namespace

std::optional<CellMap> are_isomorphic(const Complex& p, const Complex& q) {
  if (p.num_levels() != q.num_levels()) return std::nullopt;
  for (int d = 0; d < p.num_levels(); ++d) {
    if (p.count(d) != q.count(d)) return std::nullopt;
  }
  return IsoSearch(p, q).run();
}

}  // namespace precubical
