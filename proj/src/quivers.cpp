#include "loophopf/quivers.hpp"

#include <algorithm>
#include <stdexcept>

namespace loophopf {

GroupTable::GroupTable(std::vector<std::vector<unsigned>> cayley) : cayley_(std::move(cayley)) {
  const unsigned n = static_cast<unsigned>(cayley_.size());
  if (n == 0) throw std::invalid_argument("empty Cayley table");
  for (const auto& row : cayley_) {
    if (row.size() != n) throw std::invalid_argument("Cayley table is not square");
    for (auto v : row)
      if (v >= n) throw std::invalid_argument("Cayley table entry out of range");
  }
  bool found_identity = false;
  for (unsigned e = 0; e < n; ++e) {
    bool ok = true;
    for (unsigned a = 0; a < n && ok; ++a) ok = cayley_[e][a] == a && cayley_[a][e] == a;
    if (ok) {
      identity_ = e;
      found_identity = true;
      break;
    }
  }
  if (!found_identity) throw std::invalid_argument("Cayley table has no identity");
  inverse_.assign(n, 0);
  for (unsigned a = 0; a < n; ++a) {
    bool found = false;
    for (unsigned b = 0; b < n; ++b)
      if (cayley_[a][b] == identity_ && cayley_[b][a] == identity_) {
        inverse_[a] = b;
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("Cayley table has a non-invertible element");
  }
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c)
        if (cayley_[cayley_[a][b]][c] != cayley_[a][cayley_[b][c]])
          throw std::invalid_argument("Cayley table is not associative");
}

unsigned GroupTable::mul(unsigned a, unsigned b) const {
  if (a >= order() || b >= order()) throw std::out_of_range("group element out of range");
  return cayley_[a][b];
}

unsigned GroupTable::inverse(unsigned a) const {
  if (a >= order()) throw std::out_of_range("group element out of range");
  return inverse_[a];
}

std::vector<std::vector<unsigned>> GroupTable::conjugacy_classes() const {
  const unsigned n = order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<unsigned>> classes;
  for (unsigned a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::vector<unsigned> cls;
    for (unsigned g = 0; g < n; ++g) {
      unsigned conj = mul(mul(g, a), inverse_[g]);
      if (!seen[conj]) {
        seen[conj] = true;
        cls.push_back(conj);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

unsigned RamificationData::get(unsigned class_rep) const {
  auto it = mult_.find(class_rep);
  return it == mult_.end() ? 0 : it->second;
}

Quiver build_hopf_quiver(const GroupTable& g, const RamificationData& r) {
  auto classes = g.conjugacy_classes();
  std::vector<unsigned> reps;
  for (const auto& cls : classes) reps.push_back(cls.front());
  for (const auto& [rep, mult] : r.entries()) {
    (void)mult;
    if (std::find(reps.begin(), reps.end(), rep) == reps.end())
      throw std::invalid_argument("ramification key is not a class representative");
  }
  Quiver q;
  q.vertices = g.order();
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    unsigned mult = r.get(reps[ci]);
    if (mult == 0) continue;
    for (unsigned c : classes[ci])
      for (unsigned x = 0; x < g.order(); ++x) q.arrows[{x, g.mul(c, x)}] += mult;
  }
  return q;
}

std::string render(const Quiver& q) {
  std::string out;
  for (const auto& [vw, mult] : q.arrows)
    out += std::to_string(vw.first) + " -> " + std::to_string(vw.second) + " (x" +
           std::to_string(mult) + ")\n";
  return out;
}

std::vector<std::vector<std::uint8_t>> thin_splits(unsigned m, unsigned n) {
  std::vector<std::vector<std::uint8_t>> out;
  const unsigned len = m + n;
  std::vector<std::uint8_t> cur(len, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned ones) -> void {
    if (pos == len) {
      if (ones == m) out.push_back(cur);
      return;
    }
    if (ones + (len - pos) < m) return;  // not enough slots left
    if (ones < m) {
      // lexicographic: 0 before 1
      cur[pos] = 0;
      self(self, pos + 1, ones);
      cur[pos] = 1;
      self(self, pos + 1, ones + 1);
      cur[pos] = 0;
    } else {
      cur[pos] = 0;
      self(self, pos + 1, ones);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::uint64_t thin_split_count(unsigned m, unsigned n) {
  return static_cast<std::uint64_t>(thin_splits(m, n).size());
}

std::uint32_t thin_split_product_loop(unsigned a, unsigned b, Prime p) {
  std::uint64_t sum = 0;
  for (const auto& split : thin_splits(a, b)) {
    (void)split;
    sum = (sum + 1) % p.value;
  }
  return static_cast<std::uint32_t>(sum);
}

}  // namespace loophopf
