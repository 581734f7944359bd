#include "mapcount/maps/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "mapcount/errors.hpp"
#include "mapcount/integer.hpp"

namespace mapcount::maps {

namespace {

// Backtracking enumeration state for one worker.  Vertices live in a
// union-find without path compression so pairings can be undone; free[] at a
// root counts unpaired darts in the component, which lets a closed component
// smaller than the whole map prune the branch early.
class Enumerator {
 public:
  Enumerator(const std::vector<int>& valences, bool connected_only)
      : connected_only_(connected_only), j_(static_cast<int>(valences.size())) {
    for (int v = 0; v < j_; ++v) {
      const int start = static_cast<int>(vert_.size());
      for (int k = 0; k < valences[v]; ++k) {
        vert_.push_back(v);
        rot_.push_back(start + (k + 1) % valences[v]);
      }
      parent_.push_back(v);
      size_.push_back(1);
      free_.push_back(valences[v]);
    }
    d_ = static_cast<int>(vert_.size());
    pair_.assign(d_, -1);
  }

  // Enumerate all completions with dart 0 paired to `first_partner`.
  void run(int first_partner, std::map<int, std::uint64_t>& hist,
           std::uint64_t& total) {
    hist_ = &hist;
    total_ = &total;
    if (apply(0, first_partner)) recurse();
    undo(0, first_partner);
  }

 private:
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Pairs darts a < b; returns false when the branch is dead (a component
  // closed off before absorbing every vertex).
  bool apply(int a, int b) {
    pair_[a] = b;
    pair_[b] = a;
    const int ra = find(vert_[a]);
    const int rb = find(vert_[b]);
    undo_.push_back({ra, rb, free_[ra], free_[rb], size_[ra], size_[rb]});
    if (ra == rb) {
      free_[ra] -= 2;
    } else {
      int big = ra, small = rb;
      if (size_[big] < size_[small]) std::swap(big, small);
      parent_[small] = big;
      size_[big] += size_[small];
      free_[big] += free_[small] - 2;
    }
    if (!connected_only_) return true;
    const int r = find(vert_[a]);
    return free_[r] != 0 || size_[r] == j_;
  }

  void undo(int a, int b) {
    const auto u = undo_.back();
    undo_.pop_back();
    parent_[u.ra] = u.ra;
    parent_[u.rb] = u.rb;
    free_[u.ra] = u.free_a;
    free_[u.rb] = u.free_b;
    size_[u.ra] = u.size_a;
    size_[u.rb] = u.size_b;
    pair_[a] = -1;
    pair_[b] = -1;
  }

  void recurse() {
    int a = 0;
    while (a < d_ && pair_[a] >= 0) ++a;
    if (a == d_) {
      record();
      return;
    }
    for (int b = a + 1; b < d_; ++b) {
      if (pair_[b] >= 0) continue;
      if (apply(a, b)) recurse();
      undo(a, b);
    }
  }

  void record() {
    if (connected_only_) {
      const int r = find(0);
      if (size_[r] != j_) return;
    }
    // faces = cycles of rotation∘pairing
    seen_.assign(d_, 0);
    int faces = 0;
    for (int d = 0; d < d_; ++d) {
      if (seen_[d]) continue;
      ++faces;
      int x = d;
      while (!seen_[x]) {
        seen_[x] = 1;
        x = rot_[pair_[x]];
      }
    }
    const int chi = j_ - d_ / 2 + faces;
    const int genus = (2 - chi) / 2;
    ++(*hist_)[genus];
    ++(*total_);
  }

  struct Undo {
    int ra, rb, free_a, free_b, size_a, size_b;
  };

  bool connected_only_;
  int j_, d_ = 0;
  std::vector<int> vert_, rot_, pair_, parent_, size_, free_;
  std::vector<Undo> undo_;
  std::vector<char> seen_;
  std::map<int, std::uint64_t>* hist_ = nullptr;
  std::uint64_t* total_ = nullptr;
};

}  // namespace

GenusHistogram enumerate_matchings_by_genus(const std::vector<int>& valences,
                                            const EnumerationOptions& opt) {
  if (valences.empty()) throw DomainError("no vertices");
  long darts = 0;
  for (int v : valences) {
    if (v < 1) throw DomainError("vertex valence must be >= 1");
    darts += v;
  }
  if (darts % 2 != 0) throw DomainError("odd total dart count");
  const int cap = std::min(opt.max_darts, 32);
  if (darts > cap) {
    std::ostringstream os;
    os << "enumeration over " << darts << " darts exceeds the cap of " << cap
       << "; the oracle refuses rather than approximate";
    throw CapExceededError(os.str());
  }

  GenusHistogram out;
  out.connected_only = opt.connected_only;
  out.valences = valences;
  if (darts == 0) return out;

  const int d = static_cast<int>(darts);
  unsigned threads = opt.threads ? opt.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(d - 1)));

  // partition the work on the partner of dart 0
  std::vector<std::map<int, std::uint64_t>> hists(threads);
  std::vector<std::uint64_t> totals(threads, 0);
  std::atomic<int> next{1};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      Enumerator en(valences, opt.connected_only);
      for (int b = next.fetch_add(1); b < d; b = next.fetch_add(1))
        en.run(b, hists[t], totals[t]);
    });
  }
  for (auto& th : pool) th.join();
  for (unsigned t = 0; t < threads; ++t) {
    out.total += totals[t];
    for (const auto& [g, n] : hists[t]) out.counts[g] += n;
  }
  return out;
}

Rational GenusHistogram::unlabeled_divisor() const {
  Integer divisor(1);
  std::map<int, int> multiplicity;
  for (int v : valences) {
    divisor *= Integer(v);
    ++multiplicity[v];
  }
  for (const auto& [deg, m] : multiplicity)
    divisor *= Integer::factorial(static_cast<unsigned long>(m));
  return Rational(divisor);
}

std::string GenusHistogram::to_json() const {
  nlohmann::json j;
  j["valences"] = valences;
  j["connected_only"] = connected_only;
  j["total"] = total;
  auto rows = nlohmann::json::array();
  const Rational div = unlabeled_divisor();
  for (const auto& [g, n] : counts) {
    nlohmann::json row;
    row["genus"] = g;
    row["labeled_count"] = std::to_string(n);
    row["unlabeled_count"] =
        (Rational(Integer(std::to_string(n))) / div).to_string();
    rows.push_back(row);
  }
  j["histogram"] = rows;
  return j.dump(2);
}

std::string GenusHistogram::to_csv() const {
  std::ostringstream os;
  os << "genus,labeled_count,unlabeled_count\n";
  const Rational div = unlabeled_divisor();
  for (const auto& [g, n] : counts)
    os << g << "," << n << ","
       << (Rational(Integer(std::to_string(n))) / div).to_string() << "\n";
  return os.str();
}

}  // namespace mapcount::maps
