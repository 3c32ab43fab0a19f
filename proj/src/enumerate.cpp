#include "ybx/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ybx/error.hpp"

namespace ybx {

namespace {

struct Emitted {
  FiniteSolution solution;
  std::uint64_t at_node;
};

struct Partition {
  std::vector<Emitted> found;
  std::uint64_t nodes = 0;
  bool aborted = false;
};

/// Permutations of {0..n-1} by lexicographic index with precomputed products.
struct PermTable {
  int n;
  int count;
  std::vector<std::vector<int>> images;
  std::vector<int> inverse;
  std::vector<int> product;  // product[p * count + q] = p o q

  explicit PermTable(int n_) : n(n_) {
    for (const auto& p : all_permutations(n)) images.push_back(p.images());
    count = static_cast<int>(images.size());
    std::vector<std::vector<int>> sorted = images;
    auto index_of = [&](const std::vector<int>& img) {
      return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), img) - sorted.begin());
    };
    inverse.resize(static_cast<std::size_t>(count));
    product.resize(static_cast<std::size_t>(count) * static_cast<std::size_t>(count));
    for (int p = 0; p < count; ++p) {
      inverse[static_cast<std::size_t>(p)] = index_of(invert_images(images[static_cast<std::size_t>(p)]));
      for (int q = 0; q < count; ++q) {
        std::vector<int> pq(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pq[static_cast<std::size_t>(i)] = images[static_cast<std::size_t>(p)][static_cast<std::size_t>(images[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)])];
        product[static_cast<std::size_t>(p) * static_cast<std::size_t>(count) + static_cast<std::size_t>(q)] = index_of(pq);
      }
    }
  }
  int mul(int p, int q) const { return product[static_cast<std::size_t>(p) * static_cast<std::size_t>(count) + static_cast<std::size_t>(q)]; }
  int apply(int p, int i) const { return images[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)]; }
};

class Search {
 public:
  Search(const PermTable& perms, SolutionFilter filter, std::uint64_t cap)
      : P_(perms), n_(perms.n), filter_(filter), cap_(cap),
        alpha_(static_cast<std::size_t>(n_)), beta_(static_cast<std::size_t>(n_ * n_), -1),
        row_done_(static_cast<std::size_t>(n_), 0), candidates_(static_cast<std::size_t>(n_ * n_)) {}

  Partition run(int first_row) {
    out_ = Partition{};
    alpha_[0] = first_row;
    if (tick()) alpha_rows(1);
    return std::move(out_);
  }

 private:
  bool tick() {
    ++out_.nodes;
    if (out_.nodes > cap_) out_.aborted = true;
    return !out_.aborted;
  }

  int A(int x, int y) const { return P_.apply(alpha_[static_cast<std::size_t>(x)], y); }
  int B(int y, int x) const { return beta_[static_cast<std::size_t>(y * n_ + x)]; }

  void alpha_rows(int x) {
    if (x == n_) {
      if (prepare_candidates()) beta_cell(0, 0);
      return;
    }
    for (int p = 0; p < P_.count && !out_.aborted; ++p) {
      alpha_[static_cast<std::size_t>(x)] = p;
      if (!tick()) return;
      alpha_rows(x + 1);
    }
  }

  bool prepare_candidates() {
    const bool involutive = filter_ != SolutionFilter::all;
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        const int axy = A(x, y);
        const int target = P_.mul(P_.inverse[static_cast<std::size_t>(alpha_[static_cast<std::size_t>(axy)])],
                                  P_.mul(alpha_[static_cast<std::size_t>(x)], alpha_[static_cast<std::size_t>(y)]));
        auto& c = candidates_[static_cast<std::size_t>(y * n_ + x)];
        c.clear();
        int forced = -1;
        if (involutive) {
          // alpha_{alpha_x(y)}(beta_y(x)) = x
          const auto& inv = P_.images[static_cast<std::size_t>(P_.inverse[static_cast<std::size_t>(alpha_[static_cast<std::size_t>(axy)])])];
          forced = inv[static_cast<std::size_t>(x)];
        }
        for (int z = 0; z < n_; ++z) {
          if (alpha_[static_cast<std::size_t>(z)] == target && (forced < 0 || forced == z)) c.push_back(z);
        }
        if (c.empty()) return false;
      }
    }
    return true;
  }

  void beta_cell(int y, int x) {
    if (y == n_) {
      finish();
      return;
    }
    if (x == n_) {
      row_done_[static_cast<std::size_t>(y)] = 1;
      if (rows_consistent()) beta_cell(y + 1, 0);
      row_done_[static_cast<std::size_t>(y)] = 0;
      return;
    }
    for (int z : candidates_[static_cast<std::size_t>(y * n_ + x)]) {
      bool used = false;
      for (int k = 0; k < x; ++k) used = used || B(y, k) == z;
      if (used) continue;
      beta_[static_cast<std::size_t>(y * n_ + x)] = z;
      if (!tick()) break;
      beta_cell(y, x + 1);
      if (out_.aborted) break;
    }
    beta_[static_cast<std::size_t>(y * n_ + x)] = -1;
  }

  bool done(int row) const { return row_done_[static_cast<std::size_t>(row)] != 0; }

  bool rows_consistent() const {
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        if (!done(y)) continue;
        const int byx = B(y, x), axy = A(x, y);
        if (done(x) && done(byx) && done(axy)) {
          for (int z = 0; z < n_; ++z)
            if (B(y, B(x, z)) != B(byx, B(axy, z))) return false;
        }
        for (int z = 0; z < n_; ++z) {
          const int r1 = A(byx, z);
          if (!done(r1) || !done(z)) continue;
          const int bzy = B(z, y);
          const int ayz = A(y, z);
          if (!done(ayz)) continue;
          if (B(r1, axy) != A(B(ayz, x), bzy)) return false;
        }
      }
    }
    return true;
  }

  void finish() {
    std::vector<int> a;
    a.reserve(static_cast<std::size_t>(n_ * n_));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) a.push_back(A(x, y));
    FiniteSolution s(n_, std::move(a), beta_);
    const SolutionReport rep = check_ybe(s, YbeMethod::lemma);
    if (!rep.all_valid()) return;
    if (filter_ == SolutionFilter::involutive && !rep.is_involutive) return;
    if (filter_ == SolutionFilter::symmetric && !rep.is_symmetric) return;
    out_.found.push_back({std::move(s), out_.nodes});
  }

  const PermTable& P_;
  int n_;
  SolutionFilter filter_;
  std::uint64_t cap_;
  std::vector<int> alpha_;
  std::vector<int> beta_;
  std::vector<char> row_done_;
  std::vector<std::vector<int>> candidates_;
  Partition out_;
};

std::vector<Partition> run_partitions(int n, SolutionFilter filter, std::uint64_t budget, int jobs) {
  const PermTable perms(n);
  std::vector<Partition> parts(static_cast<std::size_t>(perms.count));
  std::atomic<int> next{0};
  auto worker = [&] {
    Search search(perms, filter, budget);
    for (int p = next++; p < perms.count; p = next++) parts[static_cast<std::size_t>(p)] = search.run(p);
  };
  const int threads = std::clamp(jobs, 1, perms.count);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return parts;
}

}  // namespace

EnumerationResult enumerate_solutions(int n, const EnumerationOptions& options) {
  if (n < 1) throw Error(ErrorKind::malformed, "enumeration needs n >= 1");
  EnumerationResult result;
  auto parts = run_partitions(n, options.filter, options.budget, options.jobs);
  // Replay the sequential budget so partial output does not depend on jobs.
  std::uint64_t used = 0;
  for (auto& part : parts) {
    const std::uint64_t remaining = options.budget - used;
    for (auto& e : part.found) {
      if (e.at_node <= remaining) result.solutions.push_back(std::move(e.solution));
    }
    if (part.nodes > remaining) {
      result.complete = false;
      result.nodes = options.budget;
      return result;
    }
    used += part.nodes;
  }
  result.nodes = used;
  return result;
}

bool enumerate_solutions(int n, SolutionFilter filter, std::uint64_t budget,
                         const std::function<void(const FiniteSolution&)>& visit) {
  if (n < 1) throw Error(ErrorKind::malformed, "enumeration needs n >= 1");
  const PermTable perms(n);
  std::uint64_t used = 0;
  for (int p = 0; p < perms.count; ++p) {
    Search search(perms, filter, budget - used);
    Partition part = search.run(p);
    for (const auto& e : part.found) visit(e.solution);
    if (part.aborted) return false;
    used += part.nodes;
  }
  return true;
}

}  // namespace ybx
