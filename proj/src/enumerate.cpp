#include "zdlab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

namespace zdlab {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    std::size_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Partitions of e into nonincreasing parts, in reverse-lexicographic order
// ({e} first).
void partitions(std::size_t e, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t part = std::min(e, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(e - part, part, cur, out);
    cur.pop_back();
  }
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// The labeled group of a shape with coordinate access.
struct GroupModel {
  std::size_t n = 1;
  std::size_t k = 0;
  std::vector<std::size_t> factors;
  std::vector<std::size_t> stride;
  std::vector<std::size_t> coords;  // n * k
  std::vector<Element> add;         // n * n

  explicit GroupModel(const AdditiveGroupShape& shape)
      : k(shape.invariant_factors.size()), factors(shape.invariant_factors) {
    stride.assign(k, 1);
    for (std::size_t i = k; i-- > 0;) {
      stride[i] = n;
      n *= factors[i];
    }
    coords.resize(n * k);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < k; ++i) {
        coords[x * k + i] = (x / stride[i]) % factors[i];
      }
    }
    add.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t z = 0;
        for (std::size_t i = 0; i < k; ++i) {
          z += ((coords[x * k + i] + coords[y * k + i]) % factors[i]) * stride[i];
        }
        add[x * n + y] = static_cast<Element>(z);
      }
    }
  }

  std::size_t coord(std::size_t x, std::size_t i) const { return coords[x * k + i]; }
  Element sum(Element x, Element y) const { return add[std::size_t{x} * n + y]; }
  Element scale(Element x, std::size_t s) const {
    std::size_t z = 0;
    for (std::size_t i = 0; i < k; ++i) {
      z += ((coord(x, i) * s) % factors[i]) * stride[i];
    }
    return static_cast<Element>(z);
  }
  Element generator(std::size_t i) const { return static_cast<Element>(stride[i]); }

  // Full multiplication table from structure constants c[i*k + j] = g_i g_j.
  std::vector<Element> table(const std::vector<Element>& c) const {
    std::vector<Element> row(k * n);  // g_i * y
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t y = 0; y < n; ++y) {
        Element acc = 0;
        for (std::size_t j = 0; j < k; ++j) {
          acc = sum(acc, scale(c[i * k + j], coord(y, j)));
        }
        row[i * n + y] = acc;
      }
    }
    std::vector<Element> t(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        Element acc = 0;
        for (std::size_t i = 0; i < k; ++i) {
          acc = sum(acc, scale(row[i * n + y], coord(x, i)));
        }
        t[x * n + y] = acc;
      }
    }
    return t;
  }
};

struct Automorphism {
  std::vector<Element> forward;
  std::vector<Element> inverse;
};

std::vector<Automorphism> automorphisms(const GroupModel& g) {
  std::vector<Automorphism> out;
  // Candidate images per generator: elements killed by d_i.
  std::vector<std::vector<Element>> candidates(g.k);
  for (std::size_t i = 0; i < g.k; ++i) {
    for (std::size_t x = 0; x < g.n; ++x) {
      if (g.scale(static_cast<Element>(x), g.factors[i]) == 0) {
        candidates[i].push_back(static_cast<Element>(x));
      }
    }
  }
  std::vector<Element> images(g.k);
  std::vector<char> hit(g.n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == g.k) {
      std::vector<Element> fwd(g.n);
      std::fill(hit.begin(), hit.end(), 0);
      for (std::size_t x = 0; x < g.n; ++x) {
        Element acc = 0;
        for (std::size_t t = 0; t < g.k; ++t) {
          acc = g.sum(acc, g.scale(images[t], g.coord(x, t)));
        }
        if (hit[acc]) return;
        hit[acc] = 1;
        fwd[x] = acc;
      }
      std::vector<Element> inv(g.n);
      for (std::size_t x = 0; x < g.n; ++x) inv[fwd[x]] = static_cast<Element>(x);
      out.push_back({std::move(fwd), std::move(inv)});
      return;
    }
    for (Element c : candidates[i]) {
      images[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// Depth-first search over structure constants for one shape.
class ConstantSearch {
 public:
  explicit ConstantSearch(const GroupModel& g) : g_(g), k_(g.k) {
    for (std::size_t m = 0; m < k_; ++m) {
      for (std::size_t i = 0; i < m; ++i) {
        order_.push_back(i * k_ + m);
        order_.push_back(m * k_ + i);
      }
      order_.push_back(m * k_ + m);
    }
    candidates_.resize(k_ * k_);
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        const std::size_t bound = std::gcd(g.factors[i], g.factors[j]);
        for (std::size_t x = 0; x < g.n; ++x) {
          if (g.scale(static_cast<Element>(x), bound) == 0) {
            candidates_[i * k_ + j].push_back(static_cast<Element>(x));
          }
        }
      }
    }
    constants_.assign(k_ * k_, 0);
    assigned_.assign(k_ * k_, 0);
  }

  std::size_t shard_count() const {
    return k_ == 0 ? 1 : candidates_[order_[0]].size();
  }

  // Runs the subtree where the first constant takes its shard-th candidate.
  void run_shard(std::size_t shard,
                 const std::function<void(const std::vector<Element>&)>& emit,
                 std::atomic<std::uint64_t>* nodes) {
    std::fill(assigned_.begin(), assigned_.end(), 0);
    nodes_ = nodes;
    if (k_ == 0) {
      emit(constants_);
      return;
    }
    const std::size_t pos = order_[0];
    constants_[pos] = candidates_[pos][shard];
    assigned_[pos] = 1;
    if (consistent()) descend(1, emit);
    assigned_[pos] = 0;
  }

 private:
  // Tri-state: -1 undecidable yet, 0 fails, 1 holds.
  int triple(std::size_t i, std::size_t j, std::size_t l) const {
    const std::size_t ij = i * k_ + j;
    const std::size_t jl = j * k_ + l;
    if (!assigned_[ij] || !assigned_[jl]) return -1;
    Element lhs = 0;
    for (std::size_t m = 0; m < k_; ++m) {
      const std::size_t s = g_.coord(constants_[ij], m);
      if (s == 0) continue;
      if (!assigned_[m * k_ + l]) return -1;
      lhs = g_.sum(lhs, g_.scale(constants_[m * k_ + l], s));
    }
    Element rhs = 0;
    for (std::size_t m = 0; m < k_; ++m) {
      const std::size_t s = g_.coord(constants_[jl], m);
      if (s == 0) continue;
      if (!assigned_[i * k_ + m]) return -1;
      rhs = g_.sum(rhs, g_.scale(constants_[i * k_ + m], s));
    }
    return lhs == rhs ? 1 : 0;
  }

  bool consistent() const {
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        for (std::size_t l = 0; l < k_; ++l) {
          if (triple(i, j, l) == 0) return false;
        }
      }
    }
    return true;
  }

  void descend(std::size_t depth,
               const std::function<void(const std::vector<Element>&)>& emit) {
    if (nodes_) nodes_->fetch_add(1, std::memory_order_relaxed);
    if (depth == order_.size()) {
      emit(constants_);
      return;
    }
    const std::size_t pos = order_[depth];
    assigned_[pos] = 1;
    for (Element v : candidates_[pos]) {
      constants_[pos] = v;
      if (consistent()) descend(depth + 1, emit);
    }
    assigned_[pos] = 0;
  }

  const GroupModel& g_;
  std::size_t k_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> constants_;
  std::vector<char> assigned_;
  std::atomic<std::uint64_t>* nodes_ = nullptr;
};

using Key = std::u16string;

Key to_key(const std::vector<Element>& v) { return Key(v.begin(), v.end()); }

// Orbit bookkeeping shared by the shard workers of one shape.
class ClassRegistry {
 public:
  ClassRegistry(const GroupModel& g, std::vector<Automorphism> autos)
      : g_(g), autos_(std::move(autos)) {}

  void offer(const std::vector<Element>& constants) {
    const Key key = to_key(constants);
    {
      std::lock_guard lock(mutex_);
      if (seen_.count(key)) return;
    }
    const std::vector<Element> table = g_.table(constants);
    const std::size_t n = g_.n;
    std::vector<Key> orbit;
    orbit.reserve(autos_.size());
    std::vector<Element> best;
    std::vector<Element> image(n * n);
    for (const Automorphism& phi : autos_) {
      // phi(x) * phi(y) = phi(x y) defines the transported table.
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          image[phi.forward[x] * n + phi.forward[y]] =
              phi.forward[table[x * n + y]];
        }
      }
      std::vector<Element> c(g_.k * g_.k);
      for (std::size_t i = 0; i < g_.k; ++i) {
        for (std::size_t j = 0; j < g_.k; ++j) {
          c[i * g_.k + j] = image[g_.generator(i) * n + g_.generator(j)];
        }
      }
      orbit.push_back(to_key(c));
      if (best.empty() || image < best) best = image;
    }
    std::lock_guard lock(mutex_);
    for (auto& key_in_orbit : orbit) seen_.insert(std::move(key_in_orbit));
    classes_.insert(to_key(best));
  }

  std::vector<std::vector<Element>> tables() const {
    std::vector<std::vector<Element>> out;
    for (const Key& key : classes_) out.emplace_back(key.begin(), key.end());
    return out;
  }

 private:
  const GroupModel& g_;
  std::vector<Automorphism> autos_;
  std::mutex mutex_;
  std::unordered_set<Key> seen_;
  std::set<Key> classes_;
};

template <typename Fn>
void run_workers(std::size_t jobs, std::size_t threads, Fn&& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, jobs));
  if (threads == 1) {
    for (std::size_t j = 0; j < jobs; ++j) fn(j);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::mutex error_mutex;
  std::exception_ptr error;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::size_t j = next++; j < jobs; j = next++) fn(j);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::size_t AdditiveGroupShape::order() const {
  std::size_t n = 1;
  for (std::size_t d : invariant_factors) n *= d;
  return n;
}

std::string AdditiveGroupShape::name() const {
  if (invariant_factors.empty()) return "0";
  std::string out;
  for (std::size_t i = invariant_factors.size(); i-- > 0;) {
    if (!out.empty()) out += "x";
    out += "Z_" + std::to_string(invariant_factors[i]);
  }
  return out;
}

std::vector<AdditiveGroupShape> abelian_group_shapes(std::size_t n) {
  if (n == 0) return {};
  const auto primes = factorize(n);
  std::vector<std::vector<std::vector<std::size_t>>> per_prime;
  for (const auto& [p, e] : primes) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions(e, e, cur, parts);
    per_prime.push_back(std::move(parts));
  }
  std::vector<std::vector<std::size_t>> descending;  // largest factor first
  std::vector<std::size_t> pick(primes.size(), 0);
  while (true) {
    std::size_t len = 0;
    for (std::size_t t = 0; t < primes.size(); ++t) {
      len = std::max(len, per_prime[t][pick[t]].size());
    }
    std::vector<std::size_t> factors(len, 1);
    for (std::size_t t = 0; t < primes.size(); ++t) {
      const auto& part = per_prime[t][pick[t]];
      for (std::size_t j = 0; j < part.size(); ++j) {
        factors[j] *= ipow(primes[t].first, part[j]);
      }
    }
    descending.push_back(std::move(factors));
    std::size_t t = 0;
    for (; t < primes.size(); ++t) {
      if (++pick[t] < per_prime[t].size()) break;
      pick[t] = 0;
    }
    if (t == primes.size()) break;
  }
  std::sort(descending.begin(), descending.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a > b;
            });
  std::vector<AdditiveGroupShape> out;
  for (auto& d : descending) {
    AdditiveGroupShape shape;
    shape.invariant_factors.assign(d.rbegin(), d.rend());
    const GroupModel g(shape);
    for (std::size_t i = 0; i < g.k; ++i) shape.generators.push_back(g.generator(i));
    out.push_back(std::move(shape));
  }
  return out;
}

std::vector<Element> group_addition_table(const AdditiveGroupShape& shape) {
  return GroupModel(shape).add;
}

void enumerate_rings(const EnumerationTask& task,
                     const std::function<void(const FiniteRing&)>& sink) {
  if (task.order == 0) {
    throw RingError(ErrorKind::BadDimensions, "order must be >= 1");
  }
  if (task.order > task.caps.enumeration) {
    throw RingError(ErrorKind::OrderTooLarge,
                    "order " + std::to_string(task.order) +
                        " exceeds the enumeration cap " +
                        std::to_string(task.caps.enumeration));
  }
  if (task.order > task.caps.enumeration_default && !task.allow_large) {
    throw RingError(ErrorKind::OrderTooLarge,
                    "order " + std::to_string(task.order) +
                        " needs the large-order opt-in");
  }
  std::vector<AdditiveGroupShape> shapes;
  if (task.shape) {
    if (task.shape->order() != task.order) {
      throw RingError(ErrorKind::BadDimensions, "shape order differs from task order");
    }
    shapes.push_back(*task.shape);
  } else {
    shapes = abelian_group_shapes(task.order);
  }

  std::size_t serial = 0;
  for (const AdditiveGroupShape& shape : shapes) {
    const GroupModel g(shape);
    const std::string prefix = (task.dedup ? "R" : "raw") +
                               std::to_string(task.order) + "[" + shape.name() +
                               "]#";
    auto emit_table = [&](std::vector<Element> mul) {
      FiniteRing ring = validate_ring(g.n, g.add, std::move(mul),
                                      prefix + std::to_string(++serial));
      sink(ring);
    };

    ConstantSearch probe(g);
    const std::size_t shard_count = probe.shard_count();
    std::atomic<std::uint64_t>* nodes =
        task.stats ? &task.stats->search_nodes : nullptr;

    if (task.dedup) {
      ClassRegistry registry(g, automorphisms(g));
      run_workers(shard_count, task.shards, [&](std::size_t shard) {
        ConstantSearch search(g);
        search.run_shard(
            shard,
            [&](const std::vector<Element>& c) {
              if (task.stats) task.stats->raw_structures++;
              registry.offer(c);
            },
            nodes);
      });
      for (auto& table : registry.tables()) {
        if (task.stats) task.stats->classes++;
        emit_table(std::move(table));
      }
    } else {
      std::vector<std::vector<std::vector<Element>>> found(shard_count);
      run_workers(shard_count, task.shards, [&](std::size_t shard) {
        ConstantSearch search(g);
        search.run_shard(
            shard,
            [&](const std::vector<Element>& c) { found[shard].push_back(c); },
            nodes);
      });
      for (auto& shard : found) {
        for (const auto& c : shard) {
          if (task.stats) task.stats->raw_structures++;
          emit_table(g.table(c));
        }
      }
    }
  }
}

std::vector<FiniteRing> enumerate_rings(const EnumerationTask& task) {
  std::vector<FiniteRing> out;
  enumerate_rings(task, [&](const FiniteRing& r) { out.push_back(r); });
  return out;
}

FiniteRing opposite_ring(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  std::vector<Element> add(ring.add_table().begin(), ring.add_table().end());
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mul[i * n + j] = ring.mul(static_cast<Element>(j), static_cast<Element>(i));
    }
  }
  std::string label = ring.label();
  if (label.rfind("op(", 0) == 0 && label.back() == ')') {
    label = label.substr(3, label.size() - 4);
  } else {
    label = "op(" + label + ")";
  }
  return validate_ring(n, std::move(add), std::move(mul), std::move(label),
                       ring.names());
}

}  // namespace zdlab
