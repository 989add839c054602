#include "homlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fmt/format.h>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "homlab/errors.hpp"
#include "homlab/evaluator.hpp"
#include "program.hpp"

namespace homlab {

Constraint Constraint::from_tag(TypeTag tag) { return Constraint{to_string(tag), builtin(tag)}; }

Constraint Constraint::from_source(std::string_view source) {
  return Constraint{std::string(source), parse_identity(source)};
}

SearchSpec SearchSpec::from_tags(const std::vector<TypeTag>& require, const std::vector<TypeTag>& violate,
                                 std::size_t max_nonzero) {
  SearchSpec s;
  s.max_nonzero = max_nonzero;
  for (auto t : require) s.require.push_back(Constraint::from_tag(t));
  for (auto t : violate) s.violate.push_back(Constraint::from_tag(t));
  return s;
}

namespace {
constexpr std::size_t kMaxNonzero = 8;
}

void SearchSpec::validate() const {
  if (max_nonzero < 1) throw InvalidSpec("bound must be at least 1");
  if (max_nonzero > kMaxNonzero) throw InvalidSpec(fmt::format("bound above {} is not supported", kMaxNonzero));
  if (!unital) throw InvalidSpec("non-unital search is not supported: every carrier has a unit");
  for (const auto* set : {&require, &violate}) {
    for (const auto& c : *set) {
      if (c.identity.is_cyclic()) {
        throw CyclicNotSupportedOnMagma("search constraint '" + c.label + "' is cyclic; magmas are not additive");
      }
    }
  }
  for (const auto& r : require) {
    for (const auto& v : violate) {
      if (r.identity == v.identity) throw InvalidSpec("'" + r.label + "' is both required and violated");
    }
  }
}

namespace {

using Clock = std::chrono::steady_clock;
using Value = std::uint8_t;
constexpr Value kUndef = 0xFF;

struct CompiledConstraint {
  detail::Program lhs;
  detail::Program rhs;
  bool violate = false;
};

std::vector<CompiledConstraint> compile_constraints(const SearchSpec& spec) {
  std::vector<CompiledConstraint> out;
  for (const auto* set : {&spec.require, &spec.violate}) {
    for (const auto& c : *set) {
      const auto& eq = std::get<Equation>(c.identity.form);
      if (eq.lhs.size() > 31 || eq.rhs.size() > 31) throw InvalidSpec("constraint '" + c.label + "' is too large");
      out.push_back({detail::compile(eq.lhs), detail::compile(eq.rhs), set == &spec.violate});
    }
  }
  return out;
}

// Search state for one carrier size. Variables are the table cells among the
// non-unit nonzero elements (row-major) followed by alpha of every nonzero
// element. Ground instances (constraint, x, y, z) wait on the first unassigned
// variable their evaluation touches and are re-evaluated when it is assigned.
class Kernel {
 public:
  Kernel(std::size_t nonzero, bool with_zero, const std::vector<CompiledConstraint>& constraints, bool prune)
      : m_(nonzero),
        n_(nonzero + (with_zero ? 1 : 0)),
        has_zero_(with_zero),
        zero_(static_cast<Value>(with_zero ? nonzero : 0)),
        free_(nonzero - 1),
        cells_(free_ * free_),
        vars_(cells_ + nonzero),
        constraints_(constraints),
        prune_(prune),
        val_(vars_, kUndef),
        watch_(vars_),
        unresolved_(constraints.size(), 0),
        witnessed_(constraints.size(), 0) {
    triples_ = static_cast<std::uint32_t>(n_ * n_ * n_);
    // values are tried zero first, then the unit and e2, e3, ...
    if (has_zero_) order_.push_back(zero_);
    for (std::size_t v = 0; v < m_; ++v) order_.push_back(static_cast<Value>(v));
    rank_.resize(n_);
    for (std::size_t r = 0; r < n_; ++r) rank_[order_[r]] = static_cast<Value>(r);
    if (prune_) build_permutations();
  }

  std::size_t var_count() const { return vars_; }
  /// The r-th value in search order.
  Value value_at(std::size_t r) const { return order_[r]; }
  std::size_t carrier_size() const { return n_; }

  /// Ground every instance at the root. False when no model of this size exists.
  bool init() {
    for (std::uint32_t c = 0; c < constraints_.size(); ++c) {
      for (std::uint32_t t = 0; t < triples_; ++t) {
        std::uint32_t blocked = 0;
        switch (check(c, t, blocked)) {
          case Outcome::Blocked:
            watch_[blocked].push_back(c * triples_ + t);
            if (constraints_[c].violate) ++unresolved_[c];
            break;
          case Outcome::Holds:
            break;
          case Outcome::Fails:
            if (!constraints_[c].violate) return false;
            ++witnessed_[c];
            break;
        }
      }
    }
    for (std::uint32_t c = 0; c < constraints_.size(); ++c) {
      if (constraints_[c].violate && unresolved_[c] == 0 && witnessed_[c] == 0) return false;
    }
    return true;
  }

  /// Assigns and propagates. On false the caller must still undo().
  bool assign(std::uint32_t var, Value value) {
    frames_.push_back({var, watch_trail_.size(), count_trail_.size()});
    val_[var] = value;
    const auto& waiting = watch_[var];
    for (std::size_t i = 0; i < waiting.size(); ++i) {
      const std::uint32_t id = waiting[i];
      const std::uint32_t c = id / triples_, t = id % triples_;
      std::uint32_t blocked = 0;
      const auto outcome = check(c, t, blocked);
      if (outcome == Outcome::Blocked) {
        watch_[blocked].push_back(id);
        watch_trail_.push_back(blocked);
        continue;
      }
      if (!constraints_[c].violate) {
        if (outcome == Outcome::Fails) return false;
        continue;
      }
      const bool fails = outcome == Outcome::Fails;
      --unresolved_[c];
      if (fails) ++witnessed_[c];
      count_trail_.push_back({c, fails});
      if (unresolved_[c] == 0 && witnessed_[c] == 0) return false;
    }
    return !prune_ || lex_leader();
  }

  void undo() {
    const auto f = frames_.back();
    frames_.pop_back();
    while (watch_trail_.size() > f.watch_mark) {
      watch_[watch_trail_.back()].pop_back();
      watch_trail_.pop_back();
    }
    while (count_trail_.size() > f.count_mark) {
      const auto e = count_trail_.back();
      ++unresolved_[e.constraint];
      if (e.witnessed) --witnessed_[e.constraint];
      count_trail_.pop_back();
    }
    val_[f.var] = kUndef;
  }

  FiniteHomMagma model() const {
    std::vector<Element> table(n_ * n_), alpha(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) table[a * n_ + b] = mul(static_cast<Value>(a), static_cast<Value>(b));
      alpha[a] = alpha_of(static_cast<Value>(a));
    }
    return FiniteHomMagma::from_canonical(n_, has_zero_, std::move(table), std::move(alpha));
  }

 private:
  enum class Outcome { Holds, Fails, Blocked };
  struct Frame {
    std::uint32_t var;
    std::size_t watch_mark;
    std::size_t count_mark;
  };
  struct CountEntry {
    std::uint32_t constraint;
    bool witnessed;
  };

  std::uint32_t cell_var(Value a, Value b) const { return static_cast<std::uint32_t>((a - 1) * free_ + (b - 1)); }

  Value mul(Value a, Value b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    if (has_zero_ && (a == zero_ || b == zero_)) return zero_;
    return val_[cell_var(a, b)];
  }
  Value alpha_of(Value a) const {
    if (has_zero_ && a == zero_) return zero_;
    return val_[cells_ + a];
  }

  Value run(const detail::Program& prog, Value x, Value y, Value z, std::uint32_t& blocked) const {
    Value stack[32];
    int sp = 0;
    for (auto op : prog) {
      switch (op) {
        case detail::OpCode::PushX: stack[sp++] = x; break;
        case detail::OpCode::PushY: stack[sp++] = y; break;
        case detail::OpCode::PushZ: stack[sp++] = z; break;
        case detail::OpCode::PushUnit: stack[sp++] = 0; break;
        case detail::OpCode::Alpha: {
          const Value a = stack[sp - 1];
          const Value r = alpha_of(a);
          if (r == kUndef) {
            blocked = cells_ + a;
            return kUndef;
          }
          stack[sp - 1] = r;
          break;
        }
        case detail::OpCode::Mul: {
          const Value b = stack[--sp];
          const Value a = stack[sp - 1];
          const Value r = mul(a, b);
          if (r == kUndef) {
            blocked = cell_var(a, b);
            return kUndef;
          }
          stack[sp - 1] = r;
          break;
        }
      }
    }
    return stack[0];
  }

  Outcome check(std::uint32_t c, std::uint32_t t, std::uint32_t& blocked) const {
    const auto n = static_cast<std::uint32_t>(n_);
    const auto x = static_cast<Value>(t / (n * n));
    const auto y = static_cast<Value>((t / n) % n);
    const auto z = static_cast<Value>(t % n);
    const Value l = run(constraints_[c].lhs, x, y, z, blocked);
    if (l == kUndef) return Outcome::Blocked;
    const Value r = run(constraints_[c].rhs, x, y, z, blocked);
    if (r == kUndef) return Outcome::Blocked;
    return l == r ? Outcome::Holds : Outcome::Fails;
  }

  void build_permutations() {
    std::vector<Value> p(n_);
    std::iota(p.begin(), p.end(), Value{0});
    // permute 1..m-1 only; unit and zero stay fixed
    auto first = p.begin() + 1, last = p.begin() + static_cast<std::ptrdiff_t>(m_);
    while (std::next_permutation(first, last)) {
      std::vector<Value> inv(n_);
      for (std::size_t i = 0; i < n_; ++i) inv[p[i]] = static_cast<Value>(i);
      perms_.push_back(p);
      inverses_.push_back(std::move(inv));
    }
  }

  // False when some relabeling maps the current partial assignment to a
  // lexicographically smaller one on the decided prefix; no completion of
  // such a node is a canonical form.
  bool lex_leader() const {
    for (std::size_t k = 0; k < perms_.size(); ++k) {
      const auto& perm = perms_[k];
      const auto& inv = inverses_[k];
      for (std::uint32_t v = 0; v < vars_; ++v) {
        const Value cur = val_[v];
        if (cur == kUndef) break;
        Value src;
        if (v < cells_) {
          const auto a = static_cast<Value>(v / free_ + 1), b = static_cast<Value>(v % free_ + 1);
          src = val_[cell_var(inv[a], inv[b])];
        } else {
          src = val_[cells_ + inv[v - cells_]];
        }
        if (src == kUndef) break;
        const Value img = rank_[perm[src]];
        if (img < rank_[cur]) return false;
        if (img > rank_[cur]) break;
      }
    }
    return true;
  }

  std::size_t m_, n_;
  bool has_zero_;
  Value zero_;
  std::size_t free_, cells_, vars_;
  std::uint32_t triples_ = 0;
  const std::vector<CompiledConstraint>& constraints_;
  bool prune_;
  std::vector<Value> val_;
  std::vector<std::vector<std::uint32_t>> watch_;
  std::vector<std::uint32_t> unresolved_;
  std::vector<std::uint32_t> witnessed_;
  std::vector<Frame> frames_;
  std::vector<std::uint32_t> watch_trail_;
  std::vector<CountEntry> count_trail_;
  std::vector<Value> order_;
  std::vector<Value> rank_;
  std::vector<std::vector<Value>> perms_;
  std::vector<std::vector<Value>> inverses_;
};

struct SizeResult {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

// Explores one carrier size, split into tasks by the values of the first
// `split` variables (in lexicographic order). `on_leaf(task, kernel)` returns
// true to stop the task; `skip(task)` lets callers drop tasks that can no
// longer matter.
template <class OnLeaf, class Skip>
SizeResult explore(std::size_t nonzero, const SearchSpec& spec, const std::vector<CompiledConstraint>& constraints,
                   unsigned workers, OnLeaf on_leaf, Skip skip) {
  const std::size_t n = nonzero + (spec.with_zero ? 1 : 0);
  const std::size_t vars = (nonzero - 1) * (nonzero - 1) + nonzero;
  std::size_t split = 0, tasks = 1;
  if (workers > 1) {
    while (split < vars && tasks < 16ull * workers) {
      ++split;
      tasks *= n;
    }
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> nodes{0}, leaves{0};

  auto worker = [&] {
    Kernel k(nonzero, spec.with_zero, constraints, spec.prune_isomorphs);
    if (!k.init()) return;
    std::uint64_t my_nodes = 0, my_leaves = 0;
    std::vector<Value> prefix(split);
    for (std::size_t task = next++; task < tasks; task = next++) {
      if (skip(task)) continue;
      std::size_t code = task;
      for (std::size_t i = split; i-- > 0;) {
        prefix[i] = k.value_at(code % n);
        code /= n;
      }
      std::size_t depth = 0;
      bool ok = true;
      for (; depth < split; ++depth) {
        ++my_nodes;
        if (!k.assign(static_cast<std::uint32_t>(depth), prefix[depth])) {
          ok = false;
          ++depth;
          break;
        }
      }
      if (ok) {
        // iterative DFS below the prefix
        std::vector<int> next_value(vars + 1, 0);
        std::size_t d = split;
        next_value[d] = 0;
        while (true) {
          if (d == vars) {
            ++my_leaves;
            if (on_leaf(task, k) || d == split) break;
            --d;
            k.undo();
            continue;
          }
          if (next_value[d] >= static_cast<int>(n) || skip(task)) {
            if (d == split) break;
            --d;
            k.undo();
            continue;
          }
          const auto v = k.value_at(static_cast<std::size_t>(next_value[d]++));
          ++my_nodes;
          if (k.assign(static_cast<std::uint32_t>(d), v)) {
            ++d;
            next_value[d] = 0;
          } else {
            k.undo();
          }
        }
        // unwind whatever is still assigned below the prefix
        while (d > split) {
          --d;
          k.undo();
        }
      }
      for (std::size_t i = 0; i < depth; ++i) k.undo();
    }
    nodes += my_nodes;
    leaves += my_leaves;
  };

  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return {nodes.load(), leaves.load()};
}

// Ranks in search order (zero first, then e1, e2, ...): table row-major, then alpha.
std::vector<std::uint32_t> search_key(const FiniteHomMagma& m) {
  auto rank = [&](Element v) -> std::uint32_t { return m.has_zero() ? (v == m.zero() ? 0 : v + 1) : v; };
  std::vector<std::uint32_t> key;
  key.reserve(m.size() * (m.size() + 1) + 1);
  key.push_back(static_cast<std::uint32_t>(m.size()));
  for (Element a = 0; a < m.size(); ++a)
    for (Element b = 0; b < m.size(); ++b) key.push_back(rank(m.mul(a, b)));
  for (Element a = 0; a < m.size(); ++a) key.push_back(rank(m.alpha(a)));
  return key;
}

void reverify(const SearchSpec& spec, const FiniteHomMagma& m) {
  for (const auto& c : spec.require) {
    if (!holds(m, c.identity)) throw std::logic_error("search returned a model violating required " + c.label);
  }
  for (const auto& c : spec.violate) {
    if (holds(m, c.identity)) throw std::logic_error("search returned a model satisfying " + c.label);
  }
}

}  // namespace

Verdict find_model(const SearchSpec& spec, SearchOptions options) {
  spec.validate();
  const auto start = Clock::now();
  const auto constraints = compile_constraints(spec);
  Verdict verdict;
  for (std::size_t m = 1; m <= spec.max_nonzero; ++m) {
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> best{kNone};
    std::mutex mu;
    std::map<std::size_t, FiniteHomMagma> found;
    auto on_leaf = [&](std::size_t task, const Kernel& k) {
      auto model = k.model();
      std::lock_guard lock(mu);
      found.emplace(task, std::move(model));
      auto cur = best.load();
      while (task < cur && !best.compare_exchange_weak(cur, task)) {
      }
      return true;
    };
    auto skip = [&](std::size_t task) { return task > best.load(std::memory_order_relaxed); };
    auto r = explore(m, spec, constraints, options.workers, on_leaf, skip);
    verdict.stats.nodes += r.nodes;
    verdict.stats.models_tested += r.leaves;
    if (best.load() != kNone) {
      verdict.countermodel = found.at(best.load());
      reverify(spec, *verdict.countermodel);
      verdict.exhausted_up_to = m - 1;
      break;
    }
    verdict.exhausted_up_to = m;
  }
  verdict.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return verdict;
}

std::vector<FiniteHomMagma> enumerate_models(const SearchSpec& spec, std::size_t limit, SearchOptions options) {
  spec.validate();
  const auto constraints = compile_constraints(spec);
  std::vector<FiniteHomMagma> out;
  for (std::size_t m = 1; m <= spec.max_nonzero && out.size() < limit; ++m) {
    std::mutex mu;
    if (spec.prune_isomorphs) {
      // every leaf that survives lex-leader pruning is a canonical form
      std::map<std::size_t, std::vector<FiniteHomMagma>> per_task;
      auto on_leaf = [&](std::size_t task, const Kernel& k) {
        auto model = k.model();
        std::lock_guard lock(mu);
        auto& bucket = per_task[task];
        bucket.push_back(std::move(model));
        return bucket.size() >= limit;
      };
      explore(m, spec, constraints, options.workers, on_leaf, [](std::size_t) { return false; });
      for (auto& [task, models] : per_task) {
        for (auto& model : models) out.push_back(std::move(model));
      }
    } else {
      std::map<std::vector<std::uint32_t>, FiniteHomMagma> forms;
      auto on_leaf = [&](std::size_t, const Kernel& k) {
        auto form = canonical_form(k.model());
        auto key = search_key(form);
        std::lock_guard lock(mu);
        forms.emplace(std::move(key), std::move(form));
        return false;
      };
      explore(m, spec, constraints, options.workers, on_leaf, [](std::size_t) { return false; });
      for (auto& [key, form] : forms) out.push_back(std::move(form));
    }
  }
  if (out.size() > limit) out.erase(out.begin() + static_cast<std::ptrdiff_t>(limit), out.end());
  for (const auto& model : out) reverify(spec, model);
  return out;
}

FiniteHomMagma canonical_form(const FiniteHomMagma& m) {
  const std::size_t k = m.nonzero_count();
  std::vector<Element> perm(m.size());
  std::iota(perm.begin(), perm.end(), Element{0});
  FiniteHomMagma best = m;
  auto best_key = search_key(m);
  auto first = perm.begin() + 1, last = perm.begin() + static_cast<std::ptrdiff_t>(k);
  while (std::next_permutation(first, last)) {
    auto image = m.relabel(perm);
    auto key = search_key(image);
    if (key < best_key) {
      best = std::move(image);
      best_key = std::move(key);
    }
  }
  return best;
}

bool isomorphic(const FiniteHomMagma& a, const FiniteHomMagma& b) {
  return a.size() == b.size() && a.has_zero() == b.has_zero() && canonical_form(a) == canonical_form(b);
}

Verdict verify_implication(const std::vector<TypeTag>& premises, TypeTag conclusion, std::size_t max_nonzero,
                           SearchOptions options) {
  return find_model(SearchSpec::from_tags(premises, {conclusion}, max_nonzero), options);
}

}  // namespace homlab
