#include "mvmlab/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>

#include "mvmlab/algebra_io.hpp"

namespace mvmlab {

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Witness:
      return "witness";
    case SearchStatus::BoundHit:
      return "bound_hit";
    case SearchStatus::Exhausted:
      return "exhausted";
  }
  return "?";
}

namespace {

constexpr std::int32_t kUnassigned = -1;

// Operation order inside the engine; also the selection priority groups:
// join and meet are decided before oplus and odot.
const std::string_view kOps[] = {sig::kJoin, sig::kMeet, sig::kOplus,
                                 sig::kOdot};

void collect_constants(const Term& t, std::vector<std::string>& out) {
  if (t.kind() == Term::Kind::Constant) {
    if (t.name() != sig::kZero && t.name() != sig::kOne &&
        std::find(out.begin(), out.end(), t.name()) == out.end()) {
      out.push_back(t.name());
    }
  }
  for (const Term& a : t.args()) collect_constants(a, out);
}

/// Backtracking over the cells of one carrier size: the constants followed
/// by the four binary tables. Ground instances of the equations are
/// evaluated on the partial assignment; an instance stuck on an unassigned
/// cell waits in that cell's watch list.
class Engine {
 public:
  Engine(std::size_t n, const std::vector<Equation>& satisfy,
         const Equation* violate, bool symmetry_breaking,
         std::uint64_t node_limit)
      : n_(n), lnh_(symmetry_breaking), node_limit_(node_limit) {
    const_names_ = {std::string(sig::kZero), std::string(sig::kOne)};
    for (const Equation& e : satisfy) {
      collect_constants(e.lhs, const_names_);
      collect_constants(e.rhs, const_names_);
    }
    kept_constants_ = const_names_.size();
    if (violate) {
      std::vector<std::string> own;
      collect_constants(violate->lhs, own);
      collect_constants(violate->rhs, own);
      for (const auto& c : own) {
        if (std::find(const_names_.begin(), const_names_.end(), c) ==
            const_names_.end()) {
          throw AlgebraError("search: constant '" + c +
                             "' appears only in the violated equation");
        }
      }
      skolem_base_ = const_names_.size();
      for (std::size_t i = 0; i < violate->var_count; ++i) {
        const_names_.push_back("\x01skolem" + std::to_string(i));
      }
    }
    nconst_ = const_names_.size();
    cells_ = nconst_ + 4 * n_ * n_;
    values_.assign(cells_, kUnassigned);
    watch_.resize(cells_);
    mentions_.assign(n_, 0);

    for (const Equation& e : satisfy) add_equation(e);
    if (violate) {
      const std::uint32_t l = compile(violate->lhs, true);
      const std::uint32_t r = compile(violate->rhs, true);
      instances_.push_back({l, r, 0, true});
    }
  }

  enum class Result { Stopped, Complete, LimitHit };

  Result run(const std::function<bool(const FiniteAlgebra&)>& visit) {
    visit_ = &visit;
    for (std::uint32_t i = 0; i < instances_.size(); ++i) {
      if (!check(i) || !propagate()) return Result::Complete;
    }
    return dfs();
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  enum class Kind : std::uint8_t { Var, Cell, Op };
  struct Node {
    Kind kind;
    std::uint32_t a;  // variable index, constant cell, or operation
    std::uint32_t l = 0, r = 0;
  };
  struct Instance {
    std::uint32_t lhs, rhs;
    std::uint32_t env;  // offset into env_pool_
    bool distinct;
  };
  enum class State : std::uint8_t { Known, BlockedTop, Blocked };
  struct Eval {
    State state;
    Element value;
    std::uint32_t cell;
  };

  std::uint32_t compile(const Term& t, bool skolemize) {
    Node node{Kind::Var, 0};
    switch (t.kind()) {
      case Term::Kind::Variable:
        if (skolemize) {
          node = {Kind::Cell, static_cast<std::uint32_t>(skolem_base_ + t.index())};
        } else {
          node = {Kind::Var, static_cast<std::uint32_t>(t.index())};
        }
        break;
      case Term::Kind::Constant: {
        auto it = std::find(const_names_.begin(), const_names_.end(), t.name());
        node = {Kind::Cell, static_cast<std::uint32_t>(it - const_names_.begin())};
        break;
      }
      case Term::Kind::Operation: {
        auto it = std::find(std::begin(kOps), std::end(kOps), t.name());
        if (it == std::end(kOps) || t.args().size() != 2) {
          throw AlgebraError("search: unsupported operation '" + t.name() +
                             "'; only binary oplus, odot, join, meet");
        }
        const std::uint32_t l = compile(t.args()[0], skolemize);
        const std::uint32_t r = compile(t.args()[1], skolemize);
        node = {Kind::Op, static_cast<std::uint32_t>(it - std::begin(kOps)), l, r};
        break;
      }
    }
    nodes_pool_.push_back(node);
    return static_cast<std::uint32_t>(nodes_pool_.size() - 1);
  }

  void add_equation(const Equation& e) {
    const std::uint32_t l = compile(e.lhs, false);
    const std::uint32_t r = compile(e.rhs, false);
    const std::size_t k = e.var_count;
    std::vector<Element> tuple(k, 0);
    do {
      const auto off = static_cast<std::uint32_t>(env_pool_.size());
      env_pool_.insert(env_pool_.end(), tuple.begin(), tuple.end());
      instances_.push_back({l, r, off, false});
    } while (k > 0 && next_tuple(tuple, n_));
  }

  std::uint32_t table_cell(std::uint32_t op, Element a, Element b) const {
    return static_cast<std::uint32_t>(nconst_ + (op * n_ + a) * n_ + b);
  }

  Eval eval(std::uint32_t idx, const Element* env) const {
    const Node& nd = nodes_pool_[idx];
    switch (nd.kind) {
      case Kind::Var:
        return {State::Known, env[nd.a], 0};
      case Kind::Cell: {
        const std::int32_t v = values_[nd.a];
        if (v == kUnassigned) return {State::BlockedTop, 0, nd.a};
        return {State::Known, static_cast<Element>(v), 0};
      }
      case Kind::Op: {
        Eval l = eval(nd.l, env);
        if (l.state != State::Known) return {State::Blocked, 0, l.cell};
        Eval r = eval(nd.r, env);
        if (r.state != State::Known) return {State::Blocked, 0, r.cell};
        const std::uint32_t c = table_cell(nd.a, l.value, r.value);
        const std::int32_t v = values_[c];
        if (v == kUnassigned) return {State::BlockedTop, 0, c};
        return {State::Known, static_cast<Element>(v), 0};
      }
    }
    return {State::Blocked, 0, 0};
  }

  void watch(std::uint32_t cell, std::uint32_t inst) {
    watch_[cell].push_back(inst);
    watch_log_.push_back(cell);
  }

  /// False on a conflict. May assign a forced cell.
  bool check(std::uint32_t i) {
    const Instance& in = instances_[i];
    const Element* env = env_pool_.data() + in.env;
    const Eval l = eval(in.lhs, env);
    const Eval r = eval(in.rhs, env);
    if (l.state == State::Known && r.state == State::Known) {
      return (l.value == r.value) != in.distinct;
    }
    if (!in.distinct) {
      if (l.state == State::Known && r.state == State::BlockedTop) {
        assign(r.cell, l.value);
        return true;
      }
      if (r.state == State::Known && l.state == State::BlockedTop) {
        assign(l.cell, r.value);
        return true;
      }
    }
    watch(l.state != State::Known ? l.cell : r.cell, i);
    return true;
  }

  void mention(std::uint32_t cell, int delta) {
    const auto v = static_cast<Element>(values_[cell]);
    mentions_[v] += delta;
    if (cell >= nconst_) {
      const std::size_t t = (cell - nconst_) % (n_ * n_);
      mentions_[t / n_] += delta;
      mentions_[t % n_] += delta;
    }
  }

  void assign(std::uint32_t cell, Element v) {
    values_[cell] = static_cast<std::int32_t>(v);
    trail_.push_back(cell);
    mention(cell, +1);
    pending_.push_back(cell);
  }

  bool propagate() {
    while (!pending_.empty()) {
      const std::uint32_t c = pending_.back();
      pending_.pop_back();
      // Watchers appended during this loop go to other (unassigned) cells.
      for (std::size_t k = 0; k < watch_[c].size(); ++k) {
        if (!check(watch_[c][k])) {
          pending_.clear();
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t trail_mark, std::size_t log_mark) {
    while (trail_.size() > trail_mark) {
      const std::uint32_t c = trail_.back();
      trail_.pop_back();
      mention(c, -1);
      values_[c] = kUnassigned;
    }
    while (watch_log_.size() > log_mark) {
      watch_[watch_log_.back()].pop_back();
      watch_log_.pop_back();
    }
    pending_.clear();
  }

  /// Constants first, then join/meet, then oplus/odot; within a group the
  /// cell with the most waiting instances.
  std::optional<std::uint32_t> select() const {
    auto best_in = [&](std::size_t lo, std::size_t hi) {
      std::optional<std::uint32_t> best;
      for (std::size_t c = lo; c < hi; ++c) {
        if (values_[c] != kUnassigned) continue;
        if (!best || watch_[c].size() > watch_[*best].size()) {
          best = static_cast<std::uint32_t>(c);
        }
      }
      return best;
    };
    const std::size_t sq = n_ * n_;
    if (auto c = best_in(0, nconst_)) return c;
    if (auto c = best_in(nconst_, nconst_ + 2 * sq)) return c;
    return best_in(nconst_ + 2 * sq, cells_);
  }

  /// Candidate values: everything already mentioned (including the cell's
  /// own arguments) plus the least unmentioned element. Unmentioned
  /// elements are interchangeable, so one representative suffices.
  std::vector<Element> domain(std::uint32_t cell) const {
    std::vector<Element> out;
    if (!lnh_) {
      for (Element v = 0; v < n_; ++v) out.push_back(v);
      return out;
    }
    std::vector<bool> used(n_);
    for (Element v = 0; v < n_; ++v) used[v] = mentions_[v] > 0;
    if (cell >= nconst_) {
      const std::size_t t = (cell - nconst_) % (n_ * n_);
      used[t / n_] = used[t % n_] = true;
    }
    bool fresh_taken = false;
    for (Element v = 0; v < n_; ++v) {
      if (used[v]) {
        out.push_back(v);
      } else if (!fresh_taken) {
        out.push_back(v);
        fresh_taken = true;
      }
    }
    return out;
  }

  FiniteAlgebra model() const {
    FiniteAlgebra a("model_" + std::to_string(n_), n_);
    const std::size_t sq = n_ * n_;
    // Serialize in the usual signature order.
    for (std::string_view name :
         {sig::kOplus, sig::kOdot, sig::kJoin, sig::kMeet}) {
      const auto op = static_cast<std::size_t>(
          std::find(std::begin(kOps), std::end(kOps), name) - std::begin(kOps));
      std::vector<Element> table(sq);
      for (std::size_t k = 0; k < sq; ++k) {
        table[k] = static_cast<Element>(values_[nconst_ + op * sq + k]);
      }
      a.add_operation(std::string(name), 2, std::move(table));
    }
    for (std::size_t c = 0; c < kept_constants_; ++c) {
      a.add_constant(const_names_[c], static_cast<Element>(values_[c]));
    }
    return a;
  }

  Result dfs() {
    const auto cell = select();
    if (!cell) return (*visit_)(model()) ? Result::Complete : Result::Stopped;
    for (Element v : domain(*cell)) {
      if (node_limit_ && nodes_ >= node_limit_) return Result::LimitHit;
      ++nodes_;
      const std::size_t tm = trail_.size();
      const std::size_t lm = watch_log_.size();
      assign(*cell, v);
      if (propagate()) {
        const Result r = dfs();
        if (r != Result::Complete) {
          undo(tm, lm);
          return r;
        }
      }
      undo(tm, lm);
    }
    return Result::Complete;
  }

  std::size_t n_;
  bool lnh_;
  std::uint64_t node_limit_;
  std::vector<std::string> const_names_;
  std::size_t kept_constants_ = 0;
  std::size_t skolem_base_ = 0;
  std::size_t nconst_ = 0;
  std::size_t cells_ = 0;

  std::vector<Node> nodes_pool_;
  std::vector<Element> env_pool_;
  std::vector<Instance> instances_;

  std::vector<std::int32_t> values_;
  std::vector<std::vector<std::uint32_t>> watch_;
  std::vector<std::uint32_t> watch_log_;
  std::vector<std::uint32_t> trail_;
  std::vector<std::uint32_t> pending_;
  std::vector<int> mentions_;

  const std::function<bool(const FiniteAlgebra&)>* visit_ = nullptr;
  std::uint64_t nodes_ = 0;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

bool verify_model(const SearchProblem& problem, const FiniteAlgebra& model,
                  std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  for (const Equation& e : problem.satisfy) {
    if (!holds(model, e)) return fail("fails " + e.to_string());
  }
  if (problem.violate && holds(model, *problem.violate)) {
    return fail("satisfies " + problem.violate->to_string());
  }
  return true;
}

SearchOutcome find_model(const SearchProblem& problem) {
  if (problem.min_size < 1 || problem.min_size > problem.max_size) {
    throw AlgebraError("search: empty or invalid size range");
  }
  const auto t0 = std::chrono::steady_clock::now();
  SearchOutcome out;
  bool incomplete = false;
  for (std::size_t n = problem.min_size; n <= problem.max_size && !out.model;
       ++n) {
    Engine engine(n, problem.satisfy,
                  problem.violate ? &*problem.violate : nullptr,
                  problem.symmetry_breaking, problem.node_limit);
    std::function<bool(const FiniteAlgebra&)> take =
        [&](const FiniteAlgebra& m) {
          out.verified = verify_model(problem, m, &out.verification);
          out.model = m;
          return false;
        };
    if (engine.run(take) == Engine::Result::LimitHit) incomplete = true;
    out.stats.nodes += engine.nodes();
  }
  out.status = out.model    ? SearchStatus::Witness
               : incomplete ? SearchStatus::Exhausted
                            : SearchStatus::BoundHit;
  out.stats.seconds = seconds_since(t0);
  return out;
}

SearchStats for_each_model(
    const std::vector<Equation>& satisfy, std::size_t size,
    bool symmetry_breaking,
    const std::function<bool(const FiniteAlgebra&)>& visit) {
  const auto t0 = std::chrono::steady_clock::now();
  Engine engine(size, satisfy, nullptr, symmetry_breaking, 0);
  engine.run(visit);
  return SearchStats{engine.nodes(), seconds_since(t0)};
}

std::size_t enumeration_size_guard() {
  if (const char* env = std::getenv("MVMLAB_SIZE_GUARD")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 4;
}

std::vector<MvmAlgebra> enumerate_mvms(std::size_t n,
                                       std::optional<std::size_t> guard) {
  const std::size_t limit = guard.value_or(enumeration_size_guard());
  if (n == 0 || n > limit) {
    throw AlgebraError("enumerate_mvms: size " + std::to_string(n) +
                       " outside 1.." + std::to_string(limit));
  }
  std::vector<Equation> axioms;
  for (const AxiomGroup& g : mvm_axioms()) {
    axioms.insert(axioms.end(), g.equations.begin(), g.equations.end());
  }
  std::vector<FiniteAlgebra> classes;
  for_each_model(axioms, n, true, [&](const FiniteAlgebra& m) {
    for (const FiniteAlgebra& c : classes) {
      if (find_isomorphism(m, c)) return true;
    }
    classes.push_back(m);
    return true;
  });
  // Fixed order: by serialized tables.
  std::vector<std::pair<std::string, FiniteAlgebra>> keyed;
  for (FiniteAlgebra& c : classes) {
    keyed.emplace_back(serialize_algebra(c), std::move(c));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<MvmAlgebra> out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    FiniteAlgebra& a = keyed[i].second;
    a.set_name("mvm" + std::to_string(n) + "_" + std::to_string(i));
    out.push_back(require_mvm(a));
  }
  return out;
}

const std::vector<AxiomGroup>& independence_items() {
  static const std::vector<AxiomGroup> items = [] {
    std::vector<AxiomGroup> out;
    auto group = [&](std::string name, std::vector<std::string> eqs) {
      AxiomGroup g{std::move(name), {}};
      int i = 0;
      for (const auto& text : eqs) {
        g.equations.push_back(
            parse_equation(text, {}, g.name + "." + std::to_string(++i)));
      }
      out.push_back(std::move(g));
    };
    group("lattice", {"(x \\/ y) \\/ z = x \\/ (y \\/ z)",
                      "(x /\\ y) /\\ z = x /\\ (y /\\ z)", "x \\/ y = y \\/ x",
                      "x /\\ y = y /\\ x", "x \\/ (x /\\ y) = x",
                      "x /\\ (x \\/ y) = x"});
    group("lattice-distributive",
          {"x \\/ (y /\\ z) = (x \\/ y) /\\ (x \\/ z)",
           "(y /\\ z) \\/ x = (y \\/ x) /\\ (z \\/ x)",
           "x /\\ (y \\/ z) = (x /\\ y) \\/ (x /\\ z)",
           "(y \\/ z) /\\ x = (y /\\ x) \\/ (z /\\ x)"});
    group("oplus-associative", {"(x (+) y) (+) z = x (+) (y (+) z)"});
    group("odot-associative", {"(x (.) y) (.) z = x (.) (y (.) z)"});
    group("oplus-commutative", {"x (+) y = y (+) x"});
    group("odot-commutative", {"x (.) y = y (.) x"});
    group("oplus-unit", {"x (+) 0 = x", "0 (+) x = x"});
    group("odot-unit", {"x (.) 1 = x", "1 (.) x = x"});
    group("oplus-over-join", {"x (+) (y \\/ z) = (x (+) y) \\/ (x (+) z)",
                              "(y \\/ z) (+) x = (y (+) x) \\/ (z (+) x)"});
    group("odot-over-meet", {"x (.) (y /\\ z) = (x (.) y) /\\ (x (.) z)",
                             "(y /\\ z) (.) x = (y (.) x) /\\ (z (.) x)"});
    group("oplus-over-meet", {"x (+) (y /\\ z) = (x (+) y) /\\ (x (+) z)",
                              "(y /\\ z) (+) x = (y (+) x) /\\ (z (+) x)"});
    group("odot-over-join", {"x (.) (y \\/ z) = (x (.) y) \\/ (x (.) z)",
                             "(y \\/ z) (.) x = (y (.) x) \\/ (z (.) x)"});
    group("sum-product-exchange",
          {"(x (.) y) (+) ((x (+) y) (.) z) = (x (+) (y (.) z)) (.) (y (+) z)",
           "(x (+) y) (.) ((x (.) y) (+) z) = (x (.) (y (+) z)) (+) (y (.) z)"});
    group("oplus-absorption",
          {"(x (.) y) (+) z = ((x (+) y) (.) ((x (.) y) (+) z)) \\/ z",
           "x (+) (y (.) z) = x \\/ ((x (+) (y (.) z)) (.) (y (+) z))"});
    group("odot-absorption",
          {"(x (+) y) (.) z = ((x (.) y) (+) ((x (+) y) (.) z)) /\\ z",
           "x (.) (y (+) z) = x /\\ ((x (.) (y (+) z)) (+) (y (.) z))"});
    return out;
  }();
  return items;
}

Report IndependenceResult::report() const {
  Report r;
  for (const IndependenceItem& it : items) {
    Check c{it.name, Verdict::Inconclusive, std::string(status_name(it.status))};
    if (it.status == SearchStatus::Witness) {
      c.verdict = it.reverified ? Verdict::Pass : Verdict::Fail;
      c.detail = "witness of size " + std::to_string(it.witness->size()) +
                 " violating " + it.violated +
                 (it.reverified ? "" : " (re-verification failed)");
    }
    c.detail += "; " + std::to_string(it.stats.nodes) + " nodes";
    r.add(std::move(c));
  }
  return r;
}

IndependenceResult independence_suite(std::size_t min_size,
                                      std::size_t max_size,
                                      std::uint64_t node_limit) {
  if (min_size < 1 || min_size > max_size) {
    throw AlgebraError("search: empty or invalid size range");
  }
  const auto& items = independence_items();
  IndependenceResult out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    SearchProblem p;
    p.node_limit = node_limit;
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (j == i) continue;
      p.satisfy.insert(p.satisfy.end(), items[j].equations.begin(),
                       items[j].equations.end());
    }
    IndependenceItem item;
    item.name = items[i].name;
    bool limited = false;
    // Size-major, so the smallest witness of any equation is found first.
    for (std::size_t n = min_size; n <= max_size && !item.witness; ++n) {
      p.min_size = p.max_size = n;
      for (const Equation& e : items[i].equations) {
        p.violate = e;
        SearchOutcome o = find_model(p);
        item.stats.nodes += o.stats.nodes;
        item.stats.seconds += o.stats.seconds;
        if (o.status == SearchStatus::Exhausted) limited = true;
        if (o.model) {
          item.status = SearchStatus::Witness;
          item.violated = e.label;
          item.reverified = o.verified && verify_model(p, *o.model);
          item.witness = std::move(o.model);
          break;
        }
      }
    }
    if (!item.witness) {
      item.status = limited ? SearchStatus::Exhausted : SearchStatus::BoundHit;
    }
    switch (item.status) {
      case SearchStatus::Witness:
        ++out.witnesses;
        if (!item.reverified) ++out.discrepancies;
        break;
      case SearchStatus::BoundHit:
        ++out.bound_hits;
        break;
      case SearchStatus::Exhausted:
        ++out.exhausted;
        break;
    }
    out.items.push_back(std::move(item));
  }
  return out;
}

}  // namespace mvmlab
