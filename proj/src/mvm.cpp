#include "mvmlab/mvm.hpp"

#include <algorithm>
#include <array>

namespace mvmlab {

namespace {

AxiomGroup group(std::string name, std::initializer_list<const char*> eqs) {
  AxiomGroup g{std::move(name), {}};
  std::size_t i = 0;
  for (const char* text : eqs) {
    g.equations.push_back(
        parse_equation(text, {}, g.name + "." + std::to_string(++i)));
  }
  return g;
}

std::string op(std::string_view s) { return std::string(s); }

}  // namespace

const std::vector<AxiomGroup>& mvm_axioms() {
  static const std::vector<AxiomGroup> axioms = {
      group("A1",
            {"(x \\/ y) \\/ z = x \\/ (y \\/ z)",
             "(x /\\ y) /\\ z = x /\\ (y /\\ z)", "x \\/ y = y \\/ x",
             "x /\\ y = y /\\ x", "x \\/ (x /\\ y) = x", "x /\\ (x \\/ y) = x",
             "x /\\ (y \\/ z) = (x /\\ y) \\/ (x /\\ z)",
             "x \\/ (y /\\ z) = (x \\/ y) /\\ (x \\/ z)"}),
      group("A2", {"(x (+) y) (+) z = x (+) (y (+) z)", "x (+) y = y (+) x",
                   "x (+) 0 = x", "(x (.) y) (.) z = x (.) (y (.) z)",
                   "x (.) y = y (.) x", "x (.) 1 = x"}),
      group("A3", {"x (+) (y \\/ z) = (x (+) y) \\/ (x (+) z)",
                   "x (+) (y /\\ z) = (x (+) y) /\\ (x (+) z)",
                   "x (.) (y \\/ z) = (x (.) y) \\/ (x (.) z)",
                   "x (.) (y /\\ z) = (x (.) y) /\\ (x (.) z)"}),
      group("A4",
            {"(x (+) y) (.) ((x (.) y) (+) z) = (x (.) (y (+) z)) (+) (y (.) z)"}),
      group("A5",
            {"(x (.) y) (+) ((x (+) y) (.) z) = (x (+) (y (.) z)) (.) (y (+) z)"}),
      group("A6",
            {"(x (.) y) (+) z = ((x (+) y) (.) ((x (.) y) (+) z)) \\/ z"}),
      group("A7",
            {"(x (+) y) (.) z = ((x (.) y) (+) ((x (+) y) (.) z)) /\\ z"}),
  };
  return axioms;
}

const std::vector<AxiomGroup>& mv_axioms() {
  static const std::vector<AxiomGroup> axioms = {
      group("commutative-monoid", {"(x (+) y) (+) z = x (+) (y (+) z)",
                                   "x (+) y = y (+) x", "x (+) 0 = x"}),
      group("absorbing-top", {"~0 (+) x = ~0"}),
      group("involution", {"~~x = x"}),
      group("mv-law", {"~(~x (+) y) (+) y = ~(~y (+) x) (+) x"}),
  };
  return axioms;
}

const std::vector<std::string>& mvm_operation_names() {
  static const std::vector<std::string> names = {
      op(sig::kOplus), op(sig::kOdot), op(sig::kJoin), op(sig::kMeet)};
  return names;
}

const std::vector<std::string>& mvm_constant_names() {
  static const std::vector<std::string> names = {op(sig::kZero),
                                                 op(sig::kOne)};
  return names;
}

MvmAlgebra MvmAlgebra::unverified(FiniteAlgebra base) {
  MvmAlgebra a;
  auto binary = [&](std::string_view name) {
    const Operation& o = base.operation(name);
    if (o.arity != 2) {
      throw AlgebraError("operation '" + o.name + "' must be binary");
    }
    return o.table;
  };
  a.oplus_ = binary(sig::kOplus);
  a.odot_ = binary(sig::kOdot);
  a.join_ = binary(sig::kJoin);
  a.meet_ = binary(sig::kMeet);
  a.zero_ = base.constant(sig::kZero);
  a.one_ = base.constant(sig::kOne);
  a.base_ = std::move(base);
  return a;
}

std::string AxiomFailure::describe() const {
  std::string out = axiom + " fails: " + equation + " at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ", ";
    if (i < var_names.size()) out += var_names[i] + "=";
    out += std::to_string(witness[i]);
  }
  return out + ")";
}

namespace {

std::optional<AxiomFailure> first_failure(
    const FiniteAlgebra& algebra, const std::vector<AxiomGroup>& axioms) {
  for (const AxiomGroup& g : axioms) {
    for (const Equation& e : g.equations) {
      HoldsResult r = holds(algebra, e);
      if (!r) {
        return AxiomFailure{g.name, e.to_string(), e.var_names, r.witness};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

MvmCheck check_mvm(const FiniteAlgebra& algebra) {
  MvmAlgebra bound = MvmAlgebra::unverified(algebra);
  MvmCheck out;
  out.failure = first_failure(bound.base(), mvm_axioms());
  if (!out.failure) {
    bound.verified_ = true;
    out.algebra = std::move(bound);
  }
  return out;
}

MvmAlgebra require_mvm(const FiniteAlgebra& algebra) {
  MvmCheck c = check_mvm(algebra);
  if (!c.passed()) {
    throw AlgebraError(algebra.name() + ": " + c.failure->describe());
  }
  return std::move(*c.algebra);
}

Element sigma(const MvmAlgebra& a, Element x, Element y, Element z) {
  auto s1 = [&](Element p, Element q, Element r) {
    return a.odot(a.oplus(p, q), a.oplus(a.odot(p, q), r));
  };
  auto s2 = [&](Element p, Element q, Element r) {
    return a.oplus(a.odot(p, q), a.odot(a.oplus(p, q), r));
  };
  auto s3 = [&](Element p, Element q, Element r) {
    return a.oplus(a.odot(p, a.oplus(q, r)), a.odot(q, r));
  };
  auto s4 = [&](Element p, Element q, Element r) {
    return a.odot(a.oplus(p, a.odot(q, r)), a.oplus(q, r));
  };
  const Element value = s1(x, y, z);
  std::array<Element, 3> args{x, y, z};
  std::sort(args.begin(), args.end());
  do {
    const auto [p, q, r] = args;
    if (s1(p, q, r) != value || s2(p, q, r) != value ||
        s3(p, q, r) != value || s4(p, q, r) != value) {
      throw AlgebraError("sigma terms disagree at (" + std::to_string(x) +
                         ", " + std::to_string(y) + ", " + std::to_string(z) +
                         ")");
    }
  } while (std::next_permutation(args.begin(), args.end()));
  return value;
}

bool is_good_pair(const MvmAlgebra& a, Element x0, Element x1) {
  return a.oplus(x0, x1) == x0 && a.odot(x0, x1) == x1;
}

namespace {

/// Runs `pred` over all triples and records the first failing one.
template <class Pred>
void check_all3(Report& report, const MvmAlgebra& a, std::string name,
                Pred pred) {
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (!pred(x, y, z)) {
          report.add(std::move(name), false,
                     "counterexample (" + std::to_string(x) + ", " +
                         std::to_string(y) + ", " + std::to_string(z) + ")");
          return;
        }
      }
    }
  }
  report.add(std::move(name), true);
}

}  // namespace

Report lemma_suite(const MvmAlgebra& a) {
  Report r;
  const Element zero = a.zero(), one = a.one();
  const auto n = static_cast<Element>(a.size());

  check_all3(r, a, "bounded-lattice", [&](Element x, Element, Element) {
    return a.leq(zero, x) && a.leq(x, one);
  });
  check_all3(r, a, "absorbing", [&](Element x, Element, Element) {
    return a.oplus(x, one) == one && a.odot(x, zero) == zero;
  });
  check_all3(r, a, "order-preserving", [&](Element x, Element y, Element z) {
    bool ok = a.leq(x, a.oplus(x, y)) && a.leq(a.odot(x, y), x);
    if (a.leq(x, y)) {
      ok = ok && a.leq(a.oplus(x, z), a.oplus(y, z)) &&
           a.leq(a.odot(x, z), a.odot(y, z));
    }
    return ok;
  });
  // Two-sided monotonicity needs four variables; covered by pairs of pairs.
  {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (Element xp = 0; xp < n && ok; ++xp)
        for (Element y = 0; y < n && ok; ++y)
          for (Element yp = 0; yp < n && ok; ++yp) {
            if (!a.leq(x, xp) || !a.leq(y, yp)) continue;
            ok = a.leq(a.oplus(x, y), a.oplus(xp, yp)) &&
                 a.leq(a.odot(x, y), a.odot(xp, yp));
          }
    r.add("order-preserving-two-sided", ok);
  }
  check_all3(r, a, "almost-associative", [&](Element x, Element y, Element z) {
    return a.leq(a.odot(x, a.oplus(y, z)), a.oplus(a.odot(x, y), z));
  });
  check_all3(r, a, "oplus-odot-good-pair", [&](Element x, Element y, Element) {
    return is_good_pair(a, a.oplus(x, y), a.odot(x, y));
  });
  {
    bool ok = true;
    std::string detail;
    try {
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          for (Element z = 0; z < n; ++z) sigma(a, x, y, z);
    } catch (const AlgebraError& e) {
      ok = false;
      detail = e.what();
    }
    r.add("sigma-permutations", ok, detail);
  }
  check_all3(r, a, "switch-if-good", [&](Element x0, Element x1, Element y) {
    if (!is_good_pair(a, x0, x1)) return true;
    Element lhs = a.odot(x0, a.oplus(x1, y));
    return lhs == a.oplus(x1, a.odot(x0, y)) &&
           lhs == a.odot(a.oplus(x0, x1), a.oplus(a.odot(x0, x1), y));
  });
  check_all3(r, a, "still-good", [&](Element x, Element y, Element u) {
    if (!is_good_pair(a, x, y)) return true;
    return is_good_pair(a, a.oplus(x, u), y) && is_good_pair(a, x, a.odot(y, u));
  });
  check_all3(r, a, "good-transitive", [&](Element x, Element y, Element z) {
    if (!is_good_pair(a, x, y) || !is_good_pair(a, y, z)) return true;
    return is_good_pair(a, x, z);
  });
  {
    bool ok = true;
    for (Element x0 = 0; x0 < n && ok; ++x0)
      for (Element x1 = 0; x1 < n && ok; ++x1) {
        if (!is_good_pair(a, x0, x1)) continue;
        for (Element y0 = 0; y0 < n && ok; ++y0)
          for (Element y1 = 0; y1 < n && ok; ++y1) {
            if (!is_good_pair(a, y0, y1)) continue;
            ok = is_good_pair(a, a.join(x0, y0), a.join(x1, y1)) &&
                 is_good_pair(a, a.meet(x0, y0), a.meet(x1, y1));
          }
      }
    r.add("join-meet-of-good-pairs", ok);
  }
  {
    // The order dual (odot, oplus, meet, join, one, zero) is again an MVM.
    FiniteAlgebra dual(a.base().name() + "_dual", a.size());
    dual.add_operation(op(sig::kOplus), 2, a.base().operation(sig::kOdot).table);
    dual.add_operation(op(sig::kOdot), 2, a.base().operation(sig::kOplus).table);
    dual.add_operation(op(sig::kJoin), 2, a.base().operation(sig::kMeet).table);
    dual.add_operation(op(sig::kMeet), 2, a.base().operation(sig::kJoin).table);
    dual.add_constant(op(sig::kZero), one);
    dual.add_constant(op(sig::kOne), zero);
    MvmCheck c = check_mvm(dual);
    r.add("dual-is-mvm", c.passed(),
          c.passed() ? std::string() : c.failure->describe());
  }
  return r;
}

bool has_mv_negation(const MvmAlgebra& a) {
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    bool found = false;
    for (Element y = 0; y < n && !found; ++y) {
      found = a.oplus(x, y) == a.one() && a.odot(x, y) == a.zero();
    }
    if (!found) return false;
  }
  return true;
}

MvCheck check_mv(const FiniteAlgebra& algebra) {
  const Operation& plus = algebra.operation(sig::kOplus);
  const Operation& neg = algebra.operation(sig::kNeg);
  if (plus.arity != 2 || neg.arity != 1) {
    throw AlgebraError("MV signature needs binary oplus and unary neg");
  }
  FiniteAlgebra base(algebra.name(), algebra.size());
  for (const std::string& note : algebra.notes()) base.add_note(note);
  base.add_operation(plus.name, 2, plus.table);
  base.add_operation(neg.name, 1, neg.table);
  base.add_constant(op(sig::kZero), algebra.constant(sig::kZero));
  MvCheck out;
  out.failure = first_failure(base, mv_axioms());
  if (!out.failure) out.algebra = MvAlgebra(std::move(base));
  return out;
}

MvmAlgebra mv_to_mvm(const MvAlgebra& mv) {
  const FiniteAlgebra& b = mv.base();
  const std::size_t n = b.size();
  const auto& plus = b.operation(sig::kOplus).table;
  const auto& neg = b.operation(sig::kNeg).table;
  auto oplus = [&](Element x, Element y) { return plus[x * n + y]; };
  auto odot = [&](Element x, Element y) {
    return neg[oplus(neg[x], neg[y])];
  };
  std::vector<Element> t_odot(n * n), t_join(n * n), t_meet(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      t_odot[x * n + y] = odot(x, y);
      t_join[x * n + y] = oplus(odot(x, neg[y]), y);
      t_meet[x * n + y] = odot(x, oplus(neg[x], y));
    }
  }
  FiniteAlgebra out(b.name(), n);
  for (const std::string& note : b.notes()) out.add_note(note);
  out.add_operation(op(sig::kOplus), 2, plus);
  out.add_operation(op(sig::kOdot), 2, std::move(t_odot));
  out.add_operation(op(sig::kJoin), 2, std::move(t_join));
  out.add_operation(op(sig::kMeet), 2, std::move(t_meet));
  const Element zero = b.constant(sig::kZero);
  out.add_constant(op(sig::kZero), zero);
  out.add_constant(op(sig::kOne), neg[zero]);
  return require_mvm(out);
}

MvAlgebra lukasiewicz_chain(std::size_t n) {
  if (n == 0) throw AlgebraError("lukasiewicz_chain: n must be positive");
  const auto top = static_cast<Element>(n - 1);
  FiniteAlgebra a("lukasiewicz_" + std::to_string(n), n);
  std::vector<Element> plus(n * n), neg(n);
  for (Element x = 0; x < n; ++x) {
    neg[x] = top - x;
    for (Element y = 0; y < n; ++y) plus[x * n + y] = std::min(x + y, top);
  }
  a.add_operation(op(sig::kOplus), 2, std::move(plus));
  a.add_operation(op(sig::kNeg), 1, std::move(neg));
  a.add_constant(op(sig::kZero), 0);
  MvCheck c = check_mv(a);
  if (!c.passed()) throw AlgebraError(c.failure->describe());
  return std::move(*c.algebra);
}

MvmAlgebra lukasiewicz_mvm(std::size_t n) {
  return mv_to_mvm(lukasiewicz_chain(n));
}

FiniteAlgebra remark_three_element() {
  // 0 < a < 1 encoded as 0 < 1 < 2. With a (+) a = a the sum is the chain
  // maximum; with a (.) a = 0 the product is the truncated one of the
  // three-element chain.
  constexpr std::size_t n = 3;
  FiniteAlgebra a("remark_3elem", n);
  a.add_note(" Three-element chain {0 < a < 1}, a = element 1.");
  a.add_note(" Fixed: a (+) a = a and a (.) a = 0.");
  a.add_note(" Forced: 0 is the unit of (+), 1 absorbs under (+);");
  a.add_note(" 1 is the unit of (.), 0 absorbs under (.); lattice is the chain.");
  std::vector<Element> plus(n * n), dot(n * n), join(n * n), meet(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      plus[x * n + y] = std::max(x, y);
      dot[x * n + y] = x + y >= 2 ? x + y - 2 : 0;
      join[x * n + y] = std::max(x, y);
      meet[x * n + y] = std::min(x, y);
    }
  }
  a.add_operation(op(sig::kOplus), 2, std::move(plus));
  a.add_operation(op(sig::kOdot), 2, std::move(dot));
  a.add_operation(op(sig::kJoin), 2, std::move(join));
  a.add_operation(op(sig::kMeet), 2, std::move(meet));
  a.add_constant(op(sig::kZero), 0);
  a.add_constant(op(sig::kOne), 2);
  return a;
}

FiniteAlgebra lattice_as_mvm(std::string name, std::size_t n,
                             const std::vector<std::vector<bool>>& leq) {
  auto bound = [&](Element x, Element y, bool upper) -> Element {
    std::vector<Element> cands;
    for (Element z = 0; z < n; ++z) {
      if (upper ? (leq[x][z] && leq[y][z]) : (leq[z][x] && leq[z][y])) {
        cands.push_back(z);
      }
    }
    for (Element c : cands) {
      bool extreme = true;
      for (Element d : cands) {
        extreme = extreme && (upper ? leq[c][d] : leq[d][c]);
      }
      if (extreme) return c;
    }
    throw AlgebraError("lattice_as_mvm: order is not a lattice");
  };
  std::vector<Element> join(n * n), meet(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      join[x * n + y] = bound(x, y, true);
      meet[x * n + y] = bound(x, y, false);
    }
  }
  FiniteAlgebra a(std::move(name), n);
  a.add_operation(op(sig::kOplus), 2, join);
  a.add_operation(op(sig::kOdot), 2, meet);
  a.add_operation(op(sig::kJoin), 2, std::move(join));
  a.add_operation(op(sig::kMeet), 2, std::move(meet));
  a.add_constant(op(sig::kZero), 0);
  a.add_constant(op(sig::kOne), static_cast<Element>(n - 1));
  return a;
}

}  // namespace mvmlab
