#include "mvmlab/goodseq.hpp"

#include <algorithm>

namespace mvmlab {

MvmRef share(MvmAlgebra algebra) {
  return std::make_shared<const MvmAlgebra>(std::move(algebra));
}

GoodSequence GoodSequence::make(MvmRef algebra, std::vector<Element> raw) {
  const MvmAlgebra& a = *algebra;
  for (Element x : raw) {
    if (x >= a.size()) throw AlgebraError("sequence entry outside the carrier");
  }
  while (!raw.empty() && raw.back() == a.zero()) raw.pop_back();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Element next = i + 1 < raw.size() ? raw[i + 1] : a.zero();
    if (!is_good_pair(a, raw[i], next)) {
      throw GoodSequenceError("not a good sequence: (x" + std::to_string(i) +
                                  ", x" + std::to_string(i + 1) +
                                  ") is not a good pair",
                              i);
    }
  }
  return GoodSequence(std::move(algebra), std::move(raw));
}

GoodSequence GoodSequence::zero(MvmRef algebra) {
  return GoodSequence(std::move(algebra), {});
}

GoodSequence GoodSequence::one(MvmRef algebra) {
  Element top = algebra->one();
  return make(std::move(algebra), {top});
}

GoodSequence GoodSequence::single(MvmRef algebra, Element x) {
  return make(std::move(algebra), {x});
}

GoodSequence GoodSequence::multiple_of_one(MvmRef algebra, std::size_t n) {
  std::vector<Element> raw(n, algebra->one());
  return make(std::move(algebra), std::move(raw));
}

Element GoodSequence::at(std::size_t n) const {
  return n < entries_.size() ? entries_[n] : algebra_->zero();
}

std::string GoodSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

bool GoodSequence::operator<(const GoodSequence& other) const {
  const std::size_t n = std::max(length(), other.length());
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i) != other.at(i)) return at(i) < other.at(i);
  }
  return false;
}

GoodSequence gs_make(MvmRef algebra, std::vector<Element> raw) {
  return GoodSequence::make(std::move(algebra), std::move(raw));
}

void require_same_algebra(const GoodSequence& a, const GoodSequence& b) {
  if (a.algebra_ref() != b.algebra_ref()) {
    throw AlgebraError("good sequences live over different algebras");
  }
}

namespace {

template <class F>
GoodSequence pointwise(const GoodSequence& a, const GoodSequence& b, F f) {
  require_same_algebra(a, b);
  const std::size_t n = std::max(a.length(), b.length());
  std::vector<Element> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f(a.at(i), b.at(i));
  return GoodSequence::make(a.algebra_ref(), std::move(out));
}

}  // namespace

GoodSequence gs_join(const GoodSequence& a, const GoodSequence& b) {
  const MvmAlgebra& m = a.algebra();
  return pointwise(a, b, [&](Element x, Element y) { return m.join(x, y); });
}

GoodSequence gs_meet(const GoodSequence& a, const GoodSequence& b) {
  const MvmAlgebra& m = a.algebra();
  return pointwise(a, b, [&](Element x, Element y) { return m.meet(x, y); });
}

std::vector<Element> gs_sum_product_form(const GoodSequence& a,
                                         const GoodSequence& b) {
  require_same_algebra(a, b);
  const MvmAlgebra& m = a.algebra();
  const std::size_t len = a.length() + b.length();
  std::vector<Element> c(len + 1);
  for (std::size_t n = 0; n <= len; ++n) {
    Element acc = m.one();
    for (std::size_t i = 0; i <= n; ++i) {
      acc = m.odot(acc, m.oplus(a.at(i), b.at(n - i)));
    }
    c[n] = acc;
  }
  return c;
}

std::vector<Element> gs_sum_sum_form(const GoodSequence& a,
                                     const GoodSequence& b) {
  require_same_algebra(a, b);
  const MvmAlgebra& m = a.algebra();
  const std::size_t len = a.length() + b.length();
  std::vector<Element> c(len + 1);
  for (std::size_t n = 0; n <= len; ++n) {
    Element acc = b.at(n);
    for (std::size_t i = 0; i < n; ++i) {
      acc = m.oplus(acc, m.odot(a.at(i), b.at(n - 1 - i)));
    }
    c[n] = m.oplus(acc, a.at(n));
  }
  return c;
}

GoodSequence gs_sum(const GoodSequence& a, const GoodSequence& b) {
  std::vector<Element> c = gs_sum_product_form(a, b);
  std::vector<Element> d = gs_sum_sum_form(a, b);
  if (c != d) {
    throw AlgebraError("sum formulas disagree for " + a.to_string() + " + " +
                       b.to_string());
  }
  return GoodSequence::make(a.algebra_ref(), std::move(c));
}

GoodSequence gs_ominus1(const GoodSequence& a) {
  if (a.is_zero()) return a;
  std::vector<Element> rest(a.entries().begin() + 1, a.entries().end());
  return GoodSequence::make(a.algebra_ref(), std::move(rest));
}

bool gs_leq(const GoodSequence& a, const GoodSequence& b) {
  require_same_algebra(a, b);
  const std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.algebra().leq(a.at(i), b.at(i))) return false;
  }
  return true;
}

GoodSequence gs_map(const MvmRef& target, std::span<const Element> f,
                    const GoodSequence& a) {
  if (!is_homomorphism(a.algebra().base(), target->base(), f)) {
    throw AlgebraError("gs_map: map is not an MVM homomorphism");
  }
  std::vector<Element> image;
  image.reserve(a.length());
  for (Element x : a.entries()) image.push_back(f[x]);
  return GoodSequence::make(target, std::move(image));
}

std::pair<GoodSequence, GoodSequence> gs_decompose_split(
    const GoodSequence& a) {
  if (a.is_zero()) {
    throw GoodSequenceError("cannot split the zero sequence", 0);
  }
  std::vector<Element> prefix(a.entries().begin(), a.entries().end() - 1);
  GoodSequence head = GoodSequence::make(a.algebra_ref(), std::move(prefix));
  GoodSequence last = GoodSequence::single(a.algebra_ref(), a.entries().back());
  if (!(gs_sum(head, last) == a)) {
    throw AlgebraError("split of " + a.to_string() + " does not recombine");
  }
  return {std::move(head), std::move(last)};
}

std::vector<std::vector<Element>> good_pair_graph(const MvmAlgebra& a) {
  const auto n = static_cast<Element>(a.size());
  std::vector<std::vector<Element>> succ(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (is_good_pair(a, x, y)) succ[x].push_back(y);
    }
  }
  return succ;
}

std::vector<GoodSequence> gs_enumerate(const MvmRef& algebra,
                                       std::size_t max_len) {
  const MvmAlgebra& a = *algebra;
  const auto graph = good_pair_graph(a);
  std::vector<std::vector<Element>> found;
  std::vector<Element> path;
  // Paths in the good-pair graph whose last vertex is followed by 0.
  auto walk = [&](auto& self) -> void {
    if (!path.empty() && path.back() != a.zero() &&
        is_good_pair(a, path.back(), a.zero())) {
      found.push_back(path);
    }
    if (path.size() == max_len) return;
    const auto& next = path.empty() ? std::vector<Element>{} : graph[path.back()];
    if (path.empty()) {
      for (Element x = 0; x < a.size(); ++x) {
        if (x == a.zero()) continue;
        path.push_back(x);
        self(self);
        path.pop_back();
      }
      return;
    }
    for (Element y : next) {
      if (y == a.zero()) continue;
      path.push_back(y);
      self(self);
      path.pop_back();
    }
  };
  walk(walk);
  std::vector<GoodSequence> out;
  out.reserve(found.size() + 1);
  out.push_back(GoodSequence::zero(algebra));
  for (auto& raw : found) out.push_back(GoodSequence::make(algebra, raw));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mvmlab
