#include "mvmlab/equivalence.hpp"

namespace mvmlab {

namespace {

std::string fraction(std::int64_t k, std::int64_t m) {
  if (m == 1) return std::to_string(k);
  return std::to_string(k) + "/" + std::to_string(m);
}

std::int64_t checked_denominator(std::int64_t m) {
  if (m < 1) throw AlgebraError("denominator must be positive");
  return m;
}

}  // namespace

ScaledNatPUlm::ScaledNatPUlm(std::int64_t denominator, std::int64_t bound)
    : m_(checked_denominator(denominator)),
      bound_(bound < 0 ? 4 * denominator : bound) {}

std::vector<std::int64_t> ScaledNatPUlm::sample() const {
  std::vector<Element> out;
  for (Element k = 0; k <= bound_; ++k) out.push_back(k);
  return out;
}

std::vector<std::int64_t> ScaledNatPUlm::unit_interval() const {
  std::vector<Element> out;
  for (Element k = 0; k <= m_; ++k) out.push_back(k);
  return out;
}

std::string ScaledNatPUlm::describe(Element x) const { return fraction(x, m_); }

ScaledIntUlm::ScaledIntUlm(std::int64_t denominator, std::int64_t bound)
    : m_(checked_denominator(denominator)),
      bound_(bound < 0 ? 4 * denominator : bound) {}

std::vector<std::int64_t> ScaledIntUlm::sample() const {
  std::vector<Element> out;
  for (Element k = -bound_; k <= bound_; ++k) out.push_back(k);
  return out;
}

std::vector<std::int64_t> ScaledIntUlm::unit_interval() const {
  std::vector<Element> out;
  for (Element k = 0; k <= m_; ++k) out.push_back(k);
  return out;
}

std::string ScaledIntUlm::describe(Element x) const { return fraction(x, m_); }

GoodSeqPUlm::GoodSeqPUlm(MvmRef algebra, std::size_t max_len)
    : algebra_(std::move(algebra)), max_len_(max_len) {
  if (!algebra_) throw AlgebraError("GoodSeqPUlm: null algebra");
}

std::vector<GoodSequence> GoodSeqPUlm::sample() const {
  return gs_enumerate(algebra_, max_len_);
}

std::vector<GoodSequence> GoodSeqPUlm::unit_interval() const {
  std::vector<GoodSequence> out;
  for (mvmlab::Element x = 0; x < algebra_->size(); ++x) {
    out.push_back(GoodSequence::single(algebra_, x));
  }
  return out;
}

TranslationUlm<GoodSeqPUlm> xi(MvmRef algebra, std::size_t max_len,
                               std::size_t offset_bound) {
  return TranslationUlm<GoodSeqPUlm>(GoodSeqPUlm(std::move(algebra), max_len),
                                     offset_bound);
}

bool is_mvm_isomorphism(const MvmAlgebra& a, const MvmAlgebra& b,
                        const std::vector<Element>& map) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (Element y : map) {
    if (y >= b.size() || hit[y]) return false;
    hit[y] = true;
  }
  return is_homomorphism(a.base(), b.base(), map);
}

Eta1 eta1(const MvmRef& algebra) {
  GoodSeqPUlm gs(algebra, 1);
  Eta1 out{u_interval(gs), {}};
  for (Element x = 0; x < algebra->size(); ++x) {
    auto i = out.target.index_of(GoodSequence::single(algebra, x));
    if (!i) throw AlgebraError("eta1: (x) missing from U(GS(A))");
    out.map.push_back(*i);
  }
  if (!is_mvm_isomorphism(*algebra, *out.target.algebra, out.map)) {
    throw AlgebraError("eta1 is not an isomorphism");
  }
  return out;
}

GammaXi gamma_xi_iso(const MvmRef& algebra) {
  auto t = xi(algebra, 1, 1);
  GammaXi out{gamma(t), {}};
  for (Element x = 0; x < algebra->size(); ++x) {
    auto i = out.target.index_of(t.make(GoodSequence::single(algebra, x), 0));
    if (!i) throw AlgebraError("gamma_xi: [(x), 0] missing from the interval");
    out.map.push_back(*i);
  }
  if (!is_mvm_isomorphism(*algebra, *out.target.algebra, out.map)) {
    throw AlgebraError("A -> gamma(xi(A)) is not an isomorphism");
  }
  return out;
}

}  // namespace mvmlab
