#include "jetspace/term_order.hpp"

#include "jetspace/errors.hpp"

namespace jetspace {

namespace {

std::strong_ordering cmp_u64(std::uint64_t a, std::uint64_t b) { return a <=> b; }

std::uint64_t range_degree(const Monomial& m, std::size_t lo, std::size_t hi) {
  if (lo == 0 && hi == m.arity()) return m.degree();
  std::uint64_t d = 0;
  for (std::size_t i = lo; i < hi; ++i) d += m[i];
  return d;
}

std::strong_ordering lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering revlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = hi; i > lo; --i)
    if (a[i - 1] != b[i - 1]) return b[i - 1] <=> a[i - 1];
  return std::strong_ordering::equal;
}

}  // namespace

TermOrder::TermOrder(Kind kind) : kind_(kind) {
  switch (kind) {
    case Kind::lex: key_ = "lex"; break;
    case Kind::grlex: key_ = "grlex"; break;
    case Kind::grevlex: key_ = "grevlex"; break;
    default: break;
  }
}

TermOrder TermOrder::block(std::size_t split, const TermOrder& inner) {
  TermOrder o(Kind::block);
  o.split_ = split;
  o.inner_ = std::make_shared<const TermOrder>(inner);
  o.key_ = "block(" + std::to_string(split) + "," + inner.key_ + ")";
  return o;
}

TermOrder TermOrder::weight(std::vector<std::int64_t> weights, const TermOrder& tiebreak) {
  TermOrder o(Kind::weight);
  o.key_ = "weight(";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) throw PreconditionError("weight orders need non-negative weights");
    o.key_ += (i ? "," : "") + std::to_string(weights[i]);
  }
  o.key_ += ";" + tiebreak.key_ + ")";
  o.weights_ = std::move(weights);
  o.inner_ = std::make_shared<const TermOrder>(tiebreak);
  return o;
}

std::strong_ordering TermOrder::compare_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                              std::size_t hi) const {
  switch (kind_) {
    case Kind::lex:
      return lex_range(a, b, lo, hi);
    case Kind::grlex: {
      if (auto c = cmp_u64(range_degree(a, lo, hi), range_degree(b, lo, hi)); c != 0) return c;
      return lex_range(a, b, lo, hi);
    }
    case Kind::grevlex: {
      if (auto c = cmp_u64(range_degree(a, lo, hi), range_degree(b, lo, hi)); c != 0) return c;
      return revlex_range(a, b, lo, hi);
    }
    case Kind::block: {
      const std::size_t mid = std::min(hi, lo + split_);
      if (auto c = inner_->compare_range(a, b, lo, mid); c != 0) return c;
      return inner_->compare_range(a, b, mid, hi);
    }
    case Kind::weight: {
      if (weights_.size() != hi - lo) throw PreconditionError("weight vector length does not match ring arity");
      std::int64_t wa = 0;
      std::int64_t wb = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        wa += weights_[i - lo] * static_cast<std::int64_t>(a[i]);
        wb += weights_[i - lo] * static_cast<std::int64_t>(b[i]);
      }
      if (wa != wb) return wa <=> wb;
      return inner_->compare_range(a, b, lo, hi);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace jetspace
