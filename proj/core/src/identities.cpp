#include "jsplit/identities.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <unordered_map>

#include "jsplit/errors.hpp"

namespace jsplit {

void IdentityReport::canonicalize() {
  std::sort(violations.begin(), violations.end(),
            [](const Violation& a, const Violation& b) { return a.indices < b.indices; });
}

IdentityReport check_supercommutative(const Superalgebra& a) {
  IdentityReport report;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      SparseVector residual = a.product(i, j);
      const int s = koszul(a.parity(i), a.parity(j));
      for (const auto& t : a.product(j, i)) add_term(residual, t.index, -s * t.coeff);
      if (!residual.empty()) report.violations.push_back({{i, j}, std::move(residual)});
    }
  }
  return report;
}

namespace {

/// int64 scalar whose arithmetic throws Overflow instead of wrapping.
struct Overflow {};

struct CheckedInt {
  std::int64_t v = 0;

  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    CheckedInt r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  CheckedInt& operator+=(CheckedInt b) {
    if (__builtin_add_overflow(v, b.v, &v)) throw Overflow{};
    return *this;
  }
};

int sgn(CheckedInt x) { return (x.v > 0) - (x.v < 0); }

template <class S>
struct STerm {
  std::size_t index;
  S coeff;
};

template <class S>
using SVec = std::vector<STerm<S>>;

template <class S>
void add_scaled(SVec<S>& v, std::size_t index, const std::type_identity_t<S>& coeff) {
  if (sgn(coeff) == 0) return;
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const STerm<S>& t, std::size_t i) { return t.index < i; });
  if (it != v.end() && it->index == index) {
    it->coeff += coeff;
    if (sgn(it->coeff) == 0) v.erase(it);
  } else {
    v.insert(it, STerm<S>{index, coeff});
  }
}

/// Structure constants over scalar S with the supports each scan needs, so that only chains
/// that can produce a nonzero product are visited.
template <class S>
struct Table {
  std::size_t d = 0;
  std::vector<int> parity;
  std::vector<SVec<S>> products;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<std::size_t>> right;         // right[i]: q with x_i·x_q ≠ 0
  std::vector<std::vector<std::size_t>> left;          // left[q]: i with x_i·x_q ≠ 0
  std::vector<std::vector<std::size_t>> pairs_with;    // pairs whose product involves x_k
  std::vector<std::vector<std::size_t>> triples_with;  // triples whose value involves x_k

  struct Triple {
    std::size_t first;
    std::size_t second;
    std::size_t third;
    SVec<S> value;
  };
  std::vector<Triple> triples;  // (y, t, z) -> (yt)z

  const SVec<S>& product(std::size_t i, std::size_t j) const { return products[i * d + j]; }

  SVec<S> mul(const SVec<S>& v, std::size_t j) const {
    SVec<S> out;
    for (const auto& t : v)
      for (const auto& p : product(t.index, j)) add_scaled(out, p.index, t.coeff * p.coeff);
    return out;
  }

  SVec<S> mul(const SVec<S>& v, const SVec<S>& w) const {
    SVec<S> out;
    for (const auto& a : v)
      for (const auto& b : w) {
        const auto& ab = product(a.index, b.index);
        if (ab.empty()) continue;
        const S s = a.coeff * b.coeff;
        for (const auto& p : ab) add_scaled(out, p.index, s * p.coeff);
      }
    return out;
  }

  void index() {
    right.assign(d, {});
    left.assign(d, {});
    pairs_with.assign(d, {});
    triples_with.assign(d, {});
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) {
        if (product(p, q).empty()) continue;
        right[p].push_back(q);
        left[q].push_back(p);
        for (const auto& t : product(p, q)) pairs_with[t.index].push_back(pairs.size());
        pairs.emplace_back(p, q);
      }
    for (const auto& [p, q] : pairs)
      for (const std::size_t r : right_partners(product(p, q))) {
        SVec<S> v = mul(product(p, q), r);
        if (v.empty()) continue;
        for (const auto& t : v) triples_with[t.index].push_back(triples.size());
        triples.push_back({p, q, r, std::move(v)});
      }
  }

  /// Indices q with v·x_q possibly nonzero.
  std::vector<std::size_t> right_partners(const SVec<S>& v) const {
    std::vector<std::size_t> out;
    for (const auto& t : v) out.insert(out.end(), right[t.index].begin(), right[t.index].end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

Table<Rational> rational_table(const Superalgebra& a) {
  Table<Rational> t;
  t.d = a.dim();
  for (std::size_t i = 0; i < t.d; ++i) t.parity.push_back(bit(a.parity(i)));
  t.products.resize(t.d * t.d);
  for (std::size_t i = 0; i < t.d; ++i)
    for (std::size_t j = 0; j < t.d; ++j)
      for (const auto& term : a.product(i, j)) t.products[i * t.d + j].push_back({term.index, term.coeff});
  t.index();
  return t;
}

/// Constants scaled by the common denominator D; empty when D or a scaled constant is too large
/// for a degree-3 product chain to stay comfortably inside int64.
std::optional<std::pair<Table<CheckedInt>, Rational>> integer_table(const Superalgebra& a) {
  constexpr long kLimit = 1L << 16;
  mpz_class denom = 1;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& term : a.product(i, j)) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), term.coeff.get_den_mpz_t());
  if (denom > kLimit) return std::nullopt;
  Table<CheckedInt> t;
  t.d = a.dim();
  for (std::size_t i = 0; i < t.d; ++i) t.parity.push_back(bit(a.parity(i)));
  t.products.resize(t.d * t.d);
  for (std::size_t i = 0; i < t.d; ++i)
    for (std::size_t j = 0; j < t.d; ++j)
      for (const auto& term : a.product(i, j)) {
        const mpz_class scaled = term.coeff.get_num() * (denom / term.coeff.get_den());
        if (abs(scaled) > kLimit) return std::nullopt;
        t.products[i * t.d + j].push_back({term.index, CheckedInt{scaled.get_si()}});
      }
  t.index();
  const Rational d(denom);
  return std::make_pair(std::move(t), Rational(d * d * d));
}

/// Deduplicated union of lists[j] over j in `keys`.
class Candidates {
 public:
  explicit Candidates(std::size_t universe) : seen_(universe, 0) {}

  template <class Keys>
  const std::vector<std::size_t>& collect(const Keys& keys, const std::vector<std::vector<std::size_t>>& lists) {
    ++epoch_;
    out_.clear();
    for (const std::size_t j : keys) {
      for (const std::size_t c : lists[j]) {
        if (seen_[c] == epoch_) continue;
        seen_[c] = epoch_;
        out_.push_back(c);
      }
    }
    return out_;
  }

 private:
  std::vector<unsigned> seen_;
  unsigned epoch_ = 0;
  std::vector<std::size_t> out_;
};

template <class S>
struct RawViolation {
  std::array<std::size_t, 4> indices;
  SVec<S> residual;
};

template <class S>
void scan_x(const Table<S>& tab, std::size_t x, std::vector<RawViolation<S>>& out) {
  const std::size_t d = tab.d;
  const auto key = [d](std::size_t y, std::size_t z, std::size_t t) { return (y * d + z) * d + t; };
  const auto par = [&tab](std::size_t i) { return tab.parity[i]; };
  std::unordered_map<std::size_t, SVec<S>> acc;
  const auto add = [&acc](std::size_t k, int sign, const SVec<S>& v) {
    if (v.empty()) return;
    auto& slot = acc[k];
    for (const auto& t : v) add_scaled(slot, t.index, sign < 0 ? S{-1} * t.coeff : t.coeff);
  };
  const int px = par(x);
  Candidates pair_candidates(tab.pairs.size());
  Candidates triple_candidates(tab.triples.size());

  // ((xy)z)t
  for (const std::size_t y : tab.right[x]) {
    const auto& xy = tab.product(x, y);
    for (const std::size_t z : tab.right_partners(xy)) {
      const SVec<S> xyz = tab.mul(xy, z);
      if (xyz.empty()) continue;
      for (const std::size_t t : tab.right_partners(xyz)) add(key(y, z, t), 1, tab.mul(xyz, t));
    }
  }
  // s2 ((xt)z)y
  for (const std::size_t t : tab.right[x]) {
    const auto& xt = tab.product(x, t);
    for (const std::size_t z : tab.right_partners(xt)) {
      const SVec<S> xtz = tab.mul(xt, z);
      if (xtz.empty()) continue;
      for (const std::size_t y : tab.right_partners(xtz)) {
        const int s2 = sign_of(par(t) * (par(z) + par(y)) + par(z) * par(y));
        add(key(y, z, t), s2, tab.mul(xtz, y));
      }
    }
  }
  // s3 ((yt)z)x, over triples whose value meets left[x]
  for (const std::size_t c : triple_candidates.collect(tab.left[x], tab.triples_with)) {
    const auto& ch = tab.triples[c];
    const std::size_t y = ch.first, t = ch.second, z = ch.third;
    const int s3 = sign_of(px * (par(y) + par(z) + par(t)) + par(t) * par(z));
    add(key(y, z, t), s3, tab.mul(ch.value, x));
  }
  // u·(pq) below only sees pairs whose product meets right_partners(u).
  const auto pairs_for = [&](const SVec<S>& u) -> const std::vector<std::size_t>& {
    return pair_candidates.collect(tab.right_partners(u), tab.pairs_with);
  };
  // -(xy)(zt)
  for (const std::size_t y : tab.right[x]) {
    const auto& xy = tab.product(x, y);
    for (const std::size_t c : pairs_for(xy)) {
      const auto [z, t] = tab.pairs[c];
      add(key(y, z, t), -1, tab.mul(xy, tab.product(z, t)));
    }
  }
  // -s5 (xt)(yz)
  for (const std::size_t t : tab.right[x]) {
    const auto& xt = tab.product(x, t);
    for (const std::size_t c : pairs_for(xt)) {
      const auto [y, z] = tab.pairs[c];
      const int s5 = sign_of(par(t) * par(z) + par(t) * par(y));
      add(key(y, z, t), -s5, tab.mul(xt, tab.product(y, z)));
    }
  }
  // -s6 (xz)(yt)
  for (const std::size_t z : tab.right[x]) {
    const auto& xz = tab.product(x, z);
    for (const std::size_t c : pairs_for(xz)) {
      const auto [y, t] = tab.pairs[c];
      const int s6 = sign_of(par(y) * par(z));
      add(key(y, z, t), -s6, tab.mul(xz, tab.product(y, t)));
    }
  }

  for (auto& [k, v] : acc) {
    if (v.empty()) continue;
    out.push_back({{x, k / (d * d), (k / d) % d, k % d}, std::move(v)});
  }
}

template <class S>
std::vector<RawViolation<S>> scan_all(const Table<S>& tab, unsigned jobs) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tab.d)));
  std::vector<std::vector<RawViolation<S>>> partial(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  const auto work = [&](unsigned w) {
    try {
      for (std::size_t x = w; x < tab.d; x += jobs) scan_x(tab, x, partial[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) workers.emplace_back([&work, w] { work(w); });
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<RawViolation<S>> all;
  for (auto& p : partial) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return all;
}

Rational to_rational(const Rational& x) { return x; }
Rational to_rational(CheckedInt x) { return Rational(static_cast<long>(x.v)); }

template <class S>
IdentityReport to_report(std::vector<RawViolation<S>> raw, const Rational& scale) {
  IdentityReport report;
  for (auto& r : raw) {
    SparseVector residual;
    for (const auto& t : r.residual) residual.push_back({t.index, to_rational(t.coeff) / scale});
    report.violations.push_back({{r.indices.begin(), r.indices.end()}, std::move(residual)});
  }
  report.canonicalize();
  return report;
}

IdentityReport jordan_scan(const Superalgebra& a, const CheckOptions& options) {
  if (auto scaled = integer_table(a)) {
    try {
      return to_report(scan_all(scaled->first, options.jobs), scaled->second);
    } catch (const Overflow&) {
      // Fall through to exact rationals.
    }
  }
  return to_report(scan_all(rational_table(a), options.jobs), Rational(1));
}

}  // namespace

IdentityReport check_super_jordan(const Superalgebra& a, const CheckOptions& options) {
  return jordan_scan(a, options);
}

IdentityReport check_plain_jordan(const Superalgebra& a, const CheckOptions& options) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.parity(i) != Parity::kEven) {
      throw UsageError("check_plain_jordan: basis element " + a.label(i) + " is odd");
    }
  }
  IdentityReport report = check_supercommutative(a);
  IdentityReport jordan = jordan_scan(a, options);
  report.violations.insert(report.violations.end(), std::make_move_iterator(jordan.violations.begin()),
                           std::make_move_iterator(jordan.violations.end()));
  report.canonicalize();
  return report;
}

bool is_jordan_superalgebra(const Superalgebra& a, const CheckOptions& options) {
  return check_supercommutative(a).holds() && check_super_jordan(a, options).holds();
}

}  // namespace jsplit
