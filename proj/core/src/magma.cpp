#include "homlab/magma.hpp"

#include <algorithm>
#include <cctype>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <map>
#include <numeric>

#include "homlab/errors.hpp"

namespace homlab {

FiniteHomMagma FiniteHomMagma::create(std::size_t n, const Table& table, std::span<const Element> alpha,
                                      Element unit, std::optional<Element> zero) {
  if (n == 0) throw IndexOutOfRange("magma must have at least one element");
  if (table.size() != n) throw IndexOutOfRange(fmt::format("table has {} rows, expected {}", table.size(), n));
  if (alpha.size() != n) throw IndexOutOfRange(fmt::format("alpha has {} entries, expected {}", alpha.size(), n));
  if (unit >= n) throw IndexOutOfRange(fmt::format("unit index {} out of range", unit));
  if (zero && *zero >= n) throw IndexOutOfRange(fmt::format("zero index {} out of range", *zero));
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw IndexOutOfRange(fmt::format("table row {} has {} entries", i, table[i].size()));
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) throw IndexOutOfRange(fmt::format("table[{}][{}] = {} out of range", i, j, table[i][j]));
    }
    if (alpha[i] >= n) throw IndexOutOfRange(fmt::format("alpha[{}] = {} out of range", i, alpha[i]));
  }
  for (Element x = 0; x < n; ++x) {
    if (table[unit][x] != x) throw UnitLawViolation(fmt::format("table[{}][{}] != {}", unit, x, x));
    if (table[x][unit] != x) throw UnitLawViolation(fmt::format("table[{}][{}] != {}", x, unit, x));
  }
  if (zero) {
    if (*zero == unit) throw ZeroLawViolation(fmt::format("zero and unit coincide at index {}", unit));
    for (Element x = 0; x < n; ++x) {
      if (table[*zero][x] != *zero) throw ZeroLawViolation(fmt::format("table[{}][{}] != {}", *zero, x, *zero));
      if (table[x][*zero] != *zero) throw ZeroLawViolation(fmt::format("table[{}][{}] != {}", x, *zero, *zero));
    }
    if (alpha[*zero] != *zero) throw ZeroLawViolation(fmt::format("alpha[{}] != {}", *zero, *zero));
  }

  // perm[old] = new: unit first, zero last, the rest in order.
  std::vector<Element> perm(n);
  Element next = 1;
  for (Element x = 0; x < n; ++x) {
    if (x == unit) {
      perm[x] = 0;
    } else if (zero && x == *zero) {
      perm[x] = static_cast<Element>(n - 1);
    } else {
      perm[x] = next++;
    }
  }
  std::vector<Element> flat(n * n), amap(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) flat[perm[i] * n + perm[j]] = perm[table[i][j]];
    amap[perm[i]] = perm[alpha[i]];
  }
  return FiniteHomMagma(n, zero.has_value(), std::move(flat), std::move(amap));
}

FiniteHomMagma FiniteHomMagma::from_canonical(std::size_t n, bool has_zero, std::vector<Element> table,
                                              std::vector<Element> alpha) {
  FiniteHomMagma m(n, has_zero, std::move(table), std::move(alpha));
  m.validate();
  return m;
}

void FiniteHomMagma::validate() const {
  if (n_ == 0) throw IndexOutOfRange("magma must have at least one element");
  if (has_zero_ && n_ < 2) throw ZeroLawViolation("zero and unit coincide at index 0");
  if (table_.size() != n_ * n_ || alpha_.size() != n_) throw IndexOutOfRange("table or alpha has the wrong length");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (mul(i, j) >= n_) throw IndexOutOfRange(fmt::format("table[{}][{}] = {} out of range", i, j, mul(i, j)));
    }
    if (alpha_[i] >= n_) throw IndexOutOfRange(fmt::format("alpha[{}] = {} out of range", i, alpha_[i]));
  }
  for (Element x = 0; x < n_; ++x) {
    if (mul(0, x) != x) throw UnitLawViolation(fmt::format("table[0][{}] != {}", x, x));
    if (mul(x, 0) != x) throw UnitLawViolation(fmt::format("table[{}][0] != {}", x, x));
  }
  if (auto z = zero()) {
    for (Element x = 0; x < n_; ++x) {
      if (mul(*z, x) != *z) throw ZeroLawViolation(fmt::format("table[{}][{}] != {}", *z, x, *z));
      if (mul(x, *z) != *z) throw ZeroLawViolation(fmt::format("table[{}][{}] != {}", x, *z, *z));
    }
    if (alpha_[*z] != *z) throw ZeroLawViolation(fmt::format("alpha[{}] != {}", *z, *z));
  }
}

std::string FiniteHomMagma::name(Element a) const {
  if (has_zero_ && a == n_ - 1) return "0";
  return fmt::format("e{}", a + 1);
}

FiniteHomMagma FiniteHomMagma::relabel(std::span<const Element> perm) const {
  if (perm.size() != n_) throw IndexOutOfRange("relabel: permutation has the wrong length");
  std::vector<Element> flat(n_ * n_), amap(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) flat[perm[i] * n_ + perm[j]] = perm[mul(i, j)];
    amap[perm[i]] = perm[alpha_[i]];
  }
  return from_canonical(n_, has_zero_, std::move(flat), std::move(amap));
}

std::strong_ordering operator<=>(const FiniteHomMagma& a, const FiniteHomMagma& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.table_ <=> b.table_; c != 0) return c;
  if (auto c = a.alpha_ <=> b.alpha_; c != 0) return c;
  return a.has_zero_ <=> b.has_zero_;
}

FiniteHomMagma new_magma(std::size_t n, const Table& table, std::span<const Element> alpha, Element unit,
                         std::optional<Element> zero) {
  return FiniteHomMagma::create(n, table, alpha, unit, zero);
}

namespace {

constexpr std::size_t kZeroRef = 0;  // "0" in the shorthand; elements are 1-based

class RelationParser {
 public:
  explicit RelationParser(std::string_view text) : text_(text) {}

  FiniteHomMagma parse() {
    skip_ws();
    while (pos_ < text_.size()) {
      if (peek() == ';') {
        ++pos_;
      } else {
        clause();
        skip_ws();
        if (pos_ < text_.size() && peek() != ';') fail("expected ';'");
      }
      skip_ws();
    }
    return build();
  }

 private:
  struct Stated {
    std::size_t value;
    std::size_t offset;
  };

  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }
  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail(fmt::format("expected '{}'", tok));
  }

  // e<k>, k >= 1; returns k
  std::size_t element() {
    skip_ws();
    if (pos_ >= text_.size() || peek() != 'e') fail("expected element name e<k>");
    ++pos_;
    std::size_t start = pos_, k = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      k = k * 10 + static_cast<std::size_t>(peek() - '0');
      if (k > 4096) fail("element index too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected element index");
    if (k == 0) {
      pos_ = start;
      fail("element indices start at e1");
    }
    max_index_ = std::max(max_index_, k);
    return k;
  }

  std::size_t value() {
    skip_ws();
    if (pos_ < text_.size() && peek() == '0') {
      ++pos_;
      return kZeroRef;
    }
    return element();
  }

  void clause() {
    if (accept("alpha")) {
      expect(":");
      do {
        std::size_t at = pos_;
        auto src = element();
        expect("->");
        auto dst = value();
        state(alpha_, src, dst, at, fmt::format("alpha(e{})", src));
      } while (accept(","));
    } else if (accept("elements")) {
      expect(":");
      std::size_t at = pos_;
      if (element() != 1) {
        pos_ = at;
        fail("element range must start at e1");
      }
      expect("..");
      element();
    } else {
      std::size_t at = pos_;
      bool paren = accept("(");
      auto a = element();
      expect("*");
      auto b = element();
      if (paren) expect(")");
      expect("=");
      auto v = value();
      state(products_, a * 10000 + b, v, at, fmt::format("e{}*e{}", a, b));
    }
  }

  void state(std::map<std::size_t, Stated>& into, std::size_t key, std::size_t v, std::size_t at,
             const std::string& what) {
    auto [it, inserted] = into.try_emplace(key, Stated{v, at});
    if (!inserted && it->second.value != v) {
      throw ConflictingRelation(fmt::format("{} stated twice with different values (offsets {} and {})", what,
                                            it->second.offset, at));
    }
  }

  FiniteHomMagma build() const {
    const std::size_t k = std::max<std::size_t>(max_index_, 1);
    const std::size_t n = k + 1;
    const auto zero = static_cast<Element>(k);
    auto idx = [&](std::size_t ref) { return ref == kZeroRef ? zero : static_cast<Element>(ref - 1); };

    Table table(n, std::vector<Element>(n, zero));
    for (Element x = 0; x < k; ++x) {
      table[0][x] = x;
      table[x][0] = x;
    }
    for (const auto& [key, st] : products_) {
      const std::size_t a = key / 10000, b = key % 10000;
      const Element v = idx(st.value);
      if (a == 1 || b == 1) {
        const Element forced = a == 1 ? idx(b) : idx(a);
        if (v != forced) {
          throw ConflictingRelation(
              fmt::format("e{}*e{} contradicts the unit law (offset {})", a, b, st.offset));
        }
        continue;
      }
      table[a - 1][b - 1] = v;
    }
    std::vector<Element> alpha(n, zero);
    for (const auto& [src, st] : alpha_) alpha[src - 1] = idx(st.value);
    return FiniteHomMagma::create(n, table, alpha, 0, zero);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
  std::map<std::size_t, Stated> products_;
  std::map<std::size_t, Stated> alpha_;
};

}  // namespace

FiniteHomMagma from_relations(std::string_view text) { return RelationParser(text).parse(); }

std::string to_relations(const FiniteHomMagma& m) {
  if (!m.has_zero()) throw Error("to_relations: shorthand needs a magma with zero");
  const auto k = static_cast<Element>(m.nonzero_count());
  const Element zero = *m.zero();
  std::vector<std::string> parts;
  Element mentioned = 1;
  for (Element a = 1; a < k; ++a) {
    for (Element b = 1; b < k; ++b) {
      if (m.mul(a, b) == zero) continue;
      parts.push_back(fmt::format("{}*{}={}", m.name(a), m.name(b), m.name(m.mul(a, b))));
      mentioned = std::max({mentioned, a + 1, b + 1, m.mul(a, b) + 1});
    }
  }
  std::vector<std::string> maps;
  for (Element a = 0; a < k; ++a) {
    if (m.alpha(a) == zero) continue;
    maps.push_back(fmt::format("{}->{}", m.name(a), m.name(m.alpha(a))));
    mentioned = std::max({mentioned, a + 1, m.alpha(a) + 1});
  }
  if (!maps.empty()) parts.push_back("alpha: " + fmt::format("{}", fmt::join(maps, ", ")));
  if (mentioned < k) parts.insert(parts.begin(), fmt::format("elements: e1..e{}", k));
  return fmt::format("{}", fmt::join(parts, "; "));
}

}  // namespace homlab
