#include "gpk/group.hpp"

#include <limits>
#include <sstream>
#include <variant>

#include "gpk/errors.hpp"

namespace gpk {

Group Group::cyclic(std::size_t n) {
  if (n == 0) fail(ErrorCode::invalid_argument, "cyclic group order must be positive");
  auto t = std::make_shared<Table>();
  t->order = n;
  t->product.resize(n * n);
  t->inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t->product[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
    t->inverse[a] = static_cast<std::uint32_t>((n - a) % n);
  }
  t->cyclic = true;
  return Group(Kind::finite_table, std::move(t));
}

Group Group::infinite_cyclic() { return Group(Kind::infinite_cyclic, nullptr); }

Group Group::from_table(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) fail(ErrorCode::validation, "group table is empty");
  if (n > std::numeric_limits<std::uint32_t>::max()) fail(ErrorCode::validation, "group table too large");
  auto t = std::make_shared<Table>();
  t->order = n;
  t->product.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      fail(ErrorCode::validation, "group table row " + std::to_string(a) + " has length " +
                                      std::to_string(table[a].size()) + ", expected " + std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        fail(ErrorCode::validation, "group table entry (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") = " + std::to_string(table[a][b]) + " is not an element");
      }
      t->product[a * n + b] = static_cast<std::uint32_t>(table[a][b]);
    }
  }
  auto at = [&](std::size_t a, std::size_t b) -> std::size_t { return t->product[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    if (at(0, a) != a || at(a, 0) != a) {
      fail(ErrorCode::validation, "index 0 is not a two-sided identity (fails at element " + std::to_string(a) + ")");
    }
  }
  t->inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t found = n;
    for (std::size_t b = 0; b < n && found == n; ++b) {
      if (at(a, b) == 0 && at(b, a) == 0) found = b;
    }
    if (found == n) fail(ErrorCode::validation, "element " + std::to_string(a) + " has no inverse");
    t->inverse[a] = static_cast<std::uint32_t>(found);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) {
          fail(ErrorCode::validation, "group table is not associative at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  const Group reference = cyclic(n);
  t->cyclic = t->product == reference.table_->product;
  return Group(Kind::finite_table, std::move(t));
}

std::size_t Group::order() const {
  if (!is_finite()) fail(ErrorCode::invalid_argument, "the infinite cyclic group has no finite order");
  return table_->order;
}

bool Group::contains(Elem a) const noexcept {
  if (!is_finite()) return true;
  return a >= 0 && static_cast<std::size_t>(a) < table_->order;
}

void Group::check(Elem a) const {
  if (!contains(a)) {
    fail(ErrorCode::out_of_range, "element " + std::to_string(a) + " is not in group " + describe());
  }
}

Elem Group::mul(Elem a, Elem b) const {
  check(a);
  check(b);
  if (is_finite()) return table_->product[static_cast<std::size_t>(a) * table_->order + static_cast<std::size_t>(b)];
  Elem r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    fail(ErrorCode::overflow, "overflow in Z: " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

Elem Group::inv(Elem a) const {
  check(a);
  if (is_finite()) return table_->inverse[static_cast<std::size_t>(a)];
  if (a == std::numeric_limits<Elem>::min()) fail(ErrorCode::overflow, "overflow negating " + std::to_string(a));
  return -a;
}

bool Group::precedes(Elem a, Elem b) const noexcept {
  if (is_finite()) return a < b;
  const auto mag = [](Elem x) { return x < 0 ? -static_cast<unsigned long long>(x) : static_cast<unsigned long long>(x); };
  if (mag(a) != mag(b)) return mag(a) < mag(b);
  return a < b;
}

std::vector<Elem> Group::nontrivial_elements() const {
  std::vector<Elem> out;
  for (std::size_t a = 1; a < order(); ++a) out.push_back(static_cast<Elem>(a));
  return out;
}

std::string Group::describe() const {
  if (!is_finite()) return "Z";
  return (table_->cyclic ? "C" : "T") + std::to_string(table_->order);
}

bool operator==(const Group& a, const Group& b) noexcept {
  if (a.kind_ != b.kind_) return false;
  if (!a.is_finite()) return true;
  return a.table_ == b.table_ || a.table_->product == b.table_->product;
}

// ---------------------------------------------------------------------------

struct SetMap::Impl {
  struct Table {
    std::vector<Elem> images;
  };
  struct ModN {
    std::size_t n;
  };
  struct Identity {};
  struct Composite {
    SetMap first;
    SetMap second;
  };

  Group domain;
  Group codomain;
  std::variant<Table, ModN, Identity, Composite> rule;
};

SetMap SetMap::table(Group domain, Group codomain, std::vector<Elem> images) {
  if (!domain.is_finite()) fail(ErrorCode::invalid_argument, "table maps need a finite domain");
  if (images.size() != domain.order()) {
    fail(ErrorCode::validation, "set map table has " + std::to_string(images.size()) + " entries, domain " +
                                    domain.describe() + " has " + std::to_string(domain.order()));
  }
  for (Elem img : images) {
    if (!codomain.contains(img)) {
      fail(ErrorCode::validation, "set map image " + std::to_string(img) + " is not in " + codomain.describe());
    }
  }
  return SetMap(std::make_shared<const Impl>(Impl{std::move(domain), std::move(codomain), Impl::Table{std::move(images)}}));
}

SetMap SetMap::mod_reduction(std::size_t n) {
  return SetMap(std::make_shared<const Impl>(Impl{Group::infinite_cyclic(), Group::cyclic(n), Impl::ModN{n}}));
}

SetMap SetMap::identity(Group g) {
  Group copy = g;
  return SetMap(std::make_shared<const Impl>(Impl{std::move(g), std::move(copy), Impl::Identity{}}));
}

SetMap SetMap::compose(const SetMap& first, const SetMap& second) {
  if (!(first.codomain() == second.domain())) {
    fail(ErrorCode::validation, "cannot compose: codomain " + first.codomain().describe() + " != domain " +
                                    second.domain().describe());
  }
  return SetMap(std::make_shared<const Impl>(Impl{first.domain(), second.codomain(), Impl::Composite{first, second}}));
}

const Group& SetMap::domain() const noexcept { return impl_->domain; }
const Group& SetMap::codomain() const noexcept { return impl_->codomain; }

Elem SetMap::apply(Elem a) const {
  if (!impl_->domain.contains(a)) {
    fail(ErrorCode::out_of_range, "element " + std::to_string(a) + " is not in the domain " + impl_->domain.describe());
  }
  return std::visit(
      [&](const auto& rule) -> Elem {
        using R = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<R, Impl::Table>) {
          return rule.images[static_cast<std::size_t>(a)];
        } else if constexpr (std::is_same_v<R, Impl::ModN>) {
          const auto n = static_cast<Elem>(rule.n);
          return ((a % n) + n) % n;
        } else if constexpr (std::is_same_v<R, Impl::Identity>) {
          return a;
        } else {
          return rule.second.apply(rule.first.apply(a));
        }
      },
      impl_->rule);
}

bool SetMap::is_injective() const {
  if (std::holds_alternative<Impl::Identity>(impl_->rule)) return true;
  if (!domain().is_finite()) {
    fail(ErrorCode::invalid_argument, "injectivity on Z is undecidable by table scan (" + describe() + ")");
  }
  const auto images = tabulate();
  for (std::size_t a = 0; a < images.size(); ++a) {
    for (std::size_t b = a + 1; b < images.size(); ++b) {
      if (images[a] == images[b]) return false;
    }
  }
  return true;
}

bool SetMap::is_bijective() const {
  if (std::holds_alternative<Impl::Identity>(impl_->rule)) return true;
  if (!is_injective()) return false;
  return codomain().is_finite() && codomain().order() == domain().order();
}

std::vector<Elem> SetMap::tabulate() const {
  std::vector<Elem> out;
  const std::size_t n = domain().order();
  out.reserve(n);
  for (std::size_t a = 0; a < n; ++a) out.push_back(apply(static_cast<Elem>(a)));
  return out;
}

std::string SetMap::describe() const {
  std::ostringstream os;
  std::visit(
      [&](const auto& rule) {
        using R = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<R, Impl::Table>) {
          os << domain().describe() << "->" << codomain().describe() << "[";
          for (std::size_t i = 0; i < rule.images.size(); ++i) os << (i ? "," : "") << rule.images[i];
          os << "]";
        } else if constexpr (std::is_same_v<R, Impl::ModN>) {
          os << "Z->C" << rule.n << "[mod " << rule.n << "]";
        } else if constexpr (std::is_same_v<R, Impl::Identity>) {
          os << "id(" << domain().describe() << ")";
        } else {
          os << "(" << rule.second.describe() << " o " << rule.first.describe() << ")";
        }
      },
      impl_->rule);
  return os.str();
}

std::vector<SetMap> all_set_maps(const Group& domain, const Group& codomain) {
  const std::size_t n = domain.order();
  const auto k = static_cast<Elem>(codomain.order());
  std::vector<SetMap> out;
  std::vector<Elem> images(n, 0);
  for (;;) {
    out.push_back(SetMap::table(domain, codomain, images));
    // odometer increment, last position fastest
    std::size_t pos = n;
    while (pos > 0 && images[pos - 1] == k - 1) images[--pos] = 0;
    if (pos == 0) return out;
    ++images[pos - 1];
  }
}

}  // namespace gpk
