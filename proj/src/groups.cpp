#include "ccsym/groups.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ccsym/errors.hpp"

namespace ccsym {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<Element> table,
                         std::optional<int> dihedral_degree)
    : order_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      table_(std::move(table)),
      dihedral_degree_(dihedral_degree) {
  if (order_ == 0) throw InvalidGroup("empty group");
  const auto n = static_cast<std::size_t>(order_);
  if (table_.size() != n * n)
    throw InvalidGroup("multiplication table must be " + std::to_string(n) + "x" +
                       std::to_string(n));
  for (Element e : table_)
    if (e < 0 || e >= order_) throw InvalidGroup("table entry out of range");

  identity_ = -1;
  for (Element e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (Element x = 0; x < order_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InvalidGroup("no two-sided identity");

  inverse_.assign(n, -1);
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (inverse_[static_cast<std::size_t>(a)] < 0)
      throw InvalidGroup("element " + labels_[static_cast<std::size_t>(a)] + " has no inverse");
  }
  if (!group_axioms_hold(*this)) throw InvalidGroup("multiplication is not associative");
}

FiniteGroup::Element FiniteGroup::find(std::string_view label) const {
  for (Element a = 0; a < order_; ++a)
    if (labels_[static_cast<std::size_t>(a)] == label) return a;
  throw InvalidGroup("no element labelled '" + std::string(label) + "'");
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool group_axioms_hold(const FiniteGroup& g, int exhaustive_limit, int samples) {
  using E = FiniteGroup::Element;
  const E n = g.order();
  for (E a = 0; a < n; ++a) {
    if (g.mul(g.identity(), a) != a || g.mul(a, g.identity()) != a) return false;
    if (g.mul(a, g.inverse(a)) != g.identity() || g.mul(g.inverse(a), a) != g.identity())
      return false;
  }
  auto assoc = [&](E a, E b, E c) { return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)); };
  if (n <= exhaustive_limit) {
    for (E a = 0; a < n; ++a)
      for (E b = 0; b < n; ++b)
        for (E c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return false;
    return true;
  }
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<E> pick(0, n - 1);
  for (int s = 0; s < samples; ++s)
    if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

FiniteGroup dihedral_group(int k, DihedralLabels style) {
  if (k < 3) throw InvalidOrder("dihedral degree must be at least 3, got " + std::to_string(k));
  const int order = 2 * k;
  auto encode = [k](int i, int s) { return s * k + ((i % k) + k) % k; };

  std::vector<FiniteGroup::Element> table(static_cast<std::size_t>(order * order));
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const int i = x % k, s = x / k;
      const int j = y % k, t = y / k;
      // r a^j = a^-j r
      const int product = s == 0 ? encode(i + j, t) : encode(i - j, 1 - t);
      table[static_cast<std::size_t>(x * order + y)] = product;
    }
  }

  std::vector<std::string> labels(static_cast<std::size_t>(order));
  auto power = [](const std::string& base, int p) {
    if (p == 1) return base;
    return base + "^" + std::to_string(p);
  };
  for (int i = 0; i < k; ++i) {
    auto& rot = labels[static_cast<std::size_t>(i)];
    auto& ref = labels[static_cast<std::size_t>(k + i)];
    if (style == DihedralLabels::Rotation) {
      rot = i == 0 ? "e" : power("a", i);
      ref = i == 0 ? "r" : power("a", i) + "r";
    } else {
      rot = i == 0 ? "I" : power("R", i);
      const int j = (k - i) % k;
      ref = j == 0 ? "T" : "T" + power("R", j);
    }
  }
  return FiniteGroup(std::move(labels), std::move(table), k);
}

FiniteGroup trivial_group() { return FiniteGroup({"e"}, {0}); }

FiniteGroup cyclic_group(int k) {
  if (k < 1) throw InvalidOrder("cyclic order must be positive");
  std::vector<FiniteGroup::Element> table(static_cast<std::size_t>(k * k));
  std::vector<std::string> labels(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) {
    labels[static_cast<std::size_t>(a)] = a == 0 ? "e" : "g^" + std::to_string(a);
    for (int b = 0; b < k; ++b) table[static_cast<std::size_t>(a * k + b)] = (a + b) % k;
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  ConjugacyClasses cc;
  cc.group_order = g.order();
  cc.class_of.assign(static_cast<std::size_t>(g.order()), -1);
  // Identity first, then the remaining elements in ascending order, so later
  // classes are ordered by their smallest member.
  std::vector<FiniteGroup::Element> scan(static_cast<std::size_t>(g.order()));
  scan[0] = g.identity();
  for (int a = 0, slot = 1; a < g.order(); ++a)
    if (a != g.identity()) scan[static_cast<std::size_t>(slot++)] = a;

  for (FiniteGroup::Element x : scan) {
    if (cc.class_of[static_cast<std::size_t>(x)] >= 0) continue;
    std::vector<FiniteGroup::Element> members;
    for (int h = 0; h < g.order(); ++h) members.push_back(g.mul(g.mul(h, x), g.inverse(h)));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const int idx = cc.count();
    for (auto m : members) cc.class_of[static_cast<std::size_t>(m)] = idx;
    cc.representatives.push_back(members.front());
    cc.sizes.push_back(static_cast<int>(members.size()));
    cc.classes.push_back(std::move(members));
  }
  return cc;
}

std::string class_name(const FiniteGroup& g, const ConjugacyClasses& cc, int c) {
  std::string out;
  for (auto m : cc.classes[static_cast<std::size_t>(c)]) {
    if (!out.empty()) out += ",";
    out += g.label(m);
  }
  return out;
}

CharacterTable character_table(const FiniteGroup& g) {
  if (!g.dihedral_degree())
    throw UnsupportedGroup("character tables are available for dihedral groups only");
  const int k = *g.dihedral_degree();
  const bool even = k % 2 == 0;

  CharacterTable t;
  t.classes = conjugacy_classes(g);
  for (int c = 0; c < t.classes.count(); ++c) t.class_names.push_back(class_name(g, t.classes, c));

  using Fn = double (*)(int, int, int, int);
  struct Row {
    int degree;
    int param;
    Fn fn;
  };
  std::vector<Row> rows;
  rows.push_back({1, 0, [](int, int, int, int) { return 1.0; }});
  rows.push_back({1, 0, [](int, int s, int, int) { return s ? -1.0 : 1.0; }});
  if (even) {
    rows.push_back({1, 0, [](int i, int, int, int) { return i % 2 ? -1.0 : 1.0; }});
    rows.push_back({1, 0, [](int i, int s, int, int) {
                      const double alt = i % 2 ? -1.0 : 1.0;
                      return s ? -alt : alt;
                    }});
  }
  const int two_dim = even ? k / 2 - 1 : (k - 1) / 2;
  for (int l = 1; l <= two_dim; ++l) {
    rows.push_back({2, l, [](int i, int s, int kk, int ll) {
                      if (s) return 0.0;
                      return 2.0 * std::cos(2.0 * std::numbers::pi * i * ll / kk);
                    }});
  }
  if (static_cast<int>(rows.size()) != t.classes.count())
    throw UnsupportedGroup("class count does not match the dihedral character count");

  for (std::size_t r = 0; r < rows.size(); ++r) {
    t.irrep_names.push_back("chi" + std::to_string(r + 1));
    t.degrees.push_back(rows[r].degree);
    ClassFunction chi;
    for (auto rep : t.classes.representatives) {
      double v = rows[r].fn(rep % k, rep / k, k, rows[r].param);
      if (std::abs(v - std::round(v)) < 1e-14) v = std::round(v);
      chi.emplace_back(v, 0.0);
    }
    t.values.push_back(std::move(chi));
  }
  return t;
}

std::complex<double> char_inner_product(const ClassFunction& x, const ClassFunction& y,
                                        const ConjugacyClasses& classes) {
  if (x.size() != classes.classes.size() || y.size() != classes.classes.size())
    throw DimensionMismatch("class functions must have one value per class");
  std::complex<double> acc = 0;
  for (std::size_t c = 0; c < x.size(); ++c)
    acc += static_cast<double>(classes.sizes[c]) * std::conj(x[c]) * y[c];
  return acc / static_cast<double>(classes.group_order);
}

std::vector<int> decompose(const ClassFunction& chi, const CharacterTable& table) {
  std::vector<int> mult;
  int total_dim = 0;
  for (int i = 0; i < table.count(); ++i) {
    // (chi, chi_i) with chi first, matching n_i = (chi, chi_i)
    const auto ip = char_inner_product(chi, table.values[static_cast<std::size_t>(i)], table.classes);
    const double nearest = std::round(ip.real());
    if (std::abs(ip - std::complex<double>(nearest, 0.0)) > 1e-6 || nearest < 0)
      throw NonIntegerMultiplicity(table.irrep_names[static_cast<std::size_t>(i)] + ": (chi, chi_i) = " +
                                   std::to_string(ip.real()) + (ip.imag() != 0 ? " + i" + std::to_string(ip.imag()) : ""));
    mult.push_back(static_cast<int>(nearest));
    total_dim += mult.back() * table.degrees[static_cast<std::size_t>(i)];
  }
  // the identity class is always first
  if (std::abs(chi[0].real() - total_dim) > 1e-6)
    throw NonIntegerMultiplicity("multiplicities do not account for chi(e)");
  return mult;
}

}  // namespace ccsym
