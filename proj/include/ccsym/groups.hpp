#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccsym {

/// Values of a class function, one per conjugacy class (in canonical class
/// order).
using ClassFunction = std::vector<std::complex<double>>;

/// Finite group given by a dense multiplication table over elements
/// 0..order-1.
class FiniteGroup {
 public:
  using Element = int;

  /// `table[a * order + b]` is the product a*b. The axioms are checked
  /// exhaustively for order <= 48 and on 10^4 sampled triples above that.
  FiniteGroup(std::vector<std::string> labels, std::vector<Element> table,
              std::optional<int> dihedral_degree = std::nullopt);

  int order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[index(a, b)]; }
  Element inverse(Element a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::string& label(Element a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws InvalidGroup when no element has this label.
  Element find(std::string_view label) const;
  bool is_abelian() const;

  /// k when this group was built as the dihedral group of the regular k-gon.
  std::optional<int> dihedral_degree() const { return dihedral_degree_; }

 private:
  std::size_t index(Element a, Element b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(b);
  }

  int order_ = 0;
  std::vector<std::string> labels_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::optional<int> dihedral_degree_;
};

enum class DihedralLabels {
  Rotation,  // e, a, a^2, ..., r, ar, a^2r, ...
  Triangle,  // I, R, R^2, ..., T, TR, TR^2, ... (TR^j = a^-j r)
};

/// Dihedral group of order 2k, a^k = r^2 = (ra)^2 = e. Element i < k is a^i,
/// element k + i is a^i r ("first r, then a^i").
FiniteGroup dihedral_group(int k, DihedralLabels labels = DihedralLabels::Rotation);

/// The group with one element.
FiniteGroup trivial_group();

/// Multiplication-table group of the cyclic group Z_k.
FiniteGroup cyclic_group(int k);

/// Exhaustive associativity/identity/inverse check; samples `samples` random
/// triples when the order exceeds `exhaustive_limit`.
bool group_axioms_hold(const FiniteGroup& g, int exhaustive_limit = 48, int samples = 10000);

struct ConjugacyClasses {
  std::vector<std::vector<FiniteGroup::Element>> classes;  // members ascending
  std::vector<FiniteGroup::Element> representatives;       // smallest member
  std::vector<int> sizes;
  std::vector<int> class_of;  // element -> class index
  int group_order = 0;

  int count() const { return static_cast<int>(classes.size()); }
};

/// Classes of x ~ g x g^-1, identity class first, then ordered by smallest
/// member.
ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

/// Display name of class c: its members' labels joined by commas.
std::string class_name(const FiniteGroup& g, const ConjugacyClasses& cc, int c);

struct CharacterTable {
  ConjugacyClasses classes;
  std::vector<std::string> class_names;
  std::vector<std::string> irrep_names;  // chi1 ... chih
  std::vector<int> degrees;
  std::vector<ClassFunction> values;     // values[i][c] = chi_i on class c

  int count() const { return static_cast<int>(degrees.size()); }
  int group_order() const { return classes.group_order; }
  /// Irreducible character i evaluated on an arbitrary element.
  std::complex<double> value(int irrep, FiniteGroup::Element a) const {
    return values[static_cast<std::size_t>(irrep)]
                 [static_cast<std::size_t>(classes.class_of[static_cast<std::size_t>(a)])];
  }
};

/// Irreducible characters of a dihedral group. Rows are ordered: trivial,
/// sign, then (k even) the two characters that are -1 on a, then the
/// two-dimensional characters 2 cos(2 pi j l / k) for l = 1, 2, ...
/// Throws UnsupportedGroup for groups not built by dihedral_group.
CharacterTable character_table(const FiniteGroup& g);

/// (x, y) = 1/|G| sum_A conj(x(A)) y(A), evaluated class-wise.
std::complex<double> char_inner_product(const ClassFunction& x, const ClassFunction& y,
                                        const ConjugacyClasses& classes);

/// Multiplicities n_i = (chi, chi_i). Throws NonIntegerMultiplicity when an
/// inner product is farther than 1e-6 from a nonnegative integer.
std::vector<int> decompose(const ClassFunction& chi, const CharacterTable& table);

}  // namespace ccsym
