#pragma once

#include <atomic>
#include <complex>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grpaudit/cyclotomic.hpp"
#include "grpaudit/subgroup.hpp"

namespace grpaudit {

struct CharClass {
  ElemId rep = 0;
  Permutation rep_perm;
  std::uint64_t size = 0;
  std::uint64_t order = 0;  // element order
  std::uint32_t inverse = 0;  // class of rep^-1
  std::uint64_t centralizer_order = 0;
  std::vector<ElemId> members;
};

/// A character value seen through both modular images and a floating point
/// approximation.
struct CharValue {
  std::uint64_t m1 = 0;
  std::uint64_t m2 = 0;
  std::complex<double> f;
};

/// Exact character table: values are cyclotomic integers over the e-th roots
/// of unity (e the group exponent), with images in F_l1 and F_l2 for two
/// primes l = 1 mod e above 4|G|^2. Equality is decided in both modular
/// images; every comparison is cross-checked against floating point and
/// disagreements are counted.
class CharacterTable {
 public:
  std::string group_id;
  SubgroupHandle group;
  std::uint64_t order = 0;
  std::uint32_t exponent = 0;
  std::uint64_t ell1 = 0, ell2 = 0;  // modular primes
  std::uint64_t z1 = 0, z2 = 0;      // images of exp(2 pi i / e)
  std::vector<CharClass> classes;
  std::vector<std::uint32_t> class_of;  // ambient id -> class index
  std::size_t identity_class = 0;
  std::vector<std::uint64_t> degrees;
  std::vector<std::vector<Cyclotomic>> values;  // [character][class]
  std::vector<std::vector<CharValue>> images;

  std::size_t size() const { return degrees.size(); }
  std::size_t class_count() const { return classes.size(); }

  const CharValue& value(std::size_t chi, std::size_t cls) const { return images[chi][cls]; }
  CharValue value_at(std::size_t chi, ElemId g) const { return images[chi][class_of[g]]; }
  CharValue integer(std::int64_t n) const;
  CharValue mul(const CharValue& a, const CharValue& b) const;
  CharValue add(const CharValue& a, const CharValue& b) const;
  CharValue conj(std::size_t chi, std::size_t cls) const { return images[chi][classes[cls].inverse]; }

  /// Equality in both modular images; records a mismatch when the two primes
  /// or the floating point comparison disagree.
  bool equal(const CharValue& a, const CharValue& b) const;
  bool is_zero(const CharValue& a) const { return equal(a, integer(0)); }
  std::uint64_t float_mismatches() const { return mismatches_->load(); }

  /// (class a, class b, class of rep_a * y, y) for every nontrivial y of
  /// order coprime to the nontrivial rep_a, one entry per distinct (a, b, c).
  struct CoprimeTriple {
    std::uint32_t a, b, c;
    ElemId y;
  };
  const std::vector<CoprimeTriple>& coprime_triples() const;

 private:
  std::shared_ptr<std::atomic<std::uint64_t>> mismatches_ = std::make_shared<std::atomic<std::uint64_t>>(0);
  struct TripleCache {
    std::once_flag once;
    std::vector<CoprimeTriple> triples;
  };
  std::shared_ptr<TripleCache> triples_ = std::make_shared<TripleCache>();
};

inline constexpr std::uint64_t kDefaultSplitSeed = 0x6469786f6eULL;

/// Dixon's method over F_l1, lifted to exact values. The seed drives the
/// random eigenspace splitting only; rows are put in canonical order, so the
/// table does not depend on it. Throws CapExceeded above the character caps.
CharacterTable character_table(const SubgroupHandle& g, std::string group_id = {},
                               std::uint64_t seed = kDefaultSplitSeed);

struct TableCheck {
  bool row_count = false;
  bool degrees_at_identity = false;
  bool sum_of_squares = false;
  bool row_orthogonality = false;
  bool column_orthogonality = false;
  bool float_agreement = false;

  bool all() const {
    return row_count && degrees_at_identity && sum_of_squares && row_orthogonality && column_orthogonality &&
           float_agreement;
  }
};

TableCheck verify_table(const CharacterTable& t);

/// Three defect-zero criteria: chi(1)_p = |G|_p; chi vanishes on elements of
/// order p; chi vanishes on p-singular elements.
struct DefectZeroVerdict {
  bool by_degree = false;
  bool vanishes_on_order_p = false;
  bool vanishes_on_p_singular = false;

  bool agree() const { return by_degree == vanishes_on_order_p && by_degree == vanishes_on_p_singular; }
};

DefectZeroVerdict has_p_defect_zero(const CharacterTable& t, std::size_t chi, std::uint64_t p);

struct MultiplicativeVerdict {
  bool multiplicative = true;
  std::optional<std::pair<Permutation, Permutation>> witness;  // failing (x, y)
};

/// chi(xy) = chi(x) chi(y) for all nontrivial x, y of coprime orders.
MultiplicativeVerdict is_multiplicative(const CharacterTable& t, std::size_t chi);

/// chi(g) = 0 for every g outside the normal subgroup n.
bool vanishes_off(const CharacterTable& t, std::size_t chi, const SubgroupHandle& n);

/// Verdicts for one nonlinear irreducible character.
struct MultiplicativeCharacterVerdict {
  std::size_t character = 0;
  std::uint64_t degree = 0;
  bool multiplicative = false;
  std::optional<std::uint64_t> vanishing_prime;  // some p with chi vanishing off O_p(G)
  bool equivalence_ok = false;  // multiplicative iff vanishing_prime exists
  // Consequences checked when multiplicative:
  bool coprime_values_ok = true;    // chi(a) = 0 or chi(b) = 0 for coprime nontrivial a, b
  bool prime_order_nonzero = true;  // some element w of prime order p with chi(w) != 0
  std::optional<std::uint64_t> nonzero_prime;
  bool index_is_p_power = true;  // |G|/chi(1) a power of that p
  bool fstar_is_op = true;       // F*(G) = O_p(G)

  bool ok() const { return equivalence_ok && coprime_values_ok && prime_order_nonzero && index_is_p_power && fstar_is_op; }
};

std::vector<MultiplicativeCharacterVerdict> multiplicative_character_check(const CharacterTable& t);

/// For every pair of classes A, B and every chi constant on AB, checks
/// chi(a) chi(b) = chi(ab) chi(1).
struct ProductLemmaVerdict {
  std::size_t class_pairs = 0;
  std::size_t constant_instances = 0;
  std::size_t failures = 0;

  bool ok() const { return failures == 0; }
};

ProductLemmaVerdict product_lemma_check(const CharacterTable& t);

/// Classes (representative, size, element order) and rows (degree, values as
/// coefficient vectors over the e-th roots of unity).
nlohmann::json table_to_json(const CharacterTable& t);

}  // namespace grpaudit
