#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "stabcoh/combinat.hpp"
#include "stabcoh/series.hpp"

namespace stabcoh {

/* The diagonal algebra on one degree-2 generator u_K per block K, and its
 * three exponent-restricted variants.  Membership is a per-block lower bound
 * m(|K|) on the exponent. */
enum class Variant { ATilde, A, APrime, ADoublePrime };

int min_exponent(Variant v, int block_size);
const char* variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

/* Normal form Prod_K u_K^{e_K}: every monomial lives on one set partition,
 * with exponent >= 1 on each non-singleton block.  Degree is 2 * sum(e_K). */
struct PartitionMonomial {
  SetPartition partition;
  std::vector<int> exponents;  // indexed by block index

  PartitionMonomial(SetPartition p, std::vector<int> exps);
  int ground_size() const { return partition.ground_size(); }
  int degree() const;

  friend bool operator==(const PartitionMonomial&, const PartitionMonomial&) = default;
  friend auto operator<=>(const PartitionMonomial&, const PartitionMonomial&) = default;
};

/* u_I u_J = u_i u_{I cup J} compiled to a closed form: join the partitions and
 * add the exponents of the constituent blocks inside each join block. */
PartitionMonomial multiply(const PartitionMonomial& a, const PartitionMonomial& b);
PartitionMonomial relabel(const PartitionMonomial& m, const Permutation& sigma);
bool variant_member(const PartitionMonomial& m, Variant v);

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(const PartitionMonomial& m, const Rat& c = Rat(1));

  const std::map<PartitionMonomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  AlgebraElement& operator+=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::map<PartitionMonomial, Rat> terms_;
};

/* All variant monomials on s points with the given internal degree,
 * in a deterministic order. */
std::vector<PartitionMonomial> monomial_basis(Variant v, int s, int internal_degree);

/* Hilbert series of the variant: sum over set partitions P of
 * q^{2 sum_K m(|K|)} prod_K (1-q^2)^{-1}. */
LaurentWindow variant_hilbert_series(Variant v, int s, int max_deg);

/* Graded trace of a permutation of cycle type mu: sum over fixed partitions P
 * of q^{2 sum_K m(|K|)} prod over block orbits o of (1-q^{2|o|})^{-1}. */
LaurentWindow graded_trace(const CycleType& mu, Variant v, int s, int max_deg);

/* Invariant Hilbert series, two independent derivations: the class-sum Molien
 * average of graded traces, and the closed product over partition types
 * sum_types prod_k q^{2 m(k) l_k} prod_{j<=l_k} (1-q^{2j})^{-1}. */
LaurentWindow invariant_series(Variant v, int s, int max_deg);
LaurentWindow invariant_series_direct(Variant v, int s, int max_deg);

}  // namespace stabcoh
