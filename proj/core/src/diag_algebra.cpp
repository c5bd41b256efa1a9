#include "stabcoh/diag_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabcoh {

int min_exponent(Variant v, int block_size) {
  if (block_size < 1) throw std::invalid_argument("min_exponent: block size must be positive");
  switch (v) {
    case Variant::ATilde:
      return block_size == 1 ? 0 : 1;
    case Variant::A:
      return block_size - 1;
    case Variant::APrime:
      return block_size == 1 ? 2 : block_size - 1;
    case Variant::ADoublePrime:
      return block_size <= 2 ? 2 : block_size - 1;
  }
  throw std::logic_error("min_exponent: bad variant");
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::ATilde:
      return "atilde";
    case Variant::A:
      return "a";
    case Variant::APrime:
      return "aprime";
    case Variant::ADoublePrime:
      return "adoubleprime";
  }
  throw std::logic_error("variant_name: bad variant");
}

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "atilde") return Variant::ATilde;
  if (name == "a") return Variant::A;
  if (name == "aprime") return Variant::APrime;
  if (name == "adoubleprime") return Variant::ADoublePrime;
  return std::nullopt;
}

PartitionMonomial::PartitionMonomial(SetPartition p, std::vector<int> exps)
    : partition(std::move(p)), exponents(std::move(exps)) {
  if (static_cast<int>(exponents.size()) != partition.block_count())
    throw std::invalid_argument("PartitionMonomial: one exponent per block required");
  const auto sizes = partition.block_sizes();
  for (std::size_t b = 0; b < exponents.size(); ++b) {
    if (exponents[b] < 0) throw std::invalid_argument("PartitionMonomial: negative exponent");
    if (sizes[b] > 1 && exponents[b] < 1)
      throw std::invalid_argument("PartitionMonomial: non-singleton block needs exponent >= 1");
  }
}

int PartitionMonomial::degree() const {
  int total = 0;
  for (int e : exponents) total += e;
  return 2 * total;
}

namespace {

/* first element (1-based) of each block, by block index */
std::vector<int> block_representatives(const SetPartition& p) {
  std::vector<int> rep(static_cast<std::size_t>(p.block_count()), 0);
  for (int i = p.ground_size(); i >= 1; --i) rep[static_cast<std::size_t>(p.block_index_of(i))] = i;
  return rep;
}

}  // namespace

PartitionMonomial multiply(const PartitionMonomial& a, const PartitionMonomial& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("multiply: ground size mismatch");
  SetPartition joined = a.partition.join(b.partition);
  std::vector<int> exps(static_cast<std::size_t>(joined.block_count()), 0);
  for (const PartitionMonomial* m : {&a, &b}) {
    const auto reps = block_representatives(m->partition);
    for (std::size_t blk = 0; blk < reps.size(); ++blk)
      exps[static_cast<std::size_t>(joined.block_index_of(reps[blk]))] += m->exponents[blk];
  }
  return PartitionMonomial(std::move(joined), std::move(exps));
}

PartitionMonomial relabel(const PartitionMonomial& m, const Permutation& sigma) {
  std::vector<int> block_map;
  SetPartition image = m.partition.relabeled(sigma, &block_map);
  std::vector<int> exps(m.exponents.size(), 0);
  for (std::size_t blk = 0; blk < block_map.size(); ++blk)
    exps[static_cast<std::size_t>(block_map[blk])] = m.exponents[blk];
  return PartitionMonomial(std::move(image), std::move(exps));
}

bool variant_member(const PartitionMonomial& m, Variant v) {
  const auto sizes = m.partition.block_sizes();
  for (std::size_t b = 0; b < m.exponents.size(); ++b)
    if (m.exponents[b] < min_exponent(v, sizes[b])) return false;
  return true;
}

AlgebraElement::AlgebraElement(const PartitionMonomial& m, const Rat& c) {
  if (c != 0) terms_.emplace(m, c);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [mono, coeff] : other.terms_) {
    Rat& slot = terms_[mono];
    slot += coeff;
    if (slot == 0) terms_.erase(mono);
  }
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [m1, c1] : a.terms_)
    for (const auto& [m2, c2] : b.terms_) out += AlgebraElement(multiply(m1, m2), c1 * c2);
  return out;
}

namespace {

void distribute_extra(const SetPartition& p, std::vector<int>& exps, std::size_t from, int extra,
                      std::vector<PartitionMonomial>& out) {
  if (from + 1 == exps.size()) {
    exps[from] += extra;
    out.emplace_back(p, exps);
    exps[from] -= extra;
    return;
  }
  for (int take = 0; take <= extra; ++take) {
    exps[from] += take;
    distribute_extra(p, exps, from + 1, extra - take, out);
    exps[from] -= take;
  }
}

}  // namespace

std::vector<PartitionMonomial> monomial_basis(Variant v, int s, int internal_degree) {
  std::vector<PartitionMonomial> basis;
  if (internal_degree < 0 || internal_degree % 2 != 0) return basis;
  const int target = internal_degree / 2;
  for (const SetPartition& p : enumerate_set_partitions(s)) {
    const auto sizes = p.block_sizes();
    std::vector<int> exps(sizes.size());
    int base = 0;
    for (std::size_t b = 0; b < sizes.size(); ++b) {
      exps[b] = min_exponent(v, sizes[b]);
      base += exps[b];
    }
    if (base > target) continue;
    distribute_extra(p, exps, 0, target - base, basis);
  }
  return basis;
}

namespace {

int variant_shift(const SetPartition& p, Variant v) {
  int total = 0;
  for (int size : p.block_sizes()) total += min_exponent(v, size);
  return 2 * total;
}

}  // namespace

LaurentWindow variant_hilbert_series(Variant v, int s, int max_deg) {
  LaurentWindow acc;
  for (const SetPartition& p : enumerate_set_partitions(s)) {
    std::vector<int> ones(static_cast<std::size_t>(p.block_count()), 1);
    acc += LaurentWindow::geometric_product(variant_shift(p, v), ones, max_deg);
  }
  return acc;
}

LaurentWindow graded_trace(const CycleType& mu, Variant v, int s, int max_deg) {
  if (mu.size() != s) throw std::invalid_argument("graded_trace: |mu| != s");
  const Permutation sigma = Permutation::with_cycle_type(mu);
  LaurentWindow acc;
  for (const SetPartition& p : enumerate_set_partitions(s)) {
    std::vector<int> block_map;
    if (p.relabeled(sigma, &block_map) != p) continue;
    const auto orbit_lengths = Permutation(std::move(block_map)).cycle_type().parts();
    acc += LaurentWindow::geometric_product(variant_shift(p, v), orbit_lengths, max_deg);
  }
  return acc;
}

LaurentWindow invariant_series(Variant v, int s, int max_deg) {
  LaurentWindow acc;
  for (const CycleType& mu : numerical_partitions(s))
    acc += graded_trace(mu, v, s, max_deg).scaled(Rat(class_data(mu).class_size));
  acc = acc.scaled(Rat(Int(1), factorial(s)));
  acc.assert_integral("invariant_series");
  return acc;
}

LaurentWindow invariant_series_direct(Variant v, int s, int max_deg) {
  LaurentWindow acc;
  for (const NumericalPartition& type : numerical_partitions(s)) {
    const auto mult = type.multiplicities();
    int shift = 0;
    std::vector<int> lengths;
    for (int k = 1; k < static_cast<int>(mult.size()); ++k) {
      const int lk = mult[static_cast<std::size_t>(k)];
      if (lk == 0) continue;
      shift += 2 * min_exponent(v, k) * lk;
      for (int j = 1; j <= lk; ++j) lengths.push_back(j);
    }
    acc += LaurentWindow::geometric_product(shift, lengths, max_deg);
  }
  return acc;
}

}  // namespace stabcoh
