#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dressian/error.hpp"

namespace dressian {

/// A subset of the ground set {1..n}, stored as a bit pattern (element e is bit e-1).
class Subset {
 public:
  using Bits = std::uint64_t;
  static constexpr int kMaxElements = 63;

  constexpr Subset() = default;
  constexpr explicit Subset(Bits bits) : bits_(bits) {}
  Subset(std::initializer_list<int> elements);
  static Subset from_elements(const std::vector<int>& elements);
  static constexpr Subset range(int n) { return Subset(n >= 64 ? ~Bits{0} : ((Bits{1} << n) - 1)); }
  static constexpr Subset singleton(int e) { return Subset(Bits{1} << (e - 1)); }

  constexpr Bits bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> (e - 1)) & 1U; }
  constexpr bool contains(Subset other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr int min_element() const { return std::countr_zero(bits_) + 1; }
  constexpr int max_element() const { return 64 - std::countl_zero(bits_); }

  /// Sorted 1-based elements.
  std::vector<int> elements() const;
  /// Compact form such as "135" when all elements are < 10, else "1,3,15".
  std::string to_string() const;

  constexpr Subset with(int e) const { return Subset(bits_ | (Bits{1} << (e - 1))); }
  constexpr Subset without(int e) const { return Subset(bits_ & ~(Bits{1} << (e - 1))); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;

 private:
  Bits bits_ = 0;
};

/// Lexicographic order on sorted element lists (12 < 13 < 14 < 23 ...).
bool lex_less(Subset a, Subset b);

/// All k-subsets of `ground`, in lexicographic order.
std::vector<Subset> k_subsets(Subset ground, int k);

/// A matroid on {1..n} given by its bases, stored in lexicographic order.
/// Immutable; two matroids compare equal iff their basis lists are identical.
class Matroid {
 public:
  /// Validates cardinalities and the basis exchange axiom.
  static Matroid from_bases(int n, int rank, std::vector<Subset> bases);

  int size() const { return n_; }
  int rank() const { return rank_; }
  Subset ground() const { return Subset::range(n_); }
  const std::vector<Subset>& bases() const { return bases_; }
  std::size_t basis_count() const { return bases_.size(); }

  bool is_basis(Subset s) const { return index_.contains(s.bits()); }
  std::optional<std::size_t> index_of(Subset s) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.rank_ == b.rank_ && a.bases_ == b.bases_;
  }

  // Bypasses validation; for constructions that preserve the exchange axiom.
  static Matroid trusted(int n, int rank, std::vector<Subset> bases);

 private:
  Matroid(int n, int rank, std::vector<Subset> bases);

  int n_ = 0;
  int rank_ = 0;
  std::vector<Subset> bases_;
  std::unordered_map<Subset::Bits, std::size_t> index_;
};

/// Raised by from_bases when the exchange axiom fails for (B, B', e).
class NotAMatroid : public Error {
 public:
  NotAMatroid(Subset b, Subset b_prime, int e);
  Subset b;
  Subset b_prime;
  int e;
};

/// First exchange-axiom violation (B, B', e), if any.
struct ExchangeViolation {
  Subset b;
  Subset b_prime;
  int e;
};
std::optional<ExchangeViolation> find_exchange_violation(const std::vector<Subset>& bases);

Matroid uniform(int rank, int n);
Matroid graphic(int vertex_count, const std::vector<std::pair<int, int>>& edges);
/// Catalog: fano, pg23, example_16basis, example_14basis, square_pyramid.
Matroid named(std::string_view name);
std::vector<std::string> catalog_names();

int rank_of(const Matroid& m, Subset a);
Subset closure_of(const Matroid& m, Subset a);
/// flats[r] holds the flats of rank r, each list in lexicographic order.
std::vector<std::vector<Subset>> flats(const Matroid& m);

/// (M / contract) \ delete with the survivors relabeled 1..n' in order.
/// A dependent contract set is contracted through a maximal independent subset;
/// the rest of it (loops of the contraction) is deleted.
Matroid minor(const Matroid& m, Subset contract, Subset del);
Matroid dual(const Matroid& m);
Matroid direct_sum(const Matroid& a, const Matroid& b);

Subset loops(const Matroid& m);
Subset coloops(const Matroid& m);

/// Blocks ordered by smallest element.
std::vector<Subset> connected_components(const Matroid& m);

struct ParallelClasses {
  std::vector<Subset> classes;  // non-loop classes ordered by smallest element
  Subset loops;
};
ParallelClasses parallel_classes(const Matroid& m);

struct MinorWitness {
  Subset contract;
  Subset del;
};
struct BinaryCheck {
  bool binary = true;
  std::optional<MinorWitness> witness;  // a U_{2,4} minor when not binary
};
/// Exhaustive U_{2,4}-minor search.
BinaryCheck is_binary(const Matroid& m);

}  // namespace dressian
