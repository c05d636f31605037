#include "grosslat/type_enumeration.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <tuple>

namespace grosslat {

BigInteger default_neighbor_prime(const BigInteger& p) { return p == 2 ? BigInteger(3) : BigInteger(2); }

TypeRecord make_type_record(const QuaternionOrder& order) {
  GrossLattice lattice = gross_lattice(order);
  MinimalBasis mb = minimal_basis(lattice);
  Classification flags = classify(lattice, mb);
  return TypeRecord{order, std::move(lattice), std::move(mb), flags};
}

std::vector<TypeRecord> enumerate_types(const BigInteger& p) {
  return enumerate_types(p, default_neighbor_prime(p));
}

std::vector<TypeRecord> enumerate_types(const BigInteger& p, const BigInteger& ell) {
  if (!is_prime(p)) throw std::invalid_argument("enumerate_types: p must be prime");
  if (!is_prime(ell) || ell == p)
    throw std::invalid_argument("enumerate_types: ell must be a prime different from p");

  auto key = [](const MinimaTriple& m) { return std::make_tuple(m.d1, m.d2, m.d3); };
  std::set<std::tuple<BigInteger, BigInteger, BigInteger>> seen;
  std::vector<TypeRecord> out;
  std::deque<std::size_t> queue;

  TypeRecord start = make_type_record(standard_maximal_order(p));
  seen.insert(key(start.minima()));
  out.push_back(std::move(start));
  queue.push_back(0);

  while (!queue.empty()) {
    const QuaternionOrder current = out[queue.front()].order;
    queue.pop_front();
    for (const auto& ideal : left_ideals_of_norm(current, ell)) {
      QuaternionOrder next = right_order(ideal);
      GrossLattice lattice = gross_lattice(next);
      MinimalBasis mb = minimal_basis(lattice);
      if (!seen.insert(key(mb.minima)).second) continue;
      Classification flags = classify(lattice, mb);
      out.push_back(TypeRecord{std::move(next), std::move(lattice), std::move(mb), flags});
      queue.push_back(out.size() - 1);
    }
  }

  std::sort(out.begin(), out.end(),
            [](const TypeRecord& a, const TypeRecord& b) { return a.minima() < b.minima(); });
  return out;
}

}  // namespace grosslat
