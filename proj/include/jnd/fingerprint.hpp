#ifndef JND_FINGERPRINT_HPP
#define JND_FINGERPRINT_HPP

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "jnd/group.hpp"

namespace jnd {

// Isomorphism-invariant profile used to distinguish groups without running
// an isomorphism search: order, exponent, element order profile, center
// order, derived length, abelianization order profile, and the multiset of
// (element order, class size) pairs.
struct Fingerprint {
  std::uint64_t order = 0;
  std::uint64_t exponent = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> order_profile;
  std::uint64_t center_order = 0;
  std::int64_t derived_len = -1;  // -1 when not solvable
  std::vector<std::pair<std::uint64_t, std::uint64_t>> abelianization_profile;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> class_profile;

  auto tie() const {
    return std::tie(order, exponent, order_profile, center_order, derived_len,
                    abelianization_profile, class_profile);
  }
  bool operator==(const Fingerprint& rhs) const { return tie() == rhs.tie(); }
  bool operator<(const Fingerprint& rhs) const { return tie() < rhs.tie(); }

  std::string to_string() const;
};

Fingerprint fingerprint(const GroupPtr& g);

// Exact isomorphism test by backtracking over generator images (fingerprint
// prefilter first). Intended for small groups.
bool is_isomorphic(const GroupPtr& a, const GroupPtr& b);

}  // namespace jnd

#endif
