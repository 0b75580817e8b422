#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bsymb {

// Minimal unsigned big integer: little-endian base-10^9 limbs. Code sizes
// q^k overflow machine words quickly, and the report format wants exact
// decimal strings, so this carries just multiplies, powers and compares.
class BigUint {
 public:
  BigUint() : limbs_{0} {}
  explicit BigUint(uint64_t v) {
    if (v == 0) limbs_.push_back(0);
    while (v) {
      limbs_.push_back(static_cast<uint32_t>(v % kBase));
      v /= kBase;
    }
  }

  static BigUint pow_u(uint64_t base, uint64_t exp) {
    BigUint r(1);
    for (uint64_t i = 0; i < exp; ++i) r.mul_small(base);
    return r;
  }

  // f must fit in 32 bits
  void mul_small(uint64_t f) {
    uint64_t carry = 0;
    for (auto& limb : limbs_) {
      uint64_t cur = static_cast<uint64_t>(limb) * f + carry;
      limb = static_cast<uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    while (carry) {
      limbs_.push_back(static_cast<uint32_t>(carry % kBase));
      carry /= kBase;
    }
    trim();
  }

  int compare(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size())
      return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (size_t i = limbs_.size(); i-- > 0;) {
      if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
  }

  bool operator==(const BigUint& o) const { return compare(o) == 0; }
  bool operator<=(const BigUint& o) const { return compare(o) <= 0; }

  std::string str() const {
    std::string s = std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string part = std::to_string(limbs_[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

 private:
  static constexpr uint64_t kBase = 1000000000ull;
  std::vector<uint32_t> limbs_;

  void trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
  }
};

}  // namespace bsymb
